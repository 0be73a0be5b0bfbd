#ifndef RIGPCA_IO_HPP
#define RIGPCA_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rigpca/corpus.hpp"
#include "rigpca/pca.hpp"
#include "rigpca/rig.hpp"

namespace rigpca {

// Decimal with up to `digits` significant digits ("%.*g"), locale-free.
std::string format_sig(double x, int digits = 12);

// FNV-1a 64-bit, hex-encoded; used for artifact fingerprints.
std::string fnv1a64_hex(const std::string& bytes);
std::string hash_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Frequency matrix TSV: header `word<TAB>cat1...catN`, integer cells, plus a
// sidecar JSON (`<path>.meta.json`) carrying the marginals.
void write_frequency_matrix_tsv(const FrequencyMatrix& freq, const std::filesystem::path& path);
FrequencyMatrix read_frequency_matrix_tsv(const std::filesystem::path& path);

// RIG matrix TSV: same header shape, cells with 12 significant digits.
std::string rig_matrix_tsv(const RigMatrix& rig);
RigMatrix read_rig_matrix_tsv(const std::filesystem::path& path);

// Model JSON: eigenvalues, variance_fraction, components (column-major
// array-of-arrays), means, stds, attribute names. Doubles round-trip exactly.
std::string pca_model_json(const PcaModel& model, const std::vector<std::string>& attributes);
struct NamedPcaModel {
    PcaModel model;
    std::vector<std::string> attributes;
};
NamedPcaModel read_pca_model_json(const std::filesystem::path& path);

} // namespace rigpca

#endif
