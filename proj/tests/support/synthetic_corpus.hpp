#ifndef RIGPCA_TESTS_SYNTHETIC_CORPUS_HPP
#define RIGPCA_TESTS_SYNTHETIC_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "rigpca/corpus.hpp"

namespace rigpca::testing {

// The bundled demo corpus: 500 texts, 12 categories in 3 planted topic
// clusters of 4 near-duplicate categories each, 300 words (3 x 80 topic
// words + 60 shared). Fully deterministic; regenerating must reproduce
// data/synthetic_corpus.jsonl byte for byte.
std::vector<TextRecord> planted_cluster_records();

std::string planted_cluster_jsonl();

// Category name -> planted cluster id (0..2).
int planted_cluster_of(const std::string& category);

// Small random corpora for oracle sweeps. Guarantees every category is
// non-degenerate (present in at least one text, absent from at least one).
std::vector<TextRecord> random_corpus(std::uint32_t seed, std::size_t max_texts = 50,
                                      std::size_t max_words = 20, std::size_t max_categories = 5,
                                      bool single_label = false);

} // namespace rigpca::testing

#endif
