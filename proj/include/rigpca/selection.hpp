#ifndef RIGPCA_SELECTION_HPP
#define RIGPCA_SELECTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rigpca/matrix.hpp"
#include "rigpca/pca.hpp"

namespace rigpca {

struct SelectionParams {
    double condition_number = 10.0; // must be > 1
    bool kaiser_strict = true;      // strict '>' against the threshold
};

struct SelectionResult {
    std::string method;
    std::size_t retained = 0;
    // method-specific diagnostics; unused fields stay empty
    double threshold = 0.0;                  // kaiser: trace/n
    std::vector<double> expectations;        // broken stick: b_k
    std::vector<double> ratios;              // pca-cn: lambda_1 / lambda_k
    double condition_number = 0.0;           // pca-cn: the C used
};

struct DroppedAttribute {
    std::string attribute;
    std::size_t iteration = 0; // 1-based refit round in which it was dropped
    double importance = 0.0;   // its beta at drop time
};

struct DoubleKaiserResult {
    std::vector<std::string> informative_attributes; // survivors, original order
    std::vector<DroppedAttribute> dropped;           // in drop order
    std::size_t iterations = 0;                      // number of drops performed
    bool no_informative_pcs = false; // a round had no PC above the Kaiser threshold
};

// m = |{k : lambda_k > trace/n}| (>= when strict is off).
SelectionResult kaiser(const std::vector<double>& eigenvalues, double trace, std::size_t n,
                       bool strict = true);

// b_k = (1/n) * sum_{j=k..n} 1/j; retain the longest prefix with
// lambda_k / sum(lambda) > b_k, stopping at the first failure.
SelectionResult broken_stick(const std::vector<double>& eigenvalues);

// Largest k with lambda_1 / lambda_k < C; non-positive eigenvalues are
// excluded before the ratio test.
SelectionResult pca_cn(const std::vector<double>& eigenvalues, const SelectionParams& params);

// Iterative attribute selection: refit correlation PCA, find PCs above the
// Kaiser threshold, score each attribute by its largest absolute coefficient
// on those PCs, and drop the weakest attribute scoring below 1/sqrt(n).
// Repeats until no attribute is trivial.
DoubleKaiserResult double_kaiser(const Matrix& data,
                                 const std::vector<std::string>& attribute_names);

struct SelectionSummary {
    SelectionResult kaiser;
    SelectionResult broken_stick;
    SelectionResult pca_cn;
};

SelectionSummary select_all(const PcaModel& model, const SelectionParams& params);

} // namespace rigpca

#endif
