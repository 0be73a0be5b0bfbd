#ifndef RIGPCA_TESTS_ORACLES_HPP
#define RIGPCA_TESTS_ORACLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rigpca/corpus.hpp"
#include "rigpca/matrix.hpp"

// Independent reference implementations used to check the production code.
// Everything here is deliberately written along different routes than the
// library: joint-entropy RIG, Householder+QL eigenvalues, literal
// exhaustive searches.
namespace rigpca::testing {

// RIG recomputed from raw text records via H(C|W) = H(W,C) - H(W).
double rig_oracle(const std::vector<TextRecord>& texts, const std::string& word,
                  const std::string& category);

// RIG from a 2x2 contingency table (both = texts with word in category).
double rig_oracle_counts(long long total, long long in_category, long long with_word,
                         long long both);

// Eigenvalues (descending) by explicit Householder tridiagonalization
// followed by implicit-shift QL iteration.
std::vector<double> qr_eigenvalues(const Matrix& symmetric);

struct StepFitOracle {
    std::size_t k = 0;
    double alpha = 0.0;
    double objective = 0.0; // W1
};

// Exhaustive two-class step fit on values sorted descending; smallest k wins
// ties.
StepFitOracle step_fit_oracle(std::vector<double> u);

} // namespace rigpca::testing

#endif
