#ifndef RIGPCA_RIG_HPP
#define RIGPCA_RIG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rigpca/corpus.hpp"
#include "rigpca/matrix.hpp"

namespace rigpca {

// Words x categories matrix of relative information gains, each in [0,1].
// An entry is 0 exactly when the word's presence is independent of the
// category over the corpus.
struct RigMatrix {
    Matrix values;
    std::vector<std::string> word_order;
    std::vector<std::string> category_order;
};

struct RankedWord {
    std::string word;
    double rig = 0.0;
};

// Relative information gain of word w about membership in category c:
// (H(C) - H(C|W)) / H(C), entropies over the empirical text distribution.
// The category indicator must have nonzero entropy (0 < texts < total).
double rig(const FrequencyMatrix& freq, std::size_t word, std::size_t category);

// Dense RIG matrix for all pairs. Rows are independent, so the computation
// may be split over threads; the result is identical for any thread count.
RigMatrix build_rig_matrix(const FrequencyMatrix& freq, unsigned threads = 1);

// Words sorted by RIG descending, ties broken lexicographically by word.
std::vector<RankedWord> top_informative_words(const RigMatrix& rig, std::size_t category,
                                              std::size_t n);

// Sum of the word's RIGs over all categories.
double word_informativeness(const RigMatrix& rig, std::size_t word);

} // namespace rigpca

#endif
