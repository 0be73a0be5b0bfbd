#ifndef RIGPCA_GROUPING_HPP
#define RIGPCA_GROUPING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rigpca/rig.hpp"

namespace rigpca {

struct GroupingParams {
    double zero_halfwidth = 0.0; // must be > 0

    // The paper-style default: half the importance threshold, 1/(2*sqrt(n)).
    static GroupingParams for_dimension(std::size_t n);
};

struct AttributeCoefficient {
    std::string name;
    double coefficient = 0.0;
};

// Partition of all attributes for one PC. Positive is sorted by coefficient
// descending, negative by descending magnitude (most negative first), zero
// by coefficient descending.
struct GroupingResult {
    std::size_t pc_index = 0; // 1-based
    std::vector<AttributeCoefficient> positive;
    std::vector<AttributeCoefficient> zero;
    std::vector<AttributeCoefficient> negative;
    bool degenerate = false; // constant component or collapsed step fit
};

struct StepFitTwoResult {
    std::size_t k = 0;       // size of the fitted high class, in [1, n-1]
    double alpha = 0.0;      // mean of the k largest entries
    double objective = 0.0;  // W1, the residual norm
    std::vector<std::size_t> order; // indices of u sorted descending (stable)
};

struct StepFitResult {
    std::size_t k = 0;
    std::size_t r = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double objective_w1 = 0.0; // two-class residual of the k-side fit
    double objective_w2 = 0.0; // three-class residual
    bool degenerate = false;   // cuts overlapped and r was shrunk
};

// Fixed-threshold partition: > +halfwidth positive, < -halfwidth negative,
// else zero.
GroupingResult threshold_groups(const std::vector<double>& component,
                                const std::vector<std::string>& attribute_names,
                                const GroupingParams& params, std::size_t pc_index = 0);

// Least-squares fit of (a,...,a,0,...,0) to u sorted descending; k chosen
// to minimize the residual, ties resolved to the smallest k.
StepFitTwoResult step_fit_two(const std::vector<double>& u);

// Three-level fit via two independent one-sided fits: k on u descending,
// r on u ascending. Overlapping cuts (k + r >= n) shrink r and set the
// degenerate flag.
StepFitResult step_fit_three(const std::vector<double>& u);

// Step-fit partition: top-k attributes positive, bottom-r negative, rest
// zero. A constant component is degenerate: everything lands in zero.
GroupingResult step_groups(const std::vector<double>& component,
                           const std::vector<std::string>& attribute_names,
                           std::size_t pc_index = 0);

struct ExtremeEnd {
    std::vector<std::string> categories; // the n_categories most extreme
    std::vector<RankedWord> common_words; // intersection of per-category top
                                          // lists; rig = summed RIG over the
                                          // selected categories
};

struct ExtremeTopicReport {
    ExtremeEnd positive;
    ExtremeEnd negative;
};

// Per end: the n_categories with the largest (resp. most negative)
// coefficients; common words are those appearing in every selected
// category's top-n_words list, ordered by summed RIG descending.
ExtremeTopicReport extreme_topic_report(const RigMatrix& rig,
                                        const std::vector<double>& component,
                                        std::size_t n_categories = 10,
                                        std::size_t n_words = 150);

} // namespace rigpca

#endif
