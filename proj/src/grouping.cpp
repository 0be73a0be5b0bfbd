#include "rigpca/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rigpca/errors.hpp"

namespace rigpca {

GroupingParams GroupingParams::for_dimension(std::size_t n) {
    if (n == 0) throw ValidationError("grouping: dimension must be positive");
    GroupingParams p;
    p.zero_halfwidth = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
    return p;
}

namespace {

void sort_group(std::vector<AttributeCoefficient>& group, bool ascending) {
    std::sort(group.begin(), group.end(),
              [&](const AttributeCoefficient& a, const AttributeCoefficient& b) {
                  if (a.coefficient != b.coefficient)
                      return ascending ? a.coefficient < b.coefficient
                                       : a.coefficient > b.coefficient;
                  return a.name < b.name;
              });
}

} // namespace

GroupingResult threshold_groups(const std::vector<double>& component,
                                const std::vector<std::string>& attribute_names,
                                const GroupingParams& params, std::size_t pc_index) {
    if (component.size() != attribute_names.size())
        throw ValidationError("threshold_groups: name count does not match component length");
    if (!(params.zero_halfwidth > 0.0))
        throw ValidationError("threshold_groups: zero_halfwidth must be > 0");

    GroupingResult res;
    res.pc_index = pc_index;
    for (std::size_t i = 0; i < component.size(); ++i) {
        const AttributeCoefficient ac{attribute_names[i], component[i]};
        if (component[i] > params.zero_halfwidth)
            res.positive.push_back(ac);
        else if (component[i] < -params.zero_halfwidth)
            res.negative.push_back(ac);
        else
            res.zero.push_back(ac);
    }
    sort_group(res.positive, false);
    sort_group(res.zero, false);
    sort_group(res.negative, true); // most negative first
    return res;
}

StepFitTwoResult step_fit_two(const std::vector<double>& u) {
    const std::size_t n = u.size();
    if (n < 2) throw ValidationError("step_fit_two: need at least 2 entries");

    StepFitTwoResult res;
    res.order.resize(n);
    std::iota(res.order.begin(), res.order.end(), std::size_t{0});
    std::stable_sort(res.order.begin(), res.order.end(),
                     [&](std::size_t a, std::size_t b) { return u[a] > u[b]; });
    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = u[res.order[i]];

    // Literal evaluation of the residual for every cut; ties go to the
    // smallest k. O(n^2) but n is the attribute count, never large.
    bool have = false;
    double best_w2 = 0.0;
    for (std::size_t k = 1; k <= n - 1; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
        const double alpha = sum / static_cast<double>(k);
        double w2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) w2 += (sorted[i] - alpha) * (sorted[i] - alpha);
        for (std::size_t i = k; i < n; ++i) w2 += sorted[i] * sorted[i];
        if (!have || w2 < best_w2) {
            have = true;
            best_w2 = w2;
            res.k = k;
            res.alpha = alpha;
        }
    }
    res.objective = std::sqrt(best_w2);
    return res;
}

StepFitResult step_fit_three(const std::vector<double>& u) {
    const std::size_t n = u.size();
    if (n < 3) throw ValidationError("step_fit_three: need at least 3 entries");

    const StepFitTwoResult high = step_fit_two(u);

    // The low side is the same one-sided fit applied to the ascending
    // ordering, which is exactly the descending fit of -u.
    std::vector<double> negated(n);
    for (std::size_t i = 0; i < n; ++i) negated[i] = -u[i];
    const StepFitTwoResult low = step_fit_two(negated);

    StepFitResult res;
    res.k = high.k;
    res.alpha = high.alpha;
    res.objective_w1 = high.objective;
    res.r = low.k;
    res.beta = -low.alpha;

    std::vector<double> sorted(u);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    if (res.k + res.r >= n) {
        // Independent cuts overlapped; shrink the low class and recompute
        // its level (r can collapse to zero, leaving a two-level fit).
        res.degenerate = true;
        res.r = n - res.k - 1;
        if (res.r > 0) {
            double sum = 0.0;
            for (std::size_t i = n - res.r; i < n; ++i) sum += sorted[i];
            res.beta = sum / static_cast<double>(res.r);
        } else {
            res.beta = 0.0;
        }
    }

    double w2 = 0.0;
    for (std::size_t i = 0; i < res.k; ++i) w2 += (sorted[i] - res.alpha) * (sorted[i] - res.alpha);
    for (std::size_t i = res.k; i < n - res.r; ++i) w2 += sorted[i] * sorted[i];
    for (std::size_t i = n - res.r; i < n; ++i) w2 += (sorted[i] - res.beta) * (sorted[i] - res.beta);
    res.objective_w2 = std::sqrt(w2);
    return res;
}

GroupingResult step_groups(const std::vector<double>& component,
                           const std::vector<std::string>& attribute_names,
                           std::size_t pc_index) {
    const std::size_t n = component.size();
    if (n != attribute_names.size())
        throw ValidationError("step_groups: name count does not match component length");
    if (n < 3) throw ValidationError("step_groups: need at least 3 attributes");

    GroupingResult res;
    res.pc_index = pc_index;

    const auto [lo, hi] = std::minmax_element(component.begin(), component.end());
    if (*lo == *hi) {
        // Constant component: the step fit has no signal to cut on.
        res.degenerate = true;
        for (std::size_t i = 0; i < n; ++i)
            res.zero.push_back({attribute_names[i], component[i]});
        sort_group(res.zero, false);
        return res;
    }

    const StepFitResult fitted = step_fit_three(component);
    res.degenerate = fitted.degenerate;

    // Deterministic assignment for tied coefficients: order by value
    // descending, then by name.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (component[a] != component[b]) return component[a] > component[b];
        return attribute_names[a] < attribute_names[b];
    });
    for (std::size_t pos = 0; pos < n; ++pos) {
        const AttributeCoefficient ac{attribute_names[idx[pos]], component[idx[pos]]};
        if (pos < fitted.k)
            res.positive.push_back(ac);
        else if (pos >= n - fitted.r)
            res.negative.push_back(ac);
        else
            res.zero.push_back(ac);
    }
    sort_group(res.positive, false);
    sort_group(res.zero, false);
    sort_group(res.negative, true);
    return res;
}

ExtremeTopicReport extreme_topic_report(const RigMatrix& rig,
                                        const std::vector<double>& component,
                                        std::size_t n_categories, std::size_t n_words) {
    const std::size_t nc = rig.category_order.size();
    if (component.size() != nc)
        throw ValidationError("extreme_topic_report: component length does not match categories");
    if (n_categories < 1 || n_words < 1)
        throw ValidationError("extreme_topic_report: counts must be >= 1");
    if (nc < n_categories)
        throw ValidationError("extreme_topic_report: fewer than " +
                              std::to_string(n_categories) + " categories");

    std::vector<std::size_t> idx(nc);
    std::iota(idx.begin(), idx.end(), std::size_t{0});

    auto pick = [&](bool positive_end) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (component[a] != component[b])
                return positive_end ? component[a] > component[b] : component[a] < component[b];
            return rig.category_order[a] < rig.category_order[b];
        });
        return std::vector<std::size_t>(idx.begin(),
                                        idx.begin() + static_cast<std::ptrdiff_t>(n_categories));
    };

    auto build_end = [&](const std::vector<std::size_t>& cats) {
        ExtremeEnd end;
        for (std::size_t j : cats) end.categories.push_back(rig.category_order[j]);

        std::map<std::string, std::size_t> seen; // word -> number of top lists containing it
        for (std::size_t j : cats)
            for (const RankedWord& rw : top_informative_words(rig, j, n_words)) ++seen[rw.word];

        std::map<std::string, std::size_t> word_index;
        for (std::size_t i = 0; i < rig.word_order.size(); ++i) word_index[rig.word_order[i]] = i;

        for (const auto& [word, hits] : seen) {
            if (hits != cats.size()) continue; // keep only words common to every list
            double summed = 0.0;
            for (std::size_t j : cats) summed += rig.values(word_index.at(word), j);
            end.common_words.push_back({word, summed});
        }
        std::sort(end.common_words.begin(), end.common_words.end(),
                  [](const RankedWord& a, const RankedWord& b) {
                      if (a.rig != b.rig) return a.rig > b.rig;
                      return a.word < b.word;
                  });
        return end;
    };

    ExtremeTopicReport report;
    report.positive = build_end(pick(true));
    report.negative = build_end(pick(false));
    return report;
}

} // namespace rigpca
