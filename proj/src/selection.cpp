#include "rigpca/selection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "rigpca/errors.hpp"

namespace rigpca {

namespace {

// Guards the beta >= 1/sqrt(n) boundary against last-ulp rounding: an
// attribute sitting exactly on the threshold must not be dropped.
constexpr double kTrivialityEps = 1e-12;

void require_descending(const std::vector<double>& eigenvalues) {
    for (std::size_t k = 1; k < eigenvalues.size(); ++k)
        if (eigenvalues[k] > eigenvalues[k - 1])
            throw ValidationError("eigenvalues must be sorted descending");
}

} // namespace

SelectionResult kaiser(const std::vector<double>& eigenvalues, double trace, std::size_t n,
                       bool strict) {
    require_descending(eigenvalues);
    if (n == 0) throw ValidationError("kaiser: n must be positive");
    SelectionResult res;
    res.method = "kaiser";
    res.threshold = trace / static_cast<double>(n);
    for (double lambda : eigenvalues) {
        const bool keep = strict ? lambda > res.threshold : lambda >= res.threshold;
        if (keep) ++res.retained;
    }
    return res;
}

SelectionResult broken_stick(const std::vector<double>& eigenvalues) {
    require_descending(eigenvalues);
    const std::size_t n = eigenvalues.size();
    double total = 0.0;
    for (double v : eigenvalues) total += v;
    if (total <= 0.0) throw ValidationError("broken_stick: eigenvalue sum must be positive");

    SelectionResult res;
    res.method = "broken_stick";
    res.expectations.resize(n);
    // b_k = (1/n) sum_{j=k..n} 1/j, accumulated from the tail.
    double tail = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        tail += 1.0 / static_cast<double>(k);
        res.expectations[k - 1] = tail / static_cast<double>(n);
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (eigenvalues[k] / total > res.expectations[k])
            ++res.retained;
        else
            break; // prefix rule: stop at the first failure
    }
    return res;
}

SelectionResult pca_cn(const std::vector<double>& eigenvalues, const SelectionParams& params) {
    require_descending(eigenvalues);
    if (params.condition_number <= 1.0)
        throw ValidationError("pca_cn: condition number must be > 1");
    if (eigenvalues.empty() || eigenvalues[0] <= 0.0)
        throw ValidationError("pca_cn: spectrum has no positive eigenvalue");

    SelectionResult res;
    res.method = "pca_cn";
    res.condition_number = params.condition_number;
    for (double lambda : eigenvalues) {
        if (lambda <= 0.0) break; // non-positive eigenvalues are not candidates
        const double ratio = eigenvalues[0] / lambda;
        res.ratios.push_back(ratio);
        if (ratio < params.condition_number) res.retained = res.ratios.size();
    }
    return res;
}

DoubleKaiserResult double_kaiser(const Matrix& data,
                                 const std::vector<std::string>& attribute_names) {
    if (attribute_names.size() != data.cols())
        throw ValidationError("double_kaiser: attribute name count does not match data");
    if (data.cols() < 2) throw ValidationError("double_kaiser: need at least 2 attributes");
    {
        std::set<std::string> unique(attribute_names.begin(), attribute_names.end());
        if (unique.size() != attribute_names.size())
            throw ValidationError("double_kaiser: duplicate attribute names");
    }

    DoubleKaiserResult result;
    Matrix current = data;
    std::vector<std::string> names = attribute_names;

    for (;;) {
        const std::size_t n = current.cols();
        Matrix corr;
        try {
            corr = correlation_matrix(current);
        } catch (const ValidationError& e) {
            // Map the column index back to its attribute name.
            throw ValidationError(std::string("double_kaiser: ") + e.what());
        }
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += corr(i, i);
        const double kaiser_threshold = trace / static_cast<double>(n);

        SymmetricEigen eig = symmetric_eigendecomposition(corr);
        std::vector<std::size_t> informative;
        for (std::size_t k = 0; k < n; ++k)
            if (eig.values[k] > kaiser_threshold) informative.push_back(k);

        if (informative.empty()) {
            // The Kaiser rule found nothing; beta is undefined, so fail safe
            // and keep every remaining attribute.
            result.no_informative_pcs = true;
            break;
        }

        const double importance_threshold = 1.0 / std::sqrt(static_cast<double>(n));
        std::vector<double> beta(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k : informative)
                beta[j] = std::max(beta[j], std::fabs(eig.vectors(j, k)));

        std::size_t drop = n; // sentinel: nothing to drop
        for (std::size_t j = 0; j < n; ++j) {
            if (beta[j] + kTrivialityEps >= importance_threshold) continue;
            if (drop == n || beta[j] < beta[drop] ||
                (beta[j] == beta[drop] && names[j] < names[drop]))
                drop = j;
        }
        if (drop == n) break; // no trivial attribute

        if (n == 2)
            throw ValidationError("double_kaiser: dropping '" + names[drop] +
                                  "' would reduce the attribute set to a single attribute");
        result.dropped.push_back({names[drop], result.dropped.size() + 1, beta[drop]});

        Matrix next(current.rows(), n - 1);
        std::vector<std::string> next_names;
        next_names.reserve(n - 1);
        for (std::size_t j = 0, out = 0; j < n; ++j) {
            if (j == drop) continue;
            for (std::size_t i = 0; i < current.rows(); ++i) next(i, out) = current(i, j);
            next_names.push_back(names[j]);
            ++out;
        }
        current = std::move(next);
        names = std::move(next_names);
    }

    result.informative_attributes = names;
    result.iterations = result.dropped.size();
    return result;
}

SelectionSummary select_all(const PcaModel& model, const SelectionParams& params) {
    SelectionSummary summary;
    summary.kaiser = kaiser(model.eigenvalues, model.eigenvalue_sum(), model.n_attributes,
                            params.kaiser_strict);
    summary.broken_stick = broken_stick(model.eigenvalues);
    summary.pca_cn = pca_cn(model.eigenvalues, params);
    return summary;
}

} // namespace rigpca
