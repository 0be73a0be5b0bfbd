#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace rigpca::testing {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

} // namespace

double rig_oracle_counts(long long total, long long in_category, long long with_word,
                         long long both) {
    const double n = static_cast<double>(total);
    const double n11 = static_cast<double>(both);                          // word, category
    const double n10 = static_cast<double>(with_word - both);              // word, no category
    const double n01 = static_cast<double>(in_category - both);            // no word, category
    const double n00 = n - n11 - n10 - n01;

    const double h_c = -plogp(in_category / n) - plogp((total - in_category) / n);
    if (h_c == 0.0) throw std::runtime_error("rig oracle: degenerate category");
    const double h_w = -plogp(with_word / n) - plogp((total - with_word) / n);
    const double h_wc = -plogp(n11 / n) - plogp(n10 / n) - plogp(n01 / n) - plogp(n00 / n);
    // IG(C;W) = H(C) - H(C|W) with H(C|W) = H(W,C) - H(W)
    return (h_c - (h_wc - h_w)) / h_c;
}

double rig_oracle(const std::vector<TextRecord>& texts, const std::string& word,
                  const std::string& category) {
    long long total = static_cast<long long>(texts.size());
    long long in_category = 0, with_word = 0, both = 0;
    for (const TextRecord& t : texts) {
        const bool has_cat = t.category_labels.count(category) > 0;
        const bool has_word = t.tokens.count(word) > 0;
        if (has_cat) ++in_category;
        if (has_word) ++with_word;
        if (has_cat && has_word) ++both;
    }
    return rig_oracle_counts(total, in_category, with_word, both);
}

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Similarity-transforms A to tridiagonal form with explicit Householder
// matrices. O(n^4), which is fine for oracle-sized problems.
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col + 2 < n; ++col) {
        double norm = 0.0;
        for (std::size_t i = col + 1; i < n; ++i) norm += a(i, col) * a(i, col);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;

        std::vector<double> v(n, 0.0);
        const double x0 = a(col + 1, col);
        const double alpha = x0 >= 0.0 ? -norm : norm;
        v[col + 1] = x0 - alpha;
        for (std::size_t i = col + 2; i < n; ++i) v[i] = a(i, col);
        double vnorm = 0.0;
        for (double x : v) vnorm += x * x;
        if (vnorm == 0.0) continue;

        Matrix h = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * v[i] * v[j] / vnorm;
        a = multiply(multiply(h, a), h);
    }
    d.resize(n);
    e.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);
}

// Implicit-shift QL on a tridiagonal matrix; d = diagonal, e[i] couples
// d[i] and d[i+1]. The classic eigenvalue-only iteration.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) + dd == dd) break;
            }
            if (m != l) {
                if (iter++ == 100) throw std::runtime_error("qr oracle: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                std::size_t i = m;
                bool underflow = false;
                while (i-- > l) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> qr_eigenvalues(const Matrix& symmetric) {
    Matrix a = symmetric;
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    ql_implicit(d, e);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

StepFitOracle step_fit_oracle(std::vector<double> u) {
    std::stable_sort(u.begin(), u.end(), std::greater<double>());
    const std::size_t n = u.size();
    StepFitOracle best;
    bool have = false;
    double best_w2 = 0.0;
    for (std::size_t k = 1; k <= n - 1; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) sum += u[i];
        const double alpha = sum / static_cast<double>(k);
        double w2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) w2 += (u[i] - alpha) * (u[i] - alpha);
        for (std::size_t i = k; i < n; ++i) w2 += u[i] * u[i];
        if (!have || w2 < best_w2) {
            have = true;
            best_w2 = w2;
            best.k = k;
            best.alpha = alpha;
        }
    }
    best.objective = std::sqrt(best_w2);
    return best;
}

} // namespace rigpca::testing
