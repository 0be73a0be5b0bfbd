#include "rigpca/pca.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "rigpca/errors.hpp"

namespace rigpca {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

// Column sign convention: entry sum >= 0; an exactly-zero sum falls back to
// making the largest-magnitude entry positive. Applying it twice is a no-op.
void fix_column_signs(Matrix& vectors) {
    for (std::size_t k = 0; k < vectors.cols(); ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < vectors.rows(); ++i) sum += vectors(i, k);
        bool flip;
        if (sum != 0.0) {
            flip = sum < 0.0;
        } else {
            std::size_t at = 0;
            double best = -1.0;
            for (std::size_t i = 0; i < vectors.rows(); ++i) {
                double mag = std::fabs(vectors(i, k));
                if (mag > best) {
                    best = mag;
                    at = i;
                }
            }
            flip = vectors(at, k) < 0.0;
        }
        if (flip)
            for (std::size_t i = 0; i < vectors.rows(); ++i) vectors(i, k) = -vectors(i, k);
    }
}

} // namespace

SymmetricEigen symmetric_eigendecomposition(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n)
        throw ValidationError("eigendecomposition requires a non-empty square matrix");

    Matrix a = m;
    Matrix v = Matrix::identity(n);
    const double tolerance = 1e-12 * frobenius(a);
    const std::uint64_t rotation_budget = 100ull * n * n;
    std::uint64_t rotations = 0;

    if (n > 1) {
        while (off_diagonal_frobenius(a) > tolerance) {
            // One cyclic-by-rows sweep; fixed order keeps the result
            // independent of anything but the input bytes.
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (apq == 0.0) continue;
                    if (++rotations > rotation_budget)
                        throw NumericalError(
                            "Jacobi eigensolver did not converge within " +
                            std::to_string(rotation_budget) + " rotations (off-diagonal norm " +
                            std::to_string(off_diagonal_frobenius(a)) + ")");

                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;

                    const double app = a(p, p);
                    const double aqq = a(q, q);
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (i == p || i == q) continue;
                        const double aip = a(i, p);
                        const double aiq = a(i, q);
                        a(i, p) = c * aip - s * aiq;
                        a(p, i) = a(i, p);
                        a(i, q) = s * aip + c * aiq;
                        a(q, i) = a(i, q);
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        const double vip = v(i, p);
                        const double viq = v(i, q);
                        v(i, p) = c * vip - s * viq;
                        v(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }

    // Sort eigenpairs by value descending; equal values keep diagonal order.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
    }
    fix_column_signs(out.vectors);
    return out;
}

Matrix correlation_matrix(const Matrix& data) {
    const std::size_t rows = data.rows();
    const std::size_t cols = data.cols();
    if (rows < 2) throw ValidationError("correlation requires at least 2 observations");
    if (cols == 0) throw ValidationError("correlation requires at least 1 attribute");

    std::vector<double> mean(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = data(0, j);
        double hi = data(0, j);
        double sum = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double x = data(i, j);
            sum += x;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        if (lo == hi)
            throw ValidationError("zero variance in attribute " + std::to_string(j));
        mean[j] = sum / static_cast<double>(rows);
    }

    std::vector<double> sd(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double d = data(i, j) - mean[j];
            ss += d * d;
        }
        if (ss <= 0.0)
            throw ValidationError("zero variance in attribute " + std::to_string(j));
        sd[j] = std::sqrt(ss / static_cast<double>(rows - 1));
    }

    Matrix corr(cols, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        corr(j, j) = 1.0;
        for (std::size_t k = j + 1; k < cols; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < rows; ++i)
                s += (data(i, j) - mean[j]) * (data(i, k) - mean[k]);
            double r = s / (static_cast<double>(rows - 1) * sd[j] * sd[k]);
            r = std::clamp(r, -1.0, 1.0);
            corr(j, k) = r;
            corr(k, j) = r;
        }
    }
    return corr;
}

double PcaModel::eigenvalue_sum() const {
    double s = 0.0;
    for (double v : eigenvalues) s += v;
    return s;
}

PcaModel fit(const Matrix& data) {
    const std::size_t rows = data.rows();
    const std::size_t cols = data.cols();
    Matrix corr = correlation_matrix(data);

    PcaModel model;
    model.n_attributes = cols;
    model.column_means.resize(cols);
    model.column_stds.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rows; ++i) sum += data(i, j);
        model.column_means[j] = sum / static_cast<double>(rows);
    }
    for (std::size_t j = 0; j < cols; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double d = data(i, j) - model.column_means[j];
            ss += d * d;
        }
        model.column_stds[j] = std::sqrt(ss / static_cast<double>(rows - 1));
    }

    SymmetricEigen eig = symmetric_eigendecomposition(corr);
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (eig.values[k] < 0.0) {
            if (eig.values[k] >= -1e-8)
                eig.values[k] = 0.0;
            else
                throw NumericalError("correlation eigenvalue " + std::to_string(eig.values[k]) +
                                     " below -1e-8");
        }
    }
    model.eigenvalues = std::move(eig.values);
    model.components = std::move(eig.vectors);

    const double total = model.eigenvalue_sum();
    if (total <= 0.0) throw NumericalError("correlation spectrum sums to zero");
    model.variance_fraction.resize(cols);
    for (std::size_t k = 0; k < cols; ++k)
        model.variance_fraction[k] = model.eigenvalues[k] / total;
    return model;
}

double variance_explained(const PcaModel& model, std::size_t m) {
    if (m < 1 || m > model.eigenvalues.size())
        throw ValidationError("variance_explained: m out of range");
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += model.variance_fraction[k];
    return s;
}

ScoreMatrix scores(const PcaModel& model, const Matrix& data, std::size_t m) {
    if (data.cols() != model.n_attributes)
        throw ValidationError("scores: data has " + std::to_string(data.cols()) +
                              " attributes, model expects " + std::to_string(model.n_attributes));
    if (m < 1 || m > model.n_attributes) throw ValidationError("scores: m out of range");

    ScoreMatrix out;
    out.pc_count = m;
    out.scores = Matrix(data.rows(), m);
    std::vector<double> z(model.n_attributes);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (std::size_t j = 0; j < model.n_attributes; ++j)
            z[j] = (data(i, j) - model.column_means[j]) / model.column_stds[j];
        for (std::size_t k = 0; k < m; ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j < model.n_attributes; ++j)
                s += z[j] * model.components(j, k);
            out.scores(i, k) = s;
        }
    }
    return out;
}

PcaModel dual_fit(const Matrix& data) {
    return fit(data.transposed());
}

} // namespace rigpca
