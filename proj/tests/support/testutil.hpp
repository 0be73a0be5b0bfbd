#ifndef RIGPCA_TESTS_TESTUTIL_HPP
#define RIGPCA_TESTS_TESTUTIL_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "rigpca/matrix.hpp"

namespace rigpca::testing {

// All test randomness goes through raw mt19937 draws; the engine's output
// sequence is pinned by the standard, unlike the distribution adapters.
inline std::uint32_t draw(std::mt19937& g) { return g(); }

inline std::size_t below(std::mt19937& g, std::size_t n) {
    return static_cast<std::size_t>(g() % n);
}

inline double u01(std::mt19937& g) {
    return (static_cast<double>(g()) + 0.5) * (1.0 / 4294967296.0); // in (0,1)
}

inline double uniform(std::mt19937& g, double lo, double hi) {
    return lo + (hi - lo) * u01(g);
}

inline double normal(std::mt19937& g) {
    const double u1 = u01(g);
    const double u2 = u01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline Matrix random_data(std::mt19937& g, std::size_t rows, std::size_t cols, double lo = -1.0,
                          double hi = 1.0) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(g, lo, hi);
    return m;
}

} // namespace rigpca::testing

#endif
