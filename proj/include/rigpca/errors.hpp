#ifndef RIGPCA_ERRORS_HPP
#define RIGPCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigpca {

// Bad input data, malformed files, violated preconditions. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (non-convergence, spectrum out of tolerance). CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rigpca

#endif
