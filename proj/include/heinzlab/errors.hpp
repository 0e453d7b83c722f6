#ifndef HEINZLAB_ERRORS_HPP
#define HEINZLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heinzlab {

// Shape or dimension mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the documented domain (negative scalar, nu outside [0,1],
// negative power of a singular matrix, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Iterative kernel failed to reach its stopping criterion.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Quadrature path disagrees with the spectral path beyond the requested
// relative tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_rel_error)
        : std::runtime_error(what), achieved_(achieved_rel_error) {}
    double achieved_rel_error() const { return achieved_; }

private:
    double achieved_;
};

// Root bracketing failed (counterexample threshold search).
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed configuration or input file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heinzlab

#endif
