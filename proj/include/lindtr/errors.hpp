#ifndef LINDTR_ERRORS_HPP
#define LINDTR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lindtr {

/// Matrix/vector dimension mismatch or non-square input where square is required.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Operator or system size beyond the configured maximum.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation outside a schedule's domain, an index out of range, or an
/// argument outside its permitted interval.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid model or rescaling parameters (negative rates, a <= 1/2, ...).
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// A physical or structural invariant failed validation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration caps exceeded, diverged integrations, non-finite results.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lindtr

#endif
