#ifndef BCSPH_ERRORS_HPP
#define BCSPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcsph {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid caller-supplied parameters (rank, multiplicities, ranges).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Internal consistency violation: an exact identity that must hold failed.
/// Carries a printable witness (e.g. a nonzero remainder polynomial).
class IntegrityError : public Error {
public:
    IntegrityError(const std::string& what, std::string witness = {})
        : Error(witness.empty() ? what : what + " [witness: " + witness + "]"),
          witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// A Gamma factor was evaluated at a non-positive integer.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::string factor = {})
        : Error(factor.empty() ? what : what + " [factor: " + factor + "]"),
          factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// Numeric integral does not decay fast enough for the requested rule.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

/// Gram matrix numerically singular; raise the order or reduce the weight.
class ConditioningError : public Error {
public:
    explicit ConditioningError(const std::string& what) : Error(what) {}
};

/// Requested spectral cutoff cannot meet the tail budget.
class CutoffError : public Error {
public:
    explicit CutoffError(const std::string& what) : Error(what) {}
};

} // namespace bcsph

#endif
