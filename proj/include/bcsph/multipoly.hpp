#ifndef BCSPH_MULTIPOLY_HPP
#define BCSPH_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "bcsph/rational.hpp"
#include "bcsph/rootdata.hpp"

namespace bcsph {

/// Exponent tuple, one entry per variable.
using Exponents = std::vector<int>;

/// Graded-lexicographic term order; the canonical order for serialization.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse exact polynomial in x_1..x_r with rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MultiPoly() : rank_(0) {}
    explicit MultiPoly(int rank) : rank_(rank) {}

    static MultiPoly constant(int rank, const Rational& c);
    static MultiPoly one(int rank) { return constant(rank, Rational(1)); }
    /// The variable x_j, 1-based.
    static MultiPoly variable(int rank, int j);
    static MultiPoly monomial(int rank, const Exponents& e, const Rational& c);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree, -1 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const;

    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& c) const;
    /// Multiply by the monomial x^e.
    MultiPoly shifted(const Exponents& e) const;

    bool operator==(const MultiPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Partial derivative in x_j (1-based).
    MultiPoly derivative(int j) const;

    /// Substitution x_k -> sign[k] x_{perm[k]}.
    MultiPoly weyl_act(const WeylElement& w) const;

    /// Exact division by x_j (1-based); IntegrityError if not divisible.
    MultiPoly divide_by_variable(int j) const;
    /// Exact division by x_i - s x_j with s = +-1 (1-based indices);
    /// IntegrityError carrying the remainder if not divisible.
    MultiPoly divide_by_linear(int i, int j, int s) const;

    double eval(const std::vector<double>& x) const;

    std::string str() const; // human-readable, canonical term order

private:
    int rank_;
    TermMap terms_;
};

MultiPoly weyl_act(const WeylElement& w, const MultiPoly& p);

/// Exact quotient p/d for the divisors arising from the reflection terms:
/// d must be exactly x_j, x_i - x_j, or x_i + x_j (unit coefficients).
/// ParameterError for any other divisor; IntegrityError with the remainder
/// when d does not divide p.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

/// W-invariant even polynomial expressed in the m_eta(x^2) basis.
class SymmetricPoly {
public:
    using CoeffMap = std::map<Partition, Rational>;

    SymmetricPoly() : rank_(0) {}
    explicit SymmetricPoly(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set(const Partition& eta, const Rational& c);
    Rational coefficient(const Partition& eta) const;

    MultiPoly expand() const;

    std::string str() const;

private:
    int rank_;
    CoeffMap coeffs_;
};

/// The orbit sum m_eta(x_1^2, ..., x_r^2) as a plain polynomial:
/// every monomial of the S_r-orbit of the doubled exponents, coefficient 1.
MultiPoly monomial_symmetric_x2(const Partition& eta);

/// Distinct S_r-permutations of the parts of eta.
std::vector<Exponents> orbit_of(const Partition& eta);

/// Exact conversion to the m_eta(x^2) basis. IntegrityError if p is not
/// even in every variable or not W-invariant (names a violating generator).
SymmetricPoly to_symmetric(const MultiPoly& p);

} // namespace bcsph

#endif
