#ifndef BCSPH_CHEREDNIK_HPP
#define BCSPH_CHEREDNIK_HPP

#include <map>
#include <string>
#include <vector>

#include "bcsph/multipoly.hpp"
#include "bcsph/rootdata.hpp"

namespace bcsph {

/// Root data plus the weight exponent delta of the conjugating factor.
/// The transform pipeline uses delta = -2 nu with admissible nu; the symbolic
/// identity checks accept any rational delta.
struct CherednikParams {
    RootSystemBC system;
    Rational delta;
};

/// Applies the conjugated operator (x-coordinates)
///
///   delta x_j + (1 - x_j^2) d_j
///     - (a/2) sum_{i<j} (1+x_i)(1-x_j)/(x_i-x_j) (1 - s_ij)
///     + (a/2) sum_{j<k} (1+x_j)(1-x_k)/(x_j-x_k) (1 - s_jk)
///     + (a/2) sum_{k!=j} (1+x_j)(1+x_k)/(x_j+x_k) (1 - sigma_jk)
///     + iota (1 + (x_j + 1/x_j)/2) (1 - sigma_j)
///     + b (1 + 1/x_j) (1 - sigma_j)
///     - rho_j
///
/// to p. Every reflection term is computed as shape * exact quotient;
/// a failed division throws IntegrityError (tripwire, never expected).
MultiPoly apply_cherednik(const CherednikParams& params, int j, const MultiPoly& p);

/// prod_{l<=j} (D_l + delta + rho_1) 1  minus
/// prod_{l<=j} (delta + a(l-1)) * prod_{l<=j} (1 + x_l); zero iff the
/// first product identity holds.
MultiPoly verify_raising_product(const CherednikParams& params, int j);

/// prod_{l>=j} (D_l - (delta + rho_1)) prod_{l=1}^r (1 + x_l)  minus
/// prod_{l>=j} (1 - delta - iota - a(r-l)) * prod_{l=1}^r (1+x_l) *
/// prod_{l>=j} (1 - x_l); zero iff the second product identity holds.
MultiPoly verify_lowering_product(const CherednikParams& params, int j);

/// prod_j (D_j^2 - (delta + rho_1)^2) 1  minus
/// prod_j (delta + a(j-1)) (1 - delta - iota - a(r-j)) * prod_j (1 - x_j^2);
/// zero iff the weight-lowering identity holds.
MultiPoly verify_bernstein_sato(const CherednikParams& params);

/// Exact coefficient of x^{eta + e_j} in D_j x^eta, computed from the
/// operator (used to test the closed-form coefficient conjectures).
Rational leading_coefficient_probe(const CherednikParams& params,
                                   const Exponents& eta, int j);

/// Closed-form candidates for the raising coefficient of D_j on x^eta.
/// Without the derivative term: delta + a #{i<j: eta_i > eta_j}
/// + (iota/2)(1-(-1)^{eta_j}). The derivative-aware variant subtracts eta_j
/// and optionally counts #{i != j: eta_i > eta_j} instead of i < j; only the
/// all-pairs form matches the operator everywhere (see tests).
Rational raising_coefficient_no_derivative_term(const CherednikParams& params,
                                       const Exponents& eta, int j);
Rational raising_coefficient_with_derivative(const CherednikParams& params,
                                       const Exponents& eta, int j,
                                       bool count_all_pairs);

/// Exact rational matrix with m_zeta(D^2) 1 = sum_kappa M[zeta][kappa] m_kappa(x^2),
/// rows/columns indexed by the canonical partition list of weight <= maxWeight.
struct TransitionMatrix {
    CherednikParams params;
    int maxWeight = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Rational>> entries;

    int index_of(const Partition& eta) const;
    Rational diagonal(const Partition& eta) const;
};

/// Computes every row exactly, verifying W-invariance and dominance
/// triangularity as it goes. With require_invertible, a vanishing diagonal
/// entry (inadmissible delta) throws ParameterError.
TransitionMatrix build_transition_matrix(const CherednikParams& params, int maxWeight,
                                         bool require_invertible = true);

/// Even W-invariant polynomial in the spectral variable, stored in the
/// m_eta(lambda^2) basis with exact rational coefficients.
class SpectralPolynomial {
public:
    using CoeffMap = std::map<Partition, Rational>;

    SpectralPolynomial() : rank_(0) {}
    explicit SpectralPolynomial(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    void set(const Partition& eta, const Rational& c);
    Rational coefficient(const Partition& eta) const;

    /// Evaluate at y_j = lambda_j^2 (for lambda = i u pass y_j = -u_j^2).
    double eval_at_lambda_sq(const std::vector<double>& y) const;

    std::string str() const;

private:
    int rank_;
    CoeffMap coeffs_;
};

/// Solves the dominance-triangular system expressing m_eta(x^2) in the basis
/// {m_zeta(D^2) 1} and substitutes m_zeta(lambda^2); the image of
/// f_{-2nu} m_eta(tanh^2 t) under the spherical transform is then
/// f~(lambda) times this polynomial. Leading coefficient is 1/d_eta.
SpectralPolynomial l_polynomial(const CherednikParams& params, const Partition& eta,
                                const TransitionMatrix& M);

/// Closed-form diagonal candidates: products over j = 1..r, k = 0..eta_j - 1
/// of (delta + shift_j [* a] - 2k)(delta + shift_j * a + iota - 1 - 2k),
/// for the two index conventions shift_j = r - j and shift_j = j - 1.
/// Only JMinus1Shift matches the computed diagonal for all partitions.
enum class DiagClosedForm {
    RMinusJShiftNoA, // first factor missing the a, shift r - j
    RMinusJShift,    // first factor with a, shift r - j
    JMinus1Shift,    // first factor with a, shift j - 1
};
Rational d_eta_closed_form(const CherednikParams& params, const Partition& eta,
                           DiagClosedForm form);

} // namespace bcsph

#endif
