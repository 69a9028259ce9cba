#ifndef BCSPH_QUADRATURE_HPP
#define BCSPH_QUADRATURE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bcsph/cherednik.hpp"
#include "bcsph/gammacore.hpp"
#include "bcsph/multipoly.hpp"
#include "bcsph/rootdata.hpp"

namespace bcsph {

/// One-dimensional nodes and weights.
struct Rule1D {
    std::vector<double> nodes, weights;
};

/// Gauss-Legendre on [-1, 1].
Rule1D gauss_legendre(int n);
/// Gauss-Legendre on [lo, hi].
Rule1D gauss_legendre_ab(int n, double lo, double hi);
/// Gauss-Jacobi for the weight z^B (1-z)^A on [0, 1].
Rule1D gauss_jacobi01(int n, double A, double B);

/// Fixed-shape pairwise reduction; deterministic regardless of magnitude.
double pairwise_sum(std::vector<double> v);

/// Numeric polynomial on the m_eta basis (coefficients as doubles).
/// Serves both pictures: y_j = x_j^2 on the compact side, y_j = lambda_j^2
/// on the spectral side.
class PartitionPolyD {
public:
    PartitionPolyD() : rank_(0) {}
    explicit PartitionPolyD(int rank) : rank_(rank) {}
    static PartitionPolyD from(const SymmetricPoly& s);
    static PartitionPolyD from(const SpectralPolynomial& s);
    static PartitionPolyD unit(int rank); // the constant 1

    int rank() const { return rank_; }
    const std::map<Partition, double>& coeffs() const { return coeffs_; }
    void set(const Partition& eta, double c);
    double coefficient(const Partition& eta) const;
    void add_scaled(const PartitionPolyD& o, double c);

    double eval(const std::vector<double>& y) const;

private:
    int rank_;
    std::map<Partition, double> coeffs_;
};

enum class GridFamily { CompactJacobi, NoncompactT, Spectral };

/// Serializable descriptor of a concrete grid (order, cutoff, and the
/// self-reported convergence estimate used by the acceptance gates).
struct GridDescriptor {
    GridFamily family = GridFamily::CompactJacobi;
    int order = 0;
    double cutoff = 0.0;
    double convergence_estimate = 0.0;
};

/// Tensor rule for the compact weight in z = x^2 coordinates on [0,1]^r:
/// per-axis z^{(2b+iota-1)/2} (1-z)^{2nu-(1+iota+b+a(r-1))}, the pair factor
/// |z_i - z_j|^a folded into the stored weights, display prefactor included.
struct CompactRule {
    RootSystemBC system;
    Rational nu;
    GridDescriptor grid;
    std::vector<double> nodes;   // flattened r-tuples
    std::vector<double> weights; // one per tuple

    int point_count() const { return static_cast<int>(weights.size()); }
};

CompactRule build_compact_rule(const RootSystemBC& rs, const Rational& nu, int order);

double compact_integral(const CompactRule& rule,
                        const std::function<double(const std::vector<double>&)>& f);

/// (f, g) against the compact rule; f, g on the m_eta(x^2) basis.
double compact_inner_product(const CompactRule& rule, const PartitionPolyD& f,
                             const PartitionPolyD& g);

double compact_inner_product(const RootSystemBC& rs, const Rational& nu,
                             const PartitionPolyD& f, const PartitionPolyD& g,
                             int order);
double compact_inner_product(const RootSystemBC& rs, const Rational& nu,
                             const SymmetricPoly& f, const SymmetricPoly& g,
                             int order);

/// Extended-precision accumulation (long double, compensated) over the same
/// nodes. Useful for the a = 1 cases where the diagonal kink slows the rule.
double compact_integral_extended(const CompactRule& rule,
                                 const std::function<double(const std::vector<double>&)>& f);

/// Integral of an integrand F(t), even in every coordinate, against the
/// noncompact measure, rank <= 2. Uses the x = tanh t substitution with a
/// plain Gauss-Legendre rule in x — deliberately a different discretization
/// from the compact rule so norm-equality checks compare genuinely
/// independent numerics.
/// Throws DivergenceError when the integrand mass hugs the cutoff edge.
double noncompact_integral(const RootSystemBC& rs,
                           const std::function<double(const std::vector<double>&)>& F,
                           int order, double t_cutoff = 40.0);

struct SpectralOptions {
    CKernelKind kind = CKernelKind::Corrected;
    double constant = 1.0; // overall multiplier on the weight
    int max_degree = 8;    // degree bound (in u) used for the tail budget
};

/// Tensor rule on [0, U]^r (even extension folded in) for the weight
/// f~(iu)^2 |c(iu)|^{-2} times options.constant.
struct SpectralRule {
    RootSystemBC system;
    Rational nu;
    SpectralOptions options;
    GridDescriptor grid;
    std::vector<double> nodes;
    std::vector<double> weights;

    int point_count() const { return static_cast<int>(weights.size()); }
};

SpectralRule build_spectral_rule(const RootSystemBC& rs, const Rational& nu, int order,
                                 double cutoff, const SpectralOptions& opts = {});

/// Smallest cutoff from {20, 30, ..., 200} whose per-axis tail envelope is
/// below 1e-14 of the peak; CutoffError (with the probed range) otherwise.
double suggest_spectral_cutoff(const RootSystemBC& rs, const Rational& nu,
                               int max_degree, CKernelKind kind);

double spectral_integral(const SpectralRule& rule,
                         const std::function<double(const std::vector<double>&)>& f);

/// <p, q> in the spectral picture; p, q on the m_eta(lambda^2) basis,
/// evaluated at y_j = -u_j^2.
double spectral_inner_product(const SpectralRule& rule, const PartitionPolyD& p,
                              const PartitionPolyD& q);

double spectral_inner_product(const RootSystemBC& rs, const Rational& nu,
                              const PartitionPolyD& p, const PartitionPolyD& q,
                              int order, double cutoff,
                              const SpectralOptions& opts = {});

/// Exact rational moment ratio E[z^k]/E[1] of the beta weight
/// z^alpha (1-z)^beta, as a product of Gamma-ratio steps. The independent
/// oracle for rank-1 inner products, Jacobi coefficients and norms.
Rational beta_moment_ratio(const Rational& alpha, const Rational& beta, int k);

/// Direct tensor quadrature of the normalization integral in its z-form:
/// 2^{r(2 iota + 2b + a(r-1))} int_{[0,1]^r} prod |z_i - z_j|^a
/// prod z^{(iota+2b-1)/2} (1-z)^{nu-(1+iota+b+a(r-1))} dz.
/// The numeric cross-check for the closed form returned by n_nu.
double selberg_integral_quadrature(const RootSystemBC& rs, const Rational& nu,
                                   int order);

} // namespace bcsph

#endif
