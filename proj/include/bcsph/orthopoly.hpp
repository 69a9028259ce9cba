#ifndef BCSPH_ORTHOPOLY_HPP
#define BCSPH_ORTHOPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bcsph/cherednik.hpp"
#include "bcsph/quadrature.hpp"

namespace bcsph {

/// Orthogonal family on the compact side: for every partition of weight
/// <= maxWeight, the unique polynomial with leading coefficient 2^{2|eta|}
/// on m_eta(x^2) orthogonal to everything strictly earlier in the canonical
/// order, plus its squared norm.
struct JacobiFamily {
    RootSystemBC system;
    Rational nu;
    int maxWeight = 0;
    GridDescriptor grid;
    std::vector<Partition> order_list;
    std::map<Partition, PartitionPolyD> polys;
    std::map<Partition, double> norms;
    /// Largest norm shrinkage ||P_eta||^2 / ||leading term||^2 encountered;
    /// small values flag an ill-conditioned Gram matrix.
    double condition_estimate = 1.0;
};

/// Modified Gram-Schmidt (one reorthogonalization pass) over the canonical
/// partition order against the compact inner product. The processing order
/// refines dominance, so the output is dominance-triangular.
/// ConditioningError when a pivot collapses below 1e3 eps of its leading mass.
JacobiFamily gram_schmidt_jacobi(const RootSystemBC& rs, const Rational& nu,
                                 int maxWeight, int order);

/// As above but over a caller-supplied linear order (must still refine
/// dominance for the triangularity guarantees; used by the order-dependence
/// probes which deliberately permute incomparable blocks).
JacobiFamily gram_schmidt_jacobi_ordered(const RootSystemBC& rs, const Rational& nu,
                                         const std::vector<Partition>& order_list,
                                         int order);

std::map<Partition, double> jacobi_norms(const JacobiFamily& family);

/// Spectral-side families: transforms of the compact family (q-side) and the
/// independent Gram-Schmidt family with unit leading coefficient (mk-side).
struct SpectralFamily {
    RootSystemBC system;
    Rational nu;
    int maxWeight = 0;
    GridDescriptor grid;
    SpectralOptions options;
    std::vector<Partition> order_list;
    std::map<Partition, PartitionPolyD> qpolys;
    std::map<Partition, double> qnorms;
    std::map<Partition, PartitionPolyD> mkpolys;
    std::map<Partition, double> mknorms;
};

/// q_eta = sum_zeta coeff(P_eta, m_zeta) l_zeta: the transform images of the
/// compact family, exact rational l-polynomials contracted with the float
/// Gram-Schmidt coefficients. Norms filled against the supplied rule.
SpectralFamily transform_H(const JacobiFamily& family, const TransitionMatrix& M,
                           const SpectralRule& rule);

/// Fills the mk-side of the family by Gram-Schmidt in the m_eta(lambda^2)
/// basis with leading coefficient pinned to 1.
void gram_schmidt_mk(SpectralFamily& family, const SpectralRule& rule);

struct TransformOrthogonalityRow {
    Partition eta;
    double proportionality_defect = 0.0; // angle defect between q and mk coefficients
    double offdiagonal_mass = 0.0;       // worst normalized |<q_eta, q_zeta>|, zeta != eta
    double norm_ratio_defect = 0.0;      // |（||q||^2/||q_0||^2)/(||P||^2/||P_0||^2) - 1|
    double absolute_norm_defect = 0.0;   // only meaningful when the constant is trusted
};

struct TransformOrthogonalityReport {
    std::vector<TransformOrthogonalityRow> rows;
    double worst_proportionality = 0.0;
    double worst_offdiagonal = 0.0;
    double worst_norm_ratio = 0.0;
    double worst_absolute = 0.0;
    double empirical_constant = 0.0; // ||P_0||^2 / ||q_0||^2 under the rule's weight
};

/// End-to-end check: builds the compact family, its transform images, and the
/// independent spectral family, then reports proportionality, orthogonality
/// and norm-ratio defects per partition.
TransformOrthogonalityReport verify_transform_orthogonality(const RootSystemBC& rs, const Rational& nu,
                                   int maxWeight, int compact_order,
                                   int spectral_order, double cutoff,
                                   const SpectralOptions& opts = {});

/// Norm equality across the change of variables: squared norm of
/// f_{-2nu}(t) P_eta(tanh t) against the noncompact measure vs the compact
/// squared norm of P_eta, by genuinely different quadratures. Returns the
/// relative discrepancy.
double norm_equality_check(const RootSystemBC& rs, const Rational& nu,
                       const Partition& eta, int order);

struct WilsonFitReport {
    int degree = 0;
    std::array<double, 4> parameters{};
    double scale = 0.0;    // fitted multiple of the Wilson polynomial
    double residual = 0.0; // relative L2 defect on the probe grid
};

/// Exploratory: least-squares fit of the degree-n Wilson polynomial (in the
/// variable x = u/2) against the mk polynomial of weight n at rank 1.
/// Never gates acceptance; used to search for a parameter dictionary.
WilsonFitReport wilson_crosscheck_rank1(const RootSystemBC& rs, const Rational& nu,
                                        int n, const std::array<double, 4>& params,
                                        int spectral_order, double cutoff);

/// Wilson polynomial W_n(x^2; a, b, c, d) via its terminating 4F3 series.
double wilson_polynomial(int n, double x_sq, const std::array<double, 4>& p);

} // namespace bcsph

#endif
