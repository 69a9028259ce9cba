#ifndef BCSPH_GAMMACORE_HPP
#define BCSPH_GAMMACORE_HPP

#include <complex>
#include <string>
#include <vector>

#include "bcsph/rational.hpp"
#include "bcsph/rootdata.hpp"

namespace bcsph {

using Complex = std::complex<double>;

/// Principal-branch log Gamma, Lanczos g=7 with reflection.
/// Relative accuracy ~1e-14; all kernel evaluation goes through here.
Complex log_gamma(Complex z);

/// log Gamma for x > 0 (thin wrapper over std::lgamma).
double log_gamma_positive(double x);

/// Product of Gamma factors with affine arguments in nu and one lambda
/// coordinate, evaluated in log space. sign +1 puts the factor in the
/// numerator, -1 in the denominator.
struct GammaProductKernel {
    struct Factor {
        int sign;
        double constant; // argument = constant + coeff * lambda[axis] (+ coeff2 * lambda[axis2])
        double coeff = 0.0;
        int axis = -1; // -1: lambda-free
        double coeff2 = 0.0;
        int axis2 = -1;
        std::string label;
    };

    double log_prefactor = 0.0;
    std::vector<Factor> factors;

    /// Throws PoleError naming the factor if any argument sits at a
    /// non-positive integer.
    Complex log_eval(const std::vector<Complex>& lambda) const;
    double log_eval_constant() const; // for lambda-free kernels
};

/// gindikin_gamma: log prod_{j=1..r} Gamma(sigma - (a/2)(j-1)).
double gindikin_log_gamma(double a, int r, double sigma);

/// Normalization integral of the canonical weight against the measure,
/// evaluated by its Selberg closed form. Requires nu > iota + b + a(r-1).
double n_nu(const RootSystemBC& rs, const Rational& nu);

/// One-step quotient N_{nu+1}/N_nu via its closed rational product
/// (no Gamma evaluations); must agree with the n_nu quotient.
double n_ratio(const RootSystemBC& rs, const Rational& nu);

/// Kernel whose evaluation at lambda is the spherical transform of the
/// canonical weight f_{-2nu}: N_nu times the Gamma quotient product.
GammaProductKernel spherical_transform_kernel(const RootSystemBC& rs, double nu);

Complex f_tilde(const RootSystemBC& rs, const Rational& nu,
                const std::vector<Complex>& lambda);

/// f~ at lambda = i u (the physical spectral axis); value is real positive.
double f_tilde_imaginary(const RootSystemBC& rs, const Rational& nu,
                         const std::vector<double>& u);
double log_f_tilde_imaginary(const RootSystemBC& rs, const Rational& nu,
                             const std::vector<double>& u);

/// Relative discrepancy in the one-step nu recursion of beta = f~/N:
/// beta_nu(lambda) * prod(quadratic in lambda) vs beta_{nu+1} * prod(...).
double beta_recursion_check(const RootSystemBC& rs, const Rational& nu,
                            const std::vector<Complex>& lambda);

/// Which Gamma-product to use for the Harish-Chandra c-function.
/// Corrected is the Gindikin-Karpelevich product for this normalization of
/// the root data — the density under which the spectral orthogonality
/// actually closes. Doubled is the convention variant whose rank-one factors
/// carry 2 lambda and 2b; it differs by a lambda-dependent factor and is
/// kept for comparison and diagnostics (see README).
enum class CKernelKind { Doubled, Corrected };

GammaProductKernel c_kernel(const RootSystemBC& rs, CKernelKind kind);

Complex c_function(const RootSystemBC& rs, const std::vector<Complex>& lambda,
                   CKernelKind kind = CKernelKind::Doubled);

/// |c(i u)|^{-2} without any normalization constant. Vanishes (exactly) at
/// the walls; throws PoleError only if a denominator factor degenerates.
double spectral_density(const RootSystemBC& rs, const std::vector<double>& u,
                        CKernelKind kind);

/// Candidate normalization constants: a unit-shifted Gamma product over rho,
/// c(rho) on the doubled kernel, and c(rho) on the corrected kernel. The
/// absolute normalization is certified only at rank 1 (see tests).
double c0_shifted_product(const RootSystemBC& rs);
double c0_from_c_at_rho(const RootSystemBC& rs);
double c0_from_corrected_at_rho(const RootSystemBC& rs);

struct PlancherelOptions {
    CKernelKind kind = CKernelKind::Doubled;
    // When set, replaces (2 pi)^-r c_0^2 wholesale.
    bool has_constant_override = false;
    double constant_override = 1.0;
};

/// (2 pi)^-r c_0^2 / (c(lambda) c(-lambda)) on lambda = i u.
double plancherel_density(const RootSystemBC& rs, const std::vector<double>& u,
                          const PlancherelOptions& opts = {});

/// Rank-one spherical function: the Gauss hypergeometric series
///   2F1((rho - lambda)/2, (rho + lambda)/2; alpha + 1; -sinh^2 t)
/// with alpha = b + (iota-1)/2, evaluated through the tanh^2 t argument
/// transformation so the series converges for every real t.
/// Normalized to 1 at t = 0; identically 1 at lambda = rho.
double spherical_rank1(const RootSystemBC& rs, Complex lambda, double t);

struct JacobiParametersRank1 {
    double alpha, beta, rho;
};
JacobiParametersRank1 jacobi_parameters_rank1(const RootSystemBC& rs);

} // namespace bcsph

#endif
