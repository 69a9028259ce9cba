#include <doctest.h>

#include <cmath>

#include "bcsph/errors.hpp"
#include "bcsph/quadrature.hpp"

using namespace bcsph;
using doctest::Approx;

namespace {

const RootSystemBC kRank1 = make_root_system(1, Rational(2), Rational(1), Rational(1));
const RootSystemBC kRank2 = make_root_system(2, Rational(2), Rational(1), Rational(1));

double rel_err(double got, double expect) {
    return std::abs(got - expect) / std::abs(expect);
}

} // namespace

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    Rule1D r = gauss_legendre_ab(12, 0.0, 1.0);
    double s3 = 0, s7 = 0;
    for (size_t k = 0; k < r.nodes.size(); ++k) {
        s3 += r.weights[k] * std::pow(r.nodes[k], 3);
        s7 += r.weights[k] * std::pow(r.nodes[k], 7);
    }
    CHECK(s3 == Approx(0.25).epsilon(1e-14));
    CHECK(s7 == Approx(0.125).epsilon(1e-14));
}

TEST_CASE("gauss-jacobi rules are sane across orders") {
    // Nodes strictly inside (0,1) and ascending, weights positive, unit mass
    // equal to the beta function. Guards the eigenvalue path wholesale.
    const double A = 6.0, B = 1.0;
    const double mass_exact =
        std::exp(std::lgamma(B + 1) + std::lgamma(A + 1) - std::lgamma(A + B + 2));
    for (int n = 8; n <= 160; n += 8) {
        Rule1D r = gauss_jacobi01(n, A, B);
        double mass = 0.0;
        for (int k = 0; k < n; ++k) {
            CHECK(r.nodes[k] > 0.0);
            CHECK(r.nodes[k] < 1.0);
            CHECK(r.weights[k] > 0.0);
            if (k) CHECK(r.nodes[k] > r.nodes[k - 1]);
            mass += r.weights[k];
        }
        CHECK(rel_err(mass, mass_exact) < 1e-13);
    }
}

TEST_CASE("gauss-jacobi moments match the exact beta-moment ladder") {
    // weight z^B (1-z)^A with half-integer A
    const double A = 5.5, B = 1.5;
    Rule1D r = gauss_jacobi01(24, A, B);
    double m0 = 0;
    for (size_t k = 0; k < r.nodes.size(); ++k) m0 += r.weights[k];
    for (int mom = 1; mom <= 4; ++mom) {
        double mk = 0;
        for (size_t k = 0; k < r.nodes.size(); ++k)
            mk += r.weights[k] * std::pow(r.nodes[k], mom);
        Rational exact = beta_moment_ratio(Rational(3, 2), Rational(11, 2), mom);
        CHECK(rel_err(mk / m0, exact.to_double()) < 1e-13);
    }
}

TEST_CASE("compact rule: rank-1 normalization and moment ratio") {
    CompactRule rule = build_compact_rule(kRank1, Rational(4), 40);
    PartitionPolyD one = PartitionPolyD::unit(1);
    // <1,1> = 2^4 B(2,6) = 8/21 (the Selberg value with doubled exponent)
    double i11 = compact_inner_product(rule, one, one);
    CHECK(rel_err(i11, 8.0 / 21.0) < 1e-12);
    // <z>/<1> = 1/4 from the beta-moment ladder (alpha' = 1, beta' = 5)
    PartitionPolyD z(1);
    z.set(Partition({1}), 1.0);
    CHECK(rel_err(compact_inner_product(rule, z, one) / i11, 0.25) < 1e-12);
    CHECK(rel_err(beta_moment_ratio(Rational(1), Rational(5), 1).to_double(), 0.25) <
          1e-15);
}

TEST_CASE("compact rule: rank-2 exactness against expanded beta moments") {
    // a = 2 makes the pair factor polynomial, so the tensor rule is exact and
    // must match the rational evaluation via (z1 - z2)^2 = z1^2 - 2 z1 z2 + z2^2.
    CompactRule rule = build_compact_rule(kRank2, Rational(6), 30);
    PartitionPolyD one = PartitionPolyD::unit(2);
    double i11 = compact_inner_product(rule, one, one);
    // per-axis moments: M_k = B(2 + k, 8)
    Rational M0(1, 72), M1(1, 360), M2(1, 1320);
    Rational exact = Rational(4096) * Rational(2) * (M0 * M2 - M1 * M1);
    CHECK(rel_err(i11, exact.to_double()) < 1e-12);
    // <m_(1,0)>: the integrand (z1+z2)(z1-z2)^2 expands to 2(M3 M0 - M2 M1)
    PartitionPolyD m10(2);
    m10.set(Partition({1, 0}), 1.0);
    Rational M3(1, 3960); // B(5, 8)
    Rational exact10 = Rational(4096) * Rational(2) * (M3 * M0 - M2 * M1);
    CHECK(rel_err(compact_inner_product(rule, m10, one), exact10.to_double()) < 1e-12);
}

TEST_CASE("compact rule: a = 4 exactness against expanded beta moments") {
    // (z1 - z2)^4 expands over the per-axis moments M_k = B(2 + k, 8):
    // <(z1-z2)^4> = 2 M4 M0 - 8 M3 M1 + 6 M2^2.
    RootSystemBC rs = make_root_system(2, Rational(4), Rational(1), Rational(1));
    CompactRule rule = build_compact_rule(rs, Rational(7), 30);
    PartitionPolyD one = PartitionPolyD::unit(2);
    Rational M0(1, 72), M1(1, 360), M2(1, 1320), M3(1, 3960), M4(1, 10296);
    Rational exact = Rational(65536) * (Rational(2) * M4 * M0 -
                                        Rational(8) * M3 * M1 +
                                        Rational(6) * M2 * M2);
    CHECK(rel_err(compact_inner_product(rule, one, one), exact.to_double()) < 1e-12);
}

TEST_CASE("transform of the canonical weight decays at least exponentially") {
    // log-scale slope test along the imaginary axis: the per-axis slope of
    // log f~ settles near -pi/2, certainly below -1.
    for (double u = 8.0; u <= 28.0; u += 4.0) {
        double slope = log_f_tilde_imaginary(kRank1, Rational(4), {u + 1.0}) -
                       log_f_tilde_imaginary(kRank1, Rational(4), {u});
        CHECK(slope < -1.0);
    }
    // rank 2: the polynomial prefactor |u|^{2s-1} delays the asymptote, so
    // probe further out where the -pi/2 slope dominates.
    RootSystemBC rs2 = make_root_system(2, Rational(2), Rational(1), Rational(1));
    for (double u = 16.0; u <= 32.0; u += 4.0) {
        double slope = log_f_tilde_imaginary(rs2, Rational(6), {u + 1.0, 0.5}) -
                       log_f_tilde_imaginary(rs2, Rational(6), {u, 0.5});
        CHECK(slope < -1.0);
    }
}

TEST_CASE("compact rule is symmetric in its arguments' variables") {
    CompactRule rule = build_compact_rule(kRank2, Rational(6), 24);
    double fwd = compact_integral(rule, [](const std::vector<double>& z) {
        return z[0] * z[0] * z[1];
    });
    double swp = compact_integral(rule, [](const std::vector<double>& z) {
        return z[1] * z[1] * z[0];
    });
    CHECK(rel_err(fwd, swp) < 1e-13);
    // antisymmetric probe integrates to zero
    double anti = compact_integral(rule, [](const std::vector<double>& z) {
        return z[0] * z[0] * z[1] - z[1] * z[1] * z[0];
    });
    CHECK(std::abs(anti) < 1e-15);
}

TEST_CASE("order refinement changes compact results below tolerance") {
    PartitionPolyD m1(1);
    m1.set(Partition({2}), 3.0);
    m1.set(Partition({1}), -1.0);
    m1.set(Partition({0}), 0.5);
    double lo = compact_inner_product(kRank1, Rational(4), m1, m1, 30);
    double hi = compact_inner_product(kRank1, Rational(4), m1, m1, 60);
    CHECK(rel_err(lo, hi) < 1e-13);
}

TEST_CASE("noncompact integral reproduces the Selberg normalization") {
    // r = 1: int f_{-2nu} dmu = 8/3
    double got = noncompact_integral(
        kRank1,
        [](const std::vector<double>& t) {
            return std::pow(std::cosh(t[0]), -8.0);
        },
        200);
    CHECK(rel_err(got, 8.0 / 3.0) < 1e-8);
    // r = 2, (a, iota, b, nu) = (2,1,1,6)
    double got2 = noncompact_integral(
        kRank2,
        [](const std::vector<double>& t) {
            return std::pow(std::cosh(t[0]) * std::cosh(t[1]), -12.0);
        },
        120);
    CHECK(rel_err(got2, 32768.0 / 2880.0) < 1e-6);
}

TEST_CASE("noncompact integral flags non-decaying integrands") {
    CHECK_THROWS_AS(noncompact_integral(
                        kRank1, [](const std::vector<double>&) { return 1.0; }, 100),
                    DivergenceError);
}

TEST_CASE("concentration limit: normalized integrals approach the probe at 0") {
    auto probe = [](const std::vector<double>& t) { return 1.0 / (1.0 + t[0] * t[0] / 4); };
    double prev_err = 1.0;
    for (long nu : {20L, 80L}) {
        double val = noncompact_integral(
                         kRank1,
                         [&](const std::vector<double>& t) {
                             return std::pow(std::cosh(t[0]), -2.0 * nu) * probe(t);
                         },
                         400) /
                     n_nu(kRank1, Rational(nu));
        double err = std::abs(val - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-2);
}

TEST_CASE("spectral rule: rank-1 moments certify the corrected kernel") {
    double cutoff = suggest_spectral_cutoff(kRank1, Rational(4), 4, CKernelKind::Corrected);
    SpectralRule rule = build_spectral_rule(kRank1, Rational(4), 200, cutoff);
    PartitionPolyD one = PartitionPolyD::unit(1);
    double i0 = spectral_inner_product(rule, one, one);
    CHECK(i0 > 0.0);
    // <u^2>/<1> = 12: the degree-one orthogonal polynomial is lambda^2 + 12
    PartitionPolyD lam2(1);
    lam2.set(Partition({1}), 1.0);
    double m2 = -spectral_inner_product(rule, lam2, one) / i0; // lambda^2 = -u^2
    CHECK(rel_err(m2, 12.0) < 1e-9);
    // ||lambda^2 + 12||^2/<1> = 256/3
    PartitionPolyD q1(1);
    q1.set(Partition({1}), 1.0);
    q1.set(Partition({0}), 12.0);
    CHECK(rel_err(spectral_inner_product(rule, q1, q1) / i0, 256.0 / 3.0) < 1e-9);
    // orthogonality of the predicted polynomial to constants
    double cross = spectral_inner_product(rule, q1, one);
    CHECK(std::abs(cross) / std::sqrt(i0 * spectral_inner_product(rule, q1, q1)) < 1e-10);
}

TEST_CASE("rank-1 Parseval with the classical constant") {
    // (2 pi)^-1 (1/4) int_R f~^2 |c_cl|^-2 du = N_{2 nu} = 8/21, with the
    // classical c built inline from log_gamma (independent of the library's
    // corrected kernel).
    Rational nu(4);
    Rule1D gl = gauss_legendre_ab(300, 0.0, 60.0);
    std::vector<double> contrib(gl.nodes.size());
    for (size_t k = 0; k < gl.nodes.size(); ++k) {
        double u = gl.nodes[k];
        double ft = f_tilde_imaginary(kRank1, nu, {u});
        Complex lc = (2.0 - Complex(0, u)) * std::log(2.0) +
                     log_gamma(Complex(2, 0)) + log_gamma(Complex(0, u)) -
                     log_gamma(Complex(1, u / 2)) - log_gamma(Complex(1, u / 2));
        double inv_c2 = std::exp(-2.0 * lc.real());
        contrib[k] = gl.weights[k] * ft * ft * inv_c2;
    }
    double integral = 2.0 * pairwise_sum(contrib); // even in u
    CHECK(rel_err(integral / (2 * M_PI) / 4.0, 8.0 / 21.0) < 1e-10);
}

TEST_CASE("spectral rule: rank-2 weight is symmetric and wall-safe") {
    double cutoff =
        suggest_spectral_cutoff(kRank2, Rational(6), 8, CKernelKind::Corrected);
    SpectralRule rule = build_spectral_rule(kRank2, Rational(6), 60, cutoff);
    double fwd = spectral_integral(rule, [](const std::vector<double>& u) {
        return u[0] * u[0] + 2.0 * u[1] * u[1];
    });
    double swp = spectral_integral(rule, [](const std::vector<double>& u) {
        return u[1] * u[1] + 2.0 * u[0] * u[0];
    });
    CHECK(rel_err(fwd, swp) < 1e-12);
    for (double w : rule.weights) CHECK(std::isfinite(w));
}

TEST_CASE("spectral cutoff: suggestion is deterministic, violations throw") {
    double c1 = suggest_spectral_cutoff(kRank1, Rational(4), 4, CKernelKind::Corrected);
    double c2 = suggest_spectral_cutoff(kRank1, Rational(4), 4, CKernelKind::Corrected);
    CHECK(c1 == c2);
    CHECK(c1 >= 20.0);
    CHECK(c1 <= 200.0);
    CHECK_THROWS_AS(build_spectral_rule(kRank1, Rational(4), 50, 6.0), CutoffError);
}

TEST_CASE("grid convergence estimates bound the unit-mass error") {
    CompactRule rule = build_compact_rule(kRank1, Rational(4), 40);
    double mass = pairwise_sum(rule.weights);
    double exact = 8.0 / 21.0;
    CHECK(std::abs(mass - exact) / exact <=
          std::max(rule.grid.convergence_estimate, 1e-12));
    SpectralRule srule = build_spectral_rule(kRank1, Rational(4), 64, 50.0);
    CHECK(srule.grid.convergence_estimate >= 0.0);
    CHECK(srule.grid.convergence_estimate < 1e-6);
}

TEST_CASE("extended accumulation agrees with the double path") {
    CompactRule rule = build_compact_rule(kRank2, Rational(6), 30);
    auto f = [](const std::vector<double>& z) { return z[0] + z[1] * z[1]; };
    double d = compact_integral(rule, f);
    double e = compact_integral_extended(rule, f);
    CHECK(std::abs(d - e) / std::abs(d) < 1e-14);
}

TEST_CASE("a = 1: diagonal kink slows but does not break convergence") {
    // Odd pair exponent puts a |z1 - z2| kink in the integrand; accuracy is
    // documented as polynomial in the order rather than spectral.
    RootSystemBC rs = make_root_system(2, Rational(1), Rational(1), Rational(1));
    Rational nu(5);
    double exact = n_nu(rs, nu);
    double coarse = std::abs(selberg_integral_quadrature(rs, nu, 20) - exact) / exact;
    double fine = std::abs(selberg_integral_quadrature(rs, nu, 80) - exact) / exact;
    CHECK(fine < coarse);
    CHECK(fine < 5e-4);
}

TEST_CASE("spectral order refinement is stable") {
    PartitionPolyD q1(1);
    q1.set(Partition({1}), 1.0);
    q1.set(Partition({0}), 12.0);
    double lo = spectral_inner_product(kRank1, Rational(4), q1, q1, 150, 50.0, {});
    double hi = spectral_inner_product(kRank1, Rational(4), q1, q1, 300, 50.0, {});
    CHECK(rel_err(lo, hi) < 1e-10);
}
