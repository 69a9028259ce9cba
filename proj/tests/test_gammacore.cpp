#include <doctest.h>

#include <cmath>

#include "bcsph/errors.hpp"
#include "bcsph/gammacore.hpp"

using namespace bcsph;
using doctest::Approx;

namespace {

const RootSystemBC kRank1 = make_root_system(1, Rational(2), Rational(1), Rational(1));

double rel_err(double got, double expect) {
    return std::abs(got - expect) / std::abs(expect);
}

// Classical rank-1 c-function in the eigenvalue normalization, with its
// textbook constants: 2^{rho-lambda} Gamma(alpha+1) Gamma(lambda) /
// (Gamma((rho+lambda)/2) Gamma((alpha-beta+1+lambda)/2)). Used as the
// independent oracle for the corrected kernel and the Plancherel constant.
Complex classical_c_rank1(const RootSystemBC& rs, Complex lambda) {
    JacobiParametersRank1 jp = jacobi_parameters_rank1(rs);
    Complex acc = (jp.rho - lambda) * std::log(2.0);
    acc += log_gamma(Complex(jp.alpha + 1, 0)) + log_gamma(lambda);
    acc -= log_gamma(0.5 * (jp.rho + lambda));
    acc -= log_gamma(0.5 * (jp.alpha - jp.beta + 1.0 + lambda));
    return std::exp(acc);
}

} // namespace

TEST_CASE("complex log gamma against reference points") {
    // Gamma(5) = 24, Gamma(1/2) = sqrt(pi)
    CHECK(std::exp(log_gamma(Complex(5, 0))).real() == Approx(24.0).epsilon(1e-13));
    CHECK(std::exp(log_gamma(Complex(0.5, 0))).real() ==
          Approx(std::sqrt(M_PI)).epsilon(1e-13));
    // |Gamma(i)|^2 = pi / sinh(pi)
    double g = 2.0 * log_gamma(Complex(0, 1)).real();
    CHECK(std::exp(g) == Approx(M_PI / std::sinh(M_PI)).epsilon(1e-12));
    // functional equation at a complex point
    Complex z(0.3, 1.7);
    Complex lhs = log_gamma(z + Complex(1, 0));
    Complex rhs = log_gamma(z) + std::log(z);
    CHECK(std::abs(std::exp(lhs) - std::exp(rhs)) / std::abs(std::exp(lhs)) < 1e-13);
}

TEST_CASE("gindikin gamma product") {
    // r = 1: plain log Gamma
    CHECK(gindikin_log_gamma(2.0, 1, 3.0) == Approx(std::lgamma(3.0)).epsilon(1e-14));
    // r = 2, a = 2, sigma = 3: log(Gamma(3) Gamma(2)) = log 2
    CHECK(gindikin_log_gamma(2.0, 2, 3.0) == Approx(std::log(2.0)).epsilon(1e-13));
    // pole at sigma = 1: second factor is Gamma(0)
    CHECK_THROWS_AS(gindikin_log_gamma(2.0, 2, 1.0), PoleError);
}

TEST_CASE("selberg normalization closed form") {
    // r=1, iota=1, b=1, nu=4 -> 2^4 Gamma(2) Gamma(2)/Gamma(4) = 8/3
    CHECK(rel_err(n_nu(kRank1, Rational(4)), 8.0 / 3.0) < 1e-13);
    // r=2, a=2, iota=1, b=1, nu=6 -> 2^12 * 2 * G2(3) G2(3)/G2(6) = 32768/2880
    RootSystemBC rs2 = make_root_system(2, Rational(2), Rational(1), Rational(1));
    CHECK(rel_err(n_nu(rs2, Rational(6)), 32768.0 / 2880.0) < 1e-13);
    CHECK_THROWS_AS(n_nu(kRank1, Rational(2)), ParameterError);
}

TEST_CASE("recursion quotient: rational product vs closed-form quotient") {
    // r=1, iota=1, b=1, nu=4: N_5/N_4 = 1/2
    CHECK(rel_err(n_ratio(kRank1, Rational(4)), 0.5) < 1e-14);
    CHECK(rel_err(n_ratio(kRank1, Rational(4)),
                  n_nu(kRank1, Rational(5)) / n_nu(kRank1, Rational(4))) < 1e-12);
    // random-ish r=2 parameters
    RootSystemBC rs2 = make_root_system(2, Rational(3, 2), Rational(1, 2), Rational(2));
    for (Rational nu : {Rational(7), Rational(15, 2), Rational(9)}) {
        CHECK(rel_err(n_ratio(rs2, nu), n_nu(rs2, nu + Rational(1)) / n_nu(rs2, nu)) <
              1e-12);
    }
    // every factor tends to 1 as nu grows
    CHECK(rel_err(n_ratio(kRank1, Rational(100000)), 1.0) < 1e-4);
}

TEST_CASE("spherical transform of the canonical weight") {
    Rational nu(4);
    // lambda = rho: the numerator factors re-index to the denominator ones
    CHECK(rel_err(f_tilde(kRank1, nu, {Complex(2, 0)}).real(), n_nu(kRank1, nu)) <
          1e-12);
    // lambda = 0: N_4 * Gamma(3)^2/(Gamma(4) Gamma(2)) = 16/9
    CHECK(rel_err(f_tilde(kRank1, nu, {Complex(0, 0)}).real(), 16.0 / 9.0) < 1e-12);
    // frozen external-oracle values at lambda = i u (30-digit quadrature)
    CHECK(rel_err(f_tilde_imaginary(kRank1, nu, {1.0}), 1.61162231328) < 1e-10);
    CHECK(rel_err(f_tilde_imaginary(kRank1, nu, {2.0}), 1.20901802214) < 1e-10);
    CHECK(rel_err(f_tilde_imaginary(kRank1, nu, {4.0}), 0.417192165429) < 1e-10);
    // other parameter tuples from the same oracle
    RootSystemBC rsB = make_root_system(1, Rational(2), Rational(2), Rational(1));
    CHECK(rel_err(f_tilde_imaginary(rsB, Rational(5), {0.0}), 2.45436926062) < 1e-10);
    RootSystemBC rsC = make_root_system(1, Rational(2), Rational(1), Rational(2));
    CHECK(rel_err(f_tilde_imaginary(rsC, Rational(9, 2), {4.0}), 1.14429851089) < 1e-10);
    // positivity along the imaginary axis
    for (double u = 0.0; u < 12.0; u += 0.7)
        CHECK(f_tilde_imaginary(kRank1, nu, {u}) > 0.0);
}

TEST_CASE("beta = f~/N satisfies its one-step recursion") {
    for (double u : {0.0, 1.0, 2.0}) {
        CHECK(beta_recursion_check(kRank1, Rational(4), {Complex(0, u)}) < 1e-12);
    }
    // lambda = rho: both sides are 1
    CHECK(beta_recursion_check(kRank1, Rational(4), {Complex(2, 0)}) < 1e-12);
    RootSystemBC rs2 = make_root_system(2, Rational(3), Rational(1, 2), Rational(3, 2));
    CHECK(beta_recursion_check(rs2, Rational(10), {Complex(0, 1.3), Complex(0, 0.4)}) <
          1e-12);
}

TEST_CASE("beta(rho) = 1 for r <= 3 at sampled admissible parameters") {
    unsigned long long state = 8;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return 1 + static_cast<long long>((state >> 40) % 6);
    };
    for (int r = 1; r <= 3; ++r) {
        for (int trial = 0; trial < 5; ++trial) {
            RootSystemBC rs =
                make_root_system(r, Rational(next(), next()), Rational(next(), next()),
                                 Rational(next(), next()));
            Rational nu = rs.iota + rs.b + (r - 1) * rs.a + Rational(next());
            std::vector<Complex> rho(r);
            for (int j = 0; j < r; ++j) rho[j] = Complex(rs.rho[j].to_double(), 0);
            CHECK(rel_err(f_tilde(rs, nu, rho).real(), n_nu(rs, nu)) < 1e-12);
        }
    }
}

TEST_CASE("doubled-convention c-function at rank 1") {
    Complex lam(0.7, 0.3);
    Complex expect = std::exp(log_gamma(lam + 1.0) + log_gamma(2.0 * lam) -
                              log_gamma(lam + 1.5) - log_gamma(2.0 * lam + 2.0));
    Complex got = c_function(kRank1, {lam}, CKernelKind::Doubled);
    CHECK(std::abs(got - expect) / std::abs(expect) < 1e-12);
}

TEST_CASE("spectral density: wall behavior and evenness") {
    // u -> 0: the Gamma(2 lambda) pole kills the density
    CHECK(spectral_density(kRank1, {1e-8}, CKernelKind::Doubled) < 1e-10);
    CHECK(spectral_density(kRank1, {0.0}, CKernelKind::Doubled) == 0.0);
    CHECK(spectral_density(kRank1, {0.0}, CKernelKind::Corrected) == 0.0);
    for (double u : {0.5, 1.0, 3.0, 7.5}) {
        double d = spectral_density(kRank1, {u}, CKernelKind::Doubled);
        CHECK(d > 0.0);
        CHECK(rel_err(d, spectral_density(kRank1, {-u}, CKernelKind::Doubled)) <
              1e-13);
    }
    // rank 2: vanishes on the wall u1 = u2 for the corrected kernel
    RootSystemBC rs2 = make_root_system(2, Rational(2), Rational(1), Rational(1));
    CHECK(spectral_density(rs2, {1.5, 1.5}, CKernelKind::Corrected) == 0.0);
    CHECK(spectral_density(rs2, {1.5, 0.7}, CKernelKind::Corrected) > 0.0);
}

TEST_CASE("corrected kernel is the classical one up to a constant at rank 1") {
    // The lambda-dependence of corrected/classical must cancel; the doubled
    // kernel fails this by a factor growing like |lambda|^2.
    double ratio0 = 0.0;
    for (int k = 0; k < 6; ++k) {
        double u = 0.6 + 1.1 * k;
        double corr = spectral_density(kRank1, {u}, CKernelKind::Corrected);
        double classical = 1.0 / std::norm(classical_c_rank1(kRank1, Complex(0, u)));
        double ratio = corr / classical;
        if (k == 0)
            ratio0 = ratio;
        else
            CHECK(rel_err(ratio, ratio0) < 1e-11);
    }
    double disp0 = spectral_density(kRank1, {0.6}, CKernelKind::Doubled) *
                   std::norm(classical_c_rank1(kRank1, Complex(0, 0.6)));
    double disp1 = spectral_density(kRank1, {6.1}, CKernelKind::Doubled) *
                   std::norm(classical_c_rank1(kRank1, Complex(0, 6.1)));
    CHECK(rel_err(disp0, disp1) > 0.1); // genuinely lambda-dependent mismatch
}

TEST_CASE("c_0 readings both evaluate and differ") {
    RootSystemBC rs2 = make_root_system(2, Rational(2), Rational(1), Rational(1));
    double a = c0_shifted_product(rs2);
    double b = c0_from_c_at_rho(rs2);
    CHECK(a > 0.0);
    CHECK(b > 0.0);
    CHECK(rel_err(a, b) > 1e-3); // the +1 shifts and b/2b mismatch are real
    PlancherelOptions opts;
    CHECK(plancherel_density(rs2, {1.0, 0.3}, opts) > 0.0);
    PlancherelOptions with_const;
    with_const.has_constant_override = true;
    with_const.constant_override = 2.0;
    double base = spectral_density(rs2, {1.0, 0.3}, CKernelKind::Doubled);
    CHECK(rel_err(plancherel_density(rs2, {1.0, 0.3}, with_const), 2.0 * base) < 1e-13);
}

TEST_CASE("rank-1 spherical function: normalization and closed form") {
    // phi(0) = 1 for several lambda
    for (double u : {0.0, 1.0, 3.0})
        CHECK(spherical_rank1(kRank1, Complex(0, u), 0.0) == Approx(1.0).epsilon(1e-14));
    // lambda = rho: terminating series, identically 1
    for (double t : {0.2, 0.9, 2.5})
        CHECK(spherical_rank1(kRank1, Complex(2, 0), t) == Approx(1.0).epsilon(1e-13));
    // iota = b = 1: phi_0(t) = 2 log(cosh t)/sinh^2 t
    for (double t : {0.3, 0.8, 1.6, 2.4}) {
        double expect = 2.0 * std::log(std::cosh(t)) / (std::sinh(t) * std::sinh(t));
        CHECK(rel_err(spherical_rank1(kRank1, Complex(0, 0), t), expect) < 1e-12);
    }
}

TEST_CASE("rank-1 spherical function satisfies its eigen-equation") {
    // phi'' + ((2a+1) coth t + (2b+1) tanh t) phi' = (lambda^2 - rho^2) phi,
    // checked by Richardson-extrapolated central differences.
    JacobiParametersRank1 jp = jacobi_parameters_rank1(kRank1);
    for (double u : {0.8, 2.0, 4.0}) {
        Complex lam(0, u);
        double eig = -u * u - jp.rho * jp.rho;
        for (double t : {0.4, 0.8, 1.3}) {
            auto phi = [&](double s) { return spherical_rank1(kRank1, lam, s); };
            auto resid = [&](double h) {
                double d1 = (phi(t + h) - phi(t - h)) / (2 * h);
                double d2 = (phi(t + h) - 2 * phi(t) + phi(t - h)) / (h * h);
                double lt = d2 + ((2 * jp.alpha + 1) / std::tanh(t) +
                                  (2 * jp.beta + 1) * std::tanh(t)) *
                                     d1;
                return lt - eig * phi(t);
            };
            double r1 = resid(1e-3), r2 = resid(5e-4);
            double extrap = (4 * r2 - r1) / 3.0;
            CHECK(std::abs(extrap) / std::abs(eig) < 1e-8);
        }
    }
}

TEST_CASE("pole reporting carries the factor label") {
    // Choose lambda so a numerator factor nu - rho/2 - lambda/2 hits 0.
    Rational nu(4);
    double s = 4.0 - 1.0;
    try {
        f_tilde(kRank1, nu, {Complex(2 * s, 0)});
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(std::string(e.factor()).find("lambda") != std::string::npos);
    }
}
