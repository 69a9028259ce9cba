#include "bcsph/gammacore.hpp"

#include <cmath>

#include "bcsph/errors.hpp"

namespace bcsph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTwoPi = 1.8378770664093454835606594728112353;

// Lanczos g = 7, nine coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

Complex log_sin_pi(Complex z) {
    // Stable for large |Im z|: peel off the dominant exponential first.
    Complex iPiZ = Complex(0, kPi) * z;
    if (z.imag() > 0)
        return -iPiZ + std::log(Complex(0, 0.5)) +
               std::log(Complex(1, 0) - std::exp(2.0 * iPiZ));
    return iPiZ + std::log(Complex(0, -0.5)) +
           std::log(Complex(1, 0) - std::exp(-2.0 * iPiZ));
}

bool near_nonpositive_integer(Complex z, double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return false;
    double n = std::round(z.real());
    return n < 0.5 && std::abs(z.real() - n) < tol;
}

} // namespace

Complex log_gamma(Complex z) {
    if (z.real() < 0.5) {
        // Reflection; the pole at non-positive integers surfaces as +inf.
        return std::log(Complex(kPi, 0)) - log_sin_pi(z) - log_gamma(Complex(1, 0) - z);
    }
    Complex x(kLanczos[0], 0);
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i - 1, 0));
    Complex t = z + Complex(6.5, 0);
    return 0.5 * kLogTwoPi + (z - Complex(0.5, 0)) * std::log(t) - t + std::log(x);
}

double log_gamma_positive(double x) {
    if (x <= 0) throw PoleError("log_gamma_positive requires a positive argument",
                                std::to_string(x));
    return std::lgamma(x);
}

Complex GammaProductKernel::log_eval(const std::vector<Complex>& lambda) const {
    Complex acc(log_prefactor, 0);
    for (const Factor& f : factors) {
        Complex arg(f.constant, 0);
        if (f.axis >= 0) arg += f.coeff * lambda.at(f.axis);
        if (f.axis2 >= 0) arg += f.coeff2 * lambda.at(f.axis2);
        if (near_nonpositive_integer(arg))
            throw PoleError("Gamma factor at a non-positive integer", f.label);
        acc += double(f.sign) * log_gamma(arg);
    }
    return acc;
}

double GammaProductKernel::log_eval_constant() const {
    return log_eval({}).real();
}

double gindikin_log_gamma(double a, int r, double sigma) {
    double acc = 0.0;
    for (int j = 1; j <= r; ++j) {
        double arg = sigma - 0.5 * a * (j - 1);
        if (near_nonpositive_integer(Complex(arg, 0)))
            throw PoleError("Gindikin Gamma factor at a non-positive integer",
                            "sigma - (a/2)(j-1) with j=" + std::to_string(j));
        acc += log_gamma(Complex(arg, 0)).real();
    }
    return acc;
}

namespace {

// Common closed form: the Selberg value with (1-z)-exponent c - (1+iota+b+a(r-1)),
// so n_nu = selberg_value(rs, nu) and the compact <1,1> is selberg_value(rs, 2 nu).
double selberg_log_value(const RootSystemBC& rs, double c) {
    const int r = rs.rank;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    double acc = r * (2 * io + 2 * b + a * (r - 1)) * std::log(2.0);
    for (int j = 2; j <= r; ++j) acc += std::log(double(j)); // r!
    acc += gindikin_log_gamma(a, r, (io + 1 + 2 * b + a * (r - 1)) / 2);
    acc += gindikin_log_gamma(a, r, c - (0.5 * a * (r - 1) + io + b));
    acc -= gindikin_log_gamma(a, r, c + (1 - io) / 2);
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j <= r; ++j)
            acc += log_gamma_positive(0.5 * a * (j - i + 1)) -
                   log_gamma_positive(0.5 * a * (j - i));
    return acc;
}

} // namespace

double n_nu(const RootSystemBC& rs, const Rational& nu) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    return std::exp(selberg_log_value(rs, nu.to_double()));
}

double n_ratio(const RootSystemBC& rs, const Rational& nu) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    const double v = nu.to_double();
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double rho1 = rs.rho1().to_double();
    double prod = 1.0;
    for (int j = 1; j <= rs.rank; ++j) {
        prod *= (v - 0.5 * rho1 - 0.5 * (io + b + a * (j - 1))) /
                (v + 0.5 * (1 - io) - 0.5 * a * (j - 1));
    }
    return prod;
}

GammaProductKernel spherical_transform_kernel(const RootSystemBC& rs, double nu) {
    GammaProductKernel k;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double s = nu - 0.5 * rs.rho1().to_double();
    k.log_prefactor = selberg_log_value(rs, nu);
    for (int j = 1; j <= rs.rank; ++j) {
        double cj = 0.5 * (io + b + a * (j - 1));
        for (int eps : {+1, -1}) {
            std::string sgn = eps > 0 ? " + " : " - ";
            k.factors.push_back({.sign = +1,
                                 .constant = s,
                                 .coeff = eps * 0.5,
                                 .axis = j - 1,
                                 .label = "nu - rho_1/2" + sgn + "lambda_" +
                                          std::to_string(j) + "/2"});
            k.factors.push_back({.sign = -1,
                                 .constant = s + eps * cj,
                                 .label = "nu - rho_1/2" + sgn +
                                          "(iota+b+a(j-1))/2, j=" + std::to_string(j)});
        }
    }
    return k;
}

Complex f_tilde(const RootSystemBC& rs, const Rational& nu,
                const std::vector<Complex>& lambda) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    if (static_cast<int>(lambda.size()) != rs.rank)
        throw ParameterError("lambda dimension mismatch");
    return std::exp(spherical_transform_kernel(rs, nu.to_double()).log_eval(lambda));
}

double log_f_tilde_imaginary(const RootSystemBC& rs, const Rational& nu,
                             const std::vector<double>& u) {
    // Conjugate pairing per axis keeps everything real.
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double s = nu.to_double() - 0.5 * rs.rho1().to_double();
    double acc = selberg_log_value(rs, nu.to_double());
    for (int j = 1; j <= rs.rank; ++j) {
        double cj = 0.5 * (io + b + a * (j - 1));
        acc += 2.0 * log_gamma(Complex(s, 0.5 * u[j - 1])).real();
        acc -= log_gamma_positive(s + cj);
        acc -= log_gamma_positive(s - cj);
    }
    return acc;
}

double f_tilde_imaginary(const RootSystemBC& rs, const Rational& nu,
                         const std::vector<double>& u) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    return std::exp(log_f_tilde_imaginary(rs, nu, u));
}

double beta_recursion_check(const RootSystemBC& rs, const Rational& nu,
                            const std::vector<Complex>& lambda) {
    const double v = nu.to_double();
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double rho1 = rs.rho1().to_double();
    const double s = v - 0.5 * rho1;
    Complex lhs = f_tilde(rs, nu, lambda) / std::exp(selberg_log_value(rs, v));
    Complex rhs = f_tilde(rs, nu + Rational(1), lambda) /
                  std::exp(selberg_log_value(rs, v + 1));
    Complex ratio(1, 0);
    for (int j = 1; j <= rs.rank; ++j) {
        double cj = 0.5 * (io + b + a * (j - 1));
        Complex num = (s + cj) * (v + 0.5 * (1 - io) - 0.5 * a * (j - 1));
        Complex den = (s + 0.5 * lambda[j - 1]) * (s - 0.5 * lambda[j - 1]);
        ratio *= num / den;
    }
    ratio *= n_ratio(rs, nu);
    Complex rel = lhs - rhs * ratio;
    return std::abs(rel) / std::max(std::abs(lhs), std::abs(rhs * ratio));
}

GammaProductKernel c_kernel(const RootSystemBC& rs, CKernelKind kind) {
    GammaProductKernel k;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const int r = rs.rank;
    auto tag = [](const std::string& base, int j) {
        return base + ", j=" + std::to_string(j);
    };
    for (int j = 1; j <= r; ++j) {
        int ax = j - 1;
        if (kind == CKernelKind::Doubled) {
            k.factors.push_back({.sign = +1, .constant = b, .coeff = 1.0, .axis = ax,
                                 .label = tag("lambda_j + b", j)});
            k.factors.push_back({.sign = +1, .constant = 0.0, .coeff = 2.0, .axis = ax,
                                 .label = tag("2 lambda_j", j)});
            k.factors.push_back({.sign = -1, .constant = b + io / 2, .coeff = 1.0,
                                 .axis = ax, .label = tag("lambda_j + b + iota/2", j)});
            k.factors.push_back({.sign = -1, .constant = 2 * b, .coeff = 2.0, .axis = ax,
                                 .label = tag("2 lambda_j + 2b", j)});
        } else {
            k.factors.push_back({.sign = +1, .constant = 0.0, .coeff = 1.0, .axis = ax,
                                 .label = tag("lambda_j", j)});
            k.factors.push_back({.sign = +1, .constant = b / 2, .coeff = 0.5, .axis = ax,
                                 .label = tag("lambda_j/2 + b/2", j)});
            k.factors.push_back({.sign = -1, .constant = b, .coeff = 1.0, .axis = ax,
                                 .label = tag("lambda_j + b", j)});
            k.factors.push_back({.sign = -1, .constant = (b + io) / 2, .coeff = 0.5,
                                 .axis = ax, .label = tag("lambda_j/2 + (b+iota)/2", j)});
        }
    }
    // Pair factors: lambda_i +- lambda_j in the doubled kernel, half that
    // in the corrected one.
    const double sc = kind == CKernelKind::Doubled ? 1.0 : 0.5;
    for (int i = 1; i < r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            for (int eps : {+1, -1}) {
                std::string lbl = "lambda_" + std::to_string(i) +
                                  (eps > 0 ? " + " : " - ") + "lambda_" +
                                  std::to_string(j);
                if (kind != CKernelKind::Doubled) lbl = "(" + lbl + ")/2";
                k.factors.push_back({.sign = +1, .constant = 0.0, .coeff = sc,
                                     .axis = i - 1, .coeff2 = eps * sc, .axis2 = j - 1,
                                     .label = lbl});
                k.factors.push_back({.sign = -1, .constant = 0.5 * a, .coeff = sc,
                                     .axis = i - 1, .coeff2 = eps * sc, .axis2 = j - 1,
                                     .label = lbl + " + a/2"});
            }
        }
    }
    return k;
}

Complex c_function(const RootSystemBC& rs, const std::vector<Complex>& lambda,
                   CKernelKind kind) {
    if (static_cast<int>(lambda.size()) != rs.rank)
        throw ParameterError("lambda dimension mismatch");
    return std::exp(c_kernel(rs, kind).log_eval(lambda));
}

double spectral_density(const RootSystemBC& rs, const std::vector<double>& u,
                        CKernelKind kind) {
    if (static_cast<int>(u.size()) != rs.rank)
        throw ParameterError("u dimension mismatch");
    // |c(iu)|^{-2}; numerator poles of c are genuine zeros of the density.
    double log_abs_c = 0.0;
    GammaProductKernel k = c_kernel(rs, kind);
    for (const auto& f : k.factors) {
        double im = f.coeff * u[f.axis];
        if (f.axis2 >= 0) im += f.coeff2 * u[f.axis2];
        double la = log_gamma(Complex(f.constant, im)).real();
        if (std::isinf(la) || std::isnan(la)) {
            if (f.sign > 0 && !(la < 0)) return 0.0; // numerator pole: density 0
            throw PoleError("denominator Gamma factor degenerate", f.label);
        }
        log_abs_c += f.sign * la;
    }
    return std::exp(-2.0 * log_abs_c);
}

double c0_shifted_product(const RootSystemBC& rs) {
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const int r = rs.rank;
    double acc = 0.0;
    for (int j = 0; j < r; ++j) {
        double rj = rs.rho[j].to_double();
        acc += log_gamma_positive(rj + b + 1) + log_gamma_positive(2 * rj + 1);
        acc -= log_gamma_positive(rj + b + io / 2 + 1) + log_gamma_positive(2 * rj + b + 1);
    }
    for (int i = 0; i + 1 < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int eps : {+1, -1}) {
                double z = rs.rho[i].to_double() + eps * rs.rho[j].to_double();
                acc += log_gamma_positive(z + 1) - log_gamma_positive(z + 0.5 * a + 1);
            }
    return std::exp(acc);
}

double c0_from_c_at_rho(const RootSystemBC& rs) {
    std::vector<Complex> rho(rs.rank);
    for (int j = 0; j < rs.rank; ++j) rho[j] = Complex(rs.rho[j].to_double(), 0);
    return c_function(rs, rho, CKernelKind::Doubled).real();
}

double c0_from_corrected_at_rho(const RootSystemBC& rs) {
    std::vector<Complex> rho(rs.rank);
    for (int j = 0; j < rs.rank; ++j) rho[j] = Complex(rs.rho[j].to_double(), 0);
    return c_function(rs, rho, CKernelKind::Corrected).real();
}

double plancherel_density(const RootSystemBC& rs, const std::vector<double>& u,
                          const PlancherelOptions& opts) {
    double constant;
    if (opts.has_constant_override) {
        constant = opts.constant_override;
    } else {
        double c0 = c0_shifted_product(rs);
        constant = std::pow(2 * kPi, -rs.rank) * c0 * c0;
    }
    return constant * spectral_density(rs, u, opts.kind);
}

JacobiParametersRank1 jacobi_parameters_rank1(const RootSystemBC& rs) {
    if (rs.rank != 1) throw ParameterError("rank-1 routine called with rank != 1");
    double b = rs.b.to_double(), io = rs.iota.to_double();
    return {b + (io - 1) / 2, (io - 1) / 2, io + b};
}

double spherical_rank1(const RootSystemBC& rs, Complex lambda, double t) {
    JacobiParametersRank1 jp = jacobi_parameters_rank1(rs);
    const double x = std::tanh(t);
    const double z = x * x;
    if (1 - z < 1e-12)
        throw DivergenceError("spherical_rank1: |t| too large for the series");
    // 2F1(A, B; C; -sinh^2 t) = cosh(t)^{-2A} 2F1(A, C-B; C; tanh^2 t)
    const Complex A = 0.5 * (jp.rho + lambda);
    const Complex Bp = Complex(jp.alpha + 1, 0) - 0.5 * (jp.rho - lambda);
    const double C = jp.alpha + 1;
    Complex term(1, 0), sum(1, 0);
    const int max_terms = 2000000;
    int n = 0;
    for (; n < max_terms; ++n) {
        term *= (A + double(n)) * (Bp + double(n)) * z /
                ((C + double(n)) * double(n + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && n > 4) break;
    }
    if (n == max_terms)
        throw DivergenceError("spherical_rank1: series did not converge");
    Complex pref = std::exp(-2.0 * A * std::log(Complex(std::cosh(t), 0)));
    return (pref * sum).real();
}

} // namespace bcsph
