#include "bcsph/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcsph/errors.hpp"

namespace bcsph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

Rule1D gauss_legendre(int n) {
    if (n < 1) throw ParameterError("rule order must be >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= n; ++m) {
                double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[k] = -x;
        r.nodes[n - 1 - k] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.weights[k] = w;
        r.weights[n - 1 - k] = w;
    }
    return r;
}

Rule1D gauss_legendre_ab(int n, double lo, double hi) {
    Rule1D r = gauss_legendre(n);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int k = 0; k < n; ++k) {
        r.nodes[k] = mid + half * r.nodes[k];
        r.weights[k] *= half;
    }
    return r;
}

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, tracking only the
// first components of the eigenvectors (all that Golub-Welsch needs).
// d: diagonal, e: subdiagonal (e[n-1] scratch), z: first-row accumulator.
// On return d holds ascending eigenvalues and z the matching components.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    if (n == 1) return;
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iterations = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m)
                if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1])))
                    break;
            if (m == l) break;
            if (++iterations > 40)
                throw Error("tridiagonal QL failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) { // rotation degenerated: restart the sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // insertion sort ascending, carrying z
    for (int i = 1; i < n; ++i) {
        double dv = d[i], zv = z[i];
        int j = i - 1;
        for (; j >= 0 && d[j] > dv; --j) {
            d[j + 1] = d[j];
            z[j + 1] = z[j];
        }
        d[j + 1] = dv;
        z[j + 1] = zv;
    }
}

} // namespace

Rule1D gauss_jacobi01(int n, double A, double B) {
    if (n < 1) throw ParameterError("rule order must be >= 1");
    if (A <= -1 || B <= -1) throw ParameterError("Jacobi weight exponents must exceed -1");
    // Golub-Welsch on [0,1]: recurrence coefficients of the weight
    // (1-x)^A (1+x)^B mapped through z = (1+x)/2, first moment
    // mu0 = B(B+1, A+1) for z^B (1-z)^A.
    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    z[0] = 1.0;
    const double s = A + B;
    d[0] = 0.5 * (1.0 + (B - A) / (s + 2.0));
    for (int m = 1; m < n; ++m) {
        double den = (2.0 * m + s) * (2.0 * m + s + 2.0);
        d[m] = 0.5 * (1.0 + (B * B - A * A) / den);
        double beta = 4.0 * m * (m + A) * (m + B) * (m + s) /
                      ((2.0 * m + s) * (2.0 * m + s) * (2.0 * m + s + 1.0) *
                       (2.0 * m + s - 1.0));
        e[m - 1] = 0.5 * std::sqrt(beta);
    }
    tridiagonal_ql(d, e, z);
    const double mu0 =
        std::exp(std::lgamma(B + 1) + std::lgamma(A + 1) - std::lgamma(s + 2));
    Rule1D r;
    r.nodes = std::move(d);
    r.weights.resize(n);
    for (int k = 0; k < n; ++k) r.weights[k] = mu0 * z[k] * z[k];
    return r;
}

double pairwise_sum(std::vector<double> v) {
    if (v.empty()) return 0.0;
    size_t n = v.size();
    while (n > 1) {
        size_t h = (n + 1) / 2;
        for (size_t i = 0; i + h < n; ++i) v[i] += v[i + h];
        n = h;
    }
    return v[0];
}

PartitionPolyD PartitionPolyD::from(const SymmetricPoly& s) {
    PartitionPolyD p(s.rank());
    for (const auto& [eta, c] : s.coeffs()) p.coeffs_[eta] = c.to_double();
    return p;
}

PartitionPolyD PartitionPolyD::from(const SpectralPolynomial& s) {
    PartitionPolyD p(s.rank());
    for (const auto& [eta, c] : s.coeffs()) p.coeffs_[eta] = c.to_double();
    return p;
}

PartitionPolyD PartitionPolyD::unit(int rank) {
    PartitionPolyD p(rank);
    p.coeffs_[Partition(std::vector<int>(rank, 0))] = 1.0;
    return p;
}

void PartitionPolyD::set(const Partition& eta, double c) {
    if (c == 0.0)
        coeffs_.erase(eta);
    else
        coeffs_[eta] = c;
}

double PartitionPolyD::coefficient(const Partition& eta) const {
    auto it = coeffs_.find(eta);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void PartitionPolyD::add_scaled(const PartitionPolyD& o, double c) {
    for (const auto& [eta, v] : o.coeffs_) {
        double nv = coefficient(eta) + c * v;
        set(eta, nv);
    }
}

double PartitionPolyD::eval(const std::vector<double>& y) const {
    double acc = 0.0;
    for (const auto& [eta, c] : coeffs_) {
        double orbit = 0.0;
        for (const Exponents& e : orbit_of(eta)) {
            double t = 1.0;
            for (size_t k = 0; k < y.size(); ++k)
                for (int p = 0; p < e[k]; ++p) t *= y[k];
            orbit += t;
        }
        acc += c * orbit;
    }
    return acc;
}

namespace {

/// Walks the tensor grid {axis nodes}^r, invoking visit(z, axis-weight-product).
template <typename Fn>
void tensor_walk(const std::vector<Rule1D>& axes, Fn&& visit) {
    const int r = static_cast<int>(axes.size());
    std::vector<int> idx(r, 0);
    std::vector<double> z(r);
    while (true) {
        double w = 1.0;
        for (int k = 0; k < r; ++k) {
            z[k] = axes[k].nodes[idx[k]];
            w *= axes[k].weights[idx[k]];
        }
        visit(z, w);
        int k = r - 1;
        while (k >= 0 && ++idx[k] == static_cast<int>(axes[k].nodes.size())) {
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

} // namespace

namespace {

double compact_unit_mass(const RootSystemBC& rs, double A, double B, double prefactor,
                         int order) {
    const int r = rs.rank;
    const double a = rs.a.to_double();
    Rule1D axis = gauss_jacobi01(order, A, B);
    std::vector<Rule1D> axes(r, axis);
    std::vector<double> contrib;
    tensor_walk(axes, [&](const std::vector<double>& z, double w) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) w *= std::pow(std::abs(z[i] - z[j]), a);
        contrib.push_back(w * prefactor);
    });
    return pairwise_sum(std::move(contrib));
}

} // namespace

CompactRule build_compact_rule(const RootSystemBC& rs, const Rational& nu, int order) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    const int r = rs.rank;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double A = 2 * nu.to_double() - (1 + io + b + a * (r - 1)); // (1-z) exponent
    const double B = (2 * b + io - 1) / 2;                            // z exponent
    const double prefactor = std::exp(r * (2 * io + 2 * b + a * (r - 1)) * std::log(2.0));

    CompactRule rule;
    rule.system = rs;
    rule.nu = nu;
    rule.grid = {GridFamily::CompactJacobi, order, 1.0, 0.0};
    Rule1D axis = gauss_jacobi01(order, A, B);
    std::vector<Rule1D> axes(r, axis);
    tensor_walk(axes, [&](const std::vector<double>& z, double w) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) w *= std::pow(std::abs(z[i] - z[j]), a);
        rule.nodes.insert(rule.nodes.end(), z.begin(), z.end());
        rule.weights.push_back(w * prefactor);
    });
    // Self-reported convergence estimate: unit mass against a half-order rule.
    if (order >= 8) {
        double full = pairwise_sum(rule.weights);
        double half = compact_unit_mass(rs, A, B, prefactor, order / 2);
        rule.grid.convergence_estimate = std::abs(full - half) / std::abs(full);
    }
    return rule;
}

double compact_integral(const CompactRule& rule,
                        const std::function<double(const std::vector<double>&)>& f) {
    const int r = rule.system.rank;
    std::vector<double> contrib(rule.weights.size());
    std::vector<double> z(r);
    for (size_t p = 0; p < rule.weights.size(); ++p) {
        for (int k = 0; k < r; ++k) z[k] = rule.nodes[p * r + k];
        contrib[p] = rule.weights[p] * f(z);
    }
    return pairwise_sum(std::move(contrib));
}

double compact_inner_product(const CompactRule& rule, const PartitionPolyD& f,
                             const PartitionPolyD& g) {
    return compact_integral(
        rule, [&](const std::vector<double>& z) { return f.eval(z) * g.eval(z); });
}

double compact_inner_product(const RootSystemBC& rs, const Rational& nu,
                             const PartitionPolyD& f, const PartitionPolyD& g,
                             int order) {
    return compact_inner_product(build_compact_rule(rs, nu, order), f, g);
}

double compact_inner_product(const RootSystemBC& rs, const Rational& nu,
                             const SymmetricPoly& f, const SymmetricPoly& g,
                             int order) {
    return compact_inner_product(build_compact_rule(rs, nu, order),
                                 PartitionPolyD::from(f), PartitionPolyD::from(g));
}

double compact_integral_extended(
    const CompactRule& rule,
    const std::function<double(const std::vector<double>&)>& f) {
    const int r = rule.system.rank;
    long double acc = 0.0L, comp = 0.0L;
    std::vector<double> z(r);
    for (size_t p = 0; p < rule.weights.size(); ++p) {
        for (int k = 0; k < r; ++k) z[k] = rule.nodes[p * r + k];
        long double term = static_cast<long double>(rule.weights[p]) * f(z);
        long double y = term - comp;
        long double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return static_cast<double>(acc);
}

double noncompact_integral(const RootSystemBC& rs,
                           const std::function<double(const std::vector<double>&)>& F,
                           int order, double t_cutoff) {
    if (rs.rank > 2)
        throw ParameterError("noncompact integration supports rank <= 2");
    const int r = rs.rank;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double x_max = std::tanh(t_cutoff);
    Rule1D axis = gauss_legendre_ab(order, 0.0, x_max);
    std::vector<Rule1D> axes(r, axis);

    std::vector<double> contrib;
    contrib.reserve(static_cast<size_t>(std::pow(order, r)));
    double edge_mass = 0.0;
    const double x_edge = axis.nodes[order - 1]; // outermost node per axis
    std::vector<double> t(r);
    tensor_walk(axes, [&](const std::vector<double>& x, double w) {
        double logw = 0.0;
        for (int k = 0; k < r; ++k) {
            double one_minus = 1.0 - x[k] * x[k];
            logw += (2 * b + 2 * io) * std::log(2.0) + (2 * b + io) * std::log(x[k]) -
                    (b + io + 1) * std::log(one_minus);
            t[k] = std::atanh(x[k]);
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                logw += 2 * a * std::log(2.0) +
                        a * std::log(std::abs(x[i] * x[i] - x[j] * x[j])) -
                        a * std::log((1 - x[i] * x[i]) * (1 - x[j] * x[j]));
        double Fv = F(t);
        double c = Fv == 0.0 ? 0.0 : w * Fv * std::exp(logw);
        contrib.push_back(c);
        for (int k = 0; k < r; ++k)
            if (x[k] == x_edge) {
                edge_mass += std::abs(c);
                break;
            }
    });
    std::vector<double> abs_contrib = contrib;
    for (double& v : abs_contrib) v = std::abs(v);
    double total_abs = pairwise_sum(std::move(abs_contrib));
    if (total_abs > 0 && edge_mass > 1e-3 * total_abs)
        throw DivergenceError(
            "noncompact integrand mass concentrates at the cutoff edge "
            "(slow decay; raise nu or the cutoff)");
    double value = pairwise_sum(std::move(contrib));
    return std::ldexp(value, r); // 2^r: even extension of the W-invariant integrand
}

namespace {

// log of the per-axis spectral envelope at |u| = U: the f~^2 axis factor,
// the rank-one density factor, and the polynomial degree allowance.
double axis_envelope_log(const RootSystemBC& rs, double nu, int axis_j, double U,
                         int max_degree, CKernelKind kind) {
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double s = nu - 0.5 * rs.rho1().to_double();
    double cj = 0.5 * (io + b + a * axis_j);
    double lf = 2.0 * (2.0 * log_gamma(Complex(s, 0.5 * U)).real() -
                       log_gamma_positive(s + cj) - log_gamma_positive(s - cj));
    double lc;
    if (kind == CKernelKind::Doubled) {
        lc = -2.0 * (log_gamma(Complex(b, U)).real() + log_gamma(Complex(0, 2 * U)).real() -
                     log_gamma(Complex(b + io / 2, U)).real() -
                     log_gamma(Complex(2 * b, 2 * U)).real());
    } else {
        lc = -2.0 * (log_gamma(Complex(0, U)).real() +
                     log_gamma(Complex(b / 2, 0.5 * U)).real() -
                     log_gamma(Complex(b, U)).real() -
                     log_gamma(Complex((b + io) / 2, 0.5 * U)).real());
    }
    // pair factors grow polynomially; bound their degree by a per partner axis
    double pair_allowance = 2.0 * a * (rs.rank - 1) * std::log(1.0 + 2.0 * U);
    return lf + lc + 2.0 * max_degree * std::log(1.0 + U) + pair_allowance;
}

} // namespace

double suggest_spectral_cutoff(const RootSystemBC& rs, const Rational& nu,
                               int max_degree, CKernelKind kind) {
    const double v = nu.to_double();
    for (double U = 20.0; U <= 200.0; U += 10.0) {
        bool ok = true;
        for (int j = 0; j < rs.rank && ok; ++j) {
            double peak = axis_envelope_log(rs, v, j, 1.0, max_degree, kind);
            for (double up = 2.0; up <= 20.0; up += 2.0)
                peak = std::max(peak, axis_envelope_log(rs, v, j, up, max_degree, kind));
            double tail = axis_envelope_log(rs, v, j, U, max_degree, kind);
            if (tail - peak > std::log(1e-14)) ok = false;
        }
        if (ok) return U;
    }
    throw CutoffError("no cutoff <= 200 meets the 1e-14 tail budget");
}

namespace {

SpectralRule build_spectral_rule_impl(const RootSystemBC& rs, const Rational& nu,
                                      int order, double cutoff,
                                      const SpectralOptions& opts);

} // namespace

SpectralRule build_spectral_rule(const RootSystemBC& rs, const Rational& nu, int order,
                                 double cutoff, const SpectralOptions& opts) {
    SpectralRule rule = build_spectral_rule_impl(rs, nu, order, cutoff, opts);
    if (order >= 16) {
        SpectralRule half = build_spectral_rule_impl(rs, nu, order / 2, cutoff, opts);
        double full_mass = pairwise_sum(rule.weights);
        double half_mass = pairwise_sum(half.weights);
        if (full_mass != 0.0)
            rule.grid.convergence_estimate =
                std::abs(full_mass - half_mass) / std::abs(full_mass);
    }
    return rule;
}

namespace {

SpectralRule build_spectral_rule_impl(const RootSystemBC& rs, const Rational& nu,
                                      int order, double cutoff,
                                      const SpectralOptions& opts) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    const int r = rs.rank;
    const double v = nu.to_double();
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double s = v - 0.5 * rs.rho1().to_double();

    // Tail-budget check at the requested cutoff.
    for (int j = 0; j < r; ++j) {
        double peak = axis_envelope_log(rs, v, j, 1.0, opts.max_degree, opts.kind);
        for (double up = 2.0; up <= 20.0; up += 2.0)
            peak = std::max(peak, axis_envelope_log(rs, v, j, up, opts.max_degree, opts.kind));
        double tail = axis_envelope_log(rs, v, j, cutoff, opts.max_degree, opts.kind);
        if (tail - peak > std::log(1e-12))
            throw CutoffError("spectral cutoff " + std::to_string(cutoff) +
                              " violates the tail budget; suggested U = " +
                              std::to_string(suggest_spectral_cutoff(
                                  rs, nu, opts.max_degree, opts.kind)));
    }

    Rule1D axis = gauss_legendre_ab(order, 0.0, cutoff);
    // Per-axis factors of f~^2: depend on the axis through c_j.
    std::vector<std::vector<double>> axis_log(r, std::vector<double>(order));
    const double logN = std::log(n_nu(rs, nu));
    for (int j = 0; j < r; ++j) {
        double cj = 0.5 * (io + b + a * j);
        double denom = log_gamma_positive(s + cj) + log_gamma_positive(s - cj);
        for (int k = 0; k < order; ++k) {
            double u = axis.nodes[k];
            axis_log[j][k] = 2.0 * (2.0 * log_gamma(Complex(s, 0.5 * u)).real() - denom);
        }
    }
    // Rank-one density factors are axis-independent.
    std::vector<double> dens_log(order);
    for (int k = 0; k < order; ++k) {
        double u = axis.nodes[k];
        double lc;
        if (opts.kind == CKernelKind::Doubled) {
            lc = log_gamma(Complex(b, u)).real() + log_gamma(Complex(0, 2 * u)).real() -
                 log_gamma(Complex(b + io / 2, u)).real() -
                 log_gamma(Complex(2 * b, 2 * u)).real();
        } else {
            lc = log_gamma(Complex(0, u)).real() +
                 log_gamma(Complex(b / 2, 0.5 * u)).real() -
                 log_gamma(Complex(b, u)).real() -
                 log_gamma(Complex((b + io) / 2, 0.5 * u)).real();
        }
        dens_log[k] = -2.0 * lc;
    }

    const double pair_scale = opts.kind == CKernelKind::Doubled ? 1.0 : 0.5;
    SpectralRule rule;
    rule.system = rs;
    rule.nu = nu;
    rule.options = opts;
    rule.grid = {GridFamily::Spectral, order, cutoff, 0.0};

    std::vector<int> idx(r, 0);
    std::vector<double> u(r);
    while (true) {
        double logw = 2.0 * logN;
        double glw = 1.0;
        for (int k = 0; k < r; ++k) {
            u[k] = axis.nodes[idx[k]];
            glw *= axis.weights[idx[k]];
            logw += axis_log[k][idx[k]] + dens_log[idx[k]];
        }
        bool zero = false;
        for (int i = 0; i < r && !zero; ++i) {
            for (int j = i + 1; j < r && !zero; ++j) {
                for (int eps : {+1, -1}) {
                    double z = pair_scale * (u[i] + eps * u[j]);
                    double lg = log_gamma(Complex(0, z)).real();
                    if (std::isinf(lg) || std::isnan(lg)) {
                        zero = true; // density vanishes on the wall u_i = u_j
                        break;
                    }
                    logw -= 2.0 * (lg - log_gamma(Complex(0.5 * a, z)).real());
                }
            }
        }
        rule.nodes.insert(rule.nodes.end(), u.begin(), u.end());
        rule.weights.push_back(zero ? 0.0
                                    : opts.constant * glw * std::exp(logw) *
                                          std::ldexp(1.0, r));
        int k = r - 1;
        while (k >= 0 && ++idx[k] == order) {
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return rule;
}

} // namespace

double spectral_integral(const SpectralRule& rule,
                         const std::function<double(const std::vector<double>&)>& f) {
    const int r = rule.system.rank;
    std::vector<double> contrib(rule.weights.size());
    std::vector<double> u(r);
    for (size_t p = 0; p < rule.weights.size(); ++p) {
        if (rule.weights[p] == 0.0) {
            contrib[p] = 0.0;
            continue;
        }
        for (int k = 0; k < r; ++k) u[k] = rule.nodes[p * r + k];
        contrib[p] = rule.weights[p] * f(u);
    }
    return pairwise_sum(std::move(contrib));
}

double spectral_inner_product(const SpectralRule& rule, const PartitionPolyD& p,
                              const PartitionPolyD& q) {
    const int r = rule.system.rank;
    std::vector<double> y(r);
    return spectral_integral(rule, [&](const std::vector<double>& u) {
        for (int k = 0; k < r; ++k) y[k] = -u[k] * u[k];
        return p.eval(y) * q.eval(y);
    });
}

double spectral_inner_product(const RootSystemBC& rs, const Rational& nu,
                              const PartitionPolyD& p, const PartitionPolyD& q,
                              int order, double cutoff, const SpectralOptions& opts) {
    return spectral_inner_product(build_spectral_rule(rs, nu, order, cutoff, opts), p, q);
}

double selberg_integral_quadrature(const RootSystemBC& rs, const Rational& nu,
                                   int order) {
    if (!nu_admissible(rs, nu))
        throw ParameterError("nu must exceed iota + b + a(r-1); got " + nu.str());
    const int r = rs.rank;
    const double a = rs.a.to_double(), b = rs.b.to_double(), io = rs.iota.to_double();
    const double A = nu.to_double() - (1 + io + b + a * (r - 1));
    const double B = (io + 2 * b - 1) / 2;
    const double prefactor = std::exp(r * (2 * io + 2 * b + a * (r - 1)) * std::log(2.0));
    Rule1D axis = gauss_jacobi01(order, A, B);
    std::vector<Rule1D> axes(r, axis);
    std::vector<double> contrib;
    tensor_walk(axes, [&](const std::vector<double>& z, double w) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) w *= std::pow(std::abs(z[i] - z[j]), a);
        contrib.push_back(w);
    });
    return prefactor * pairwise_sum(std::move(contrib));
}

Rational beta_moment_ratio(const Rational& alpha, const Rational& beta, int k) {
    Rational ratio = 1;
    for (int i = 0; i < k; ++i)
        ratio *= (alpha + Rational(1) + Rational(i)) /
                 (alpha + beta + Rational(2) + Rational(i));
    return ratio;
}

} // namespace bcsph
