#include "bcsph/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcsph/errors.hpp"

namespace bcsph {

namespace {

/// Gram matrix of the m_eta basis under a positive bilinear form given by
/// per-point weights and basis-value rows.
std::vector<std::vector<double>> basis_gram(const std::vector<Partition>& basis,
                                            const std::vector<double>& nodes,
                                            const std::vector<double>& weights,
                                            int rank, bool spectral_sign) {
    const int n = static_cast<int>(basis.size());
    const int npts = static_cast<int>(weights.size());
    std::vector<std::vector<double>> values(n, std::vector<double>(npts));
    std::vector<double> y(rank);
    for (int p = 0; p < npts; ++p) {
        for (int k = 0; k < rank; ++k) {
            double v = nodes[p * rank + k];
            y[k] = spectral_sign ? -v * v : v;
        }
        for (int i = 0; i < n; ++i) {
            PartitionPolyD mono(rank);
            mono.set(basis[i], 1.0);
            values[i][p] = mono.eval(y);
        }
    }
    std::vector<std::vector<double>> G(n, std::vector<double>(n));
    std::vector<double> contrib(npts);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int p = 0; p < npts; ++p)
                contrib[p] = weights[p] * values[i][p] * values[j][p];
            G[i][j] = G[j][i] = pairwise_sum(contrib);
        }
    }
    return G;
}

double gram_form(const std::vector<std::vector<double>>& G,
                 const std::vector<double>& u, const std::vector<double>& v) {
    double acc = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0) continue;
        double row = 0.0;
        for (size_t j = 0; j < v.size(); ++j) row += G[i][j] * v[j];
        acc += u[i] * row;
    }
    return acc;
}

struct GramSchmidtResult {
    std::vector<std::vector<double>> coeffs; // rows on the basis
    std::vector<double> norms;
    double condition_estimate;
};

/// Modified Gram-Schmidt with one reorthogonalization pass, in coefficient
/// space over a precomputed Gram matrix. leading[i] scales the pivot basis
/// vector of row i.
GramSchmidtResult gram_schmidt(const std::vector<std::vector<double>>& G,
                               const std::vector<double>& leading) {
    const int n = static_cast<int>(G.size());
    GramSchmidtResult out;
    out.coeffs.assign(n, std::vector<double>(n, 0.0));
    out.norms.assign(n, 0.0);
    out.condition_estimate = 1.0;
    for (int i = 0; i < n; ++i) {
        std::vector<double>& c = out.coeffs[i];
        c[i] = leading[i];
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < i; ++j) {
                double proj = gram_form(G, c, out.coeffs[j]) / out.norms[j];
                for (int k = 0; k <= j; ++k) c[k] -= proj * out.coeffs[j][k];
            }
        }
        double nsq = gram_form(G, c, c);
        double lead_mass = leading[i] * leading[i] * G[i][i];
        if (!(nsq > 1e3 * std::numeric_limits<double>::epsilon() * lead_mass))
            throw ConditioningError(
                "Gram-Schmidt pivot collapsed at basis index " + std::to_string(i) +
                "; raise the quadrature order or reduce maxWeight");
        out.norms[i] = nsq;
        out.condition_estimate = std::max(out.condition_estimate, lead_mass / nsq);
    }
    return out;
}

} // namespace

JacobiFamily gram_schmidt_jacobi_ordered(const RootSystemBC& rs, const Rational& nu,
                                         const std::vector<Partition>& order_list,
                                         int order) {
    CompactRule rule = build_compact_rule(rs, nu, order);
    const int n = static_cast<int>(order_list.size());
    std::vector<std::vector<double>> G =
        basis_gram(order_list, rule.nodes, rule.weights, rs.rank, false);
    std::vector<double> leading(n);
    for (int i = 0; i < n; ++i)
        leading[i] = std::ldexp(1.0, 2 * order_list[i].weight()); // 2^{2|eta|}
    GramSchmidtResult gs = gram_schmidt(G, leading);

    JacobiFamily fam;
    fam.system = rs;
    fam.nu = nu;
    fam.maxWeight = order_list.empty() ? 0 : order_list.back().weight();
    fam.grid = rule.grid;
    fam.order_list = order_list;
    fam.condition_estimate = gs.condition_estimate;
    for (int i = 0; i < n; ++i) {
        PartitionPolyD p(rs.rank);
        for (int k = 0; k <= i; ++k)
            if (gs.coeffs[i][k] != 0.0) p.set(order_list[k], gs.coeffs[i][k]);
        fam.polys.emplace(order_list[i], std::move(p));
        fam.norms.emplace(order_list[i], gs.norms[i]);
    }
    return fam;
}

JacobiFamily gram_schmidt_jacobi(const RootSystemBC& rs, const Rational& nu,
                                 int maxWeight, int order) {
    return gram_schmidt_jacobi_ordered(rs, nu, partitions_up_to(rs.rank, maxWeight),
                                       order);
}

std::map<Partition, double> jacobi_norms(const JacobiFamily& family) {
    return family.norms;
}

SpectralFamily transform_H(const JacobiFamily& family, const TransitionMatrix& M,
                           const SpectralRule& rule) {
    if (M.maxWeight < family.maxWeight)
        throw ParameterError("transition matrix weight range below family range");
    if (!(M.params.delta == Rational(-2) * family.nu))
        throw ParameterError("transition matrix delta must equal -2 nu");
    SpectralFamily out;
    out.system = family.system;
    out.nu = family.nu;
    out.maxWeight = family.maxWeight;
    out.grid = rule.grid;
    out.options = rule.options;
    out.order_list = family.order_list;
    // Cache the exact l-polynomials once per partition.
    std::map<Partition, PartitionPolyD> l_cache;
    for (const Partition& zeta : family.order_list)
        l_cache.emplace(zeta,
                        PartitionPolyD::from(l_polynomial(M.params, zeta, M)));
    for (const Partition& eta : family.order_list) {
        const PartitionPolyD& P = family.polys.at(eta);
        PartitionPolyD q(family.system.rank);
        for (const auto& [zeta, c] : P.coeffs()) q.add_scaled(l_cache.at(zeta), c);
        out.qnorms.emplace(eta, spectral_inner_product(rule, q, q));
        out.qpolys.emplace(eta, std::move(q));
    }
    return out;
}

void gram_schmidt_mk(SpectralFamily& family, const SpectralRule& rule) {
    const int n = static_cast<int>(family.order_list.size());
    std::vector<std::vector<double>> G = basis_gram(
        family.order_list, rule.nodes, rule.weights, family.system.rank, true);
    std::vector<double> leading(n, 1.0);
    GramSchmidtResult gs = gram_schmidt(G, leading);
    family.mkpolys.clear();
    family.mknorms.clear();
    for (int i = 0; i < n; ++i) {
        PartitionPolyD p(family.system.rank);
        for (int k = 0; k <= i; ++k)
            if (gs.coeffs[i][k] != 0.0) p.set(family.order_list[k], gs.coeffs[i][k]);
        family.mkpolys.emplace(family.order_list[i], std::move(p));
        family.mknorms.emplace(family.order_list[i], gs.norms[i]);
    }
}

namespace {

double coefficient_angle_defect(const PartitionPolyD& p, const PartitionPolyD& q) {
    // 1 - |<p,q>|/(|p||q|) over the shared coefficient vector space.
    double pq = 0.0, pp = 0.0, qq = 0.0;
    for (const auto& [eta, c] : p.coeffs()) {
        pp += c * c;
        pq += c * q.coefficient(eta);
    }
    for (const auto& [eta, c] : q.coeffs()) qq += c * c;
    if (pp == 0.0 || qq == 0.0) return 1.0;
    return 1.0 - std::abs(pq) / std::sqrt(pp * qq);
}

} // namespace

TransformOrthogonalityReport verify_transform_orthogonality(const RootSystemBC& rs, const Rational& nu,
                                   int maxWeight, int compact_order,
                                   int spectral_order, double cutoff,
                                   const SpectralOptions& opts) {
    JacobiFamily fam = gram_schmidt_jacobi(rs, nu, maxWeight, compact_order);
    CherednikParams params{rs, Rational(-2) * nu};
    TransitionMatrix M = build_transition_matrix(params, maxWeight);
    SpectralRule rule = build_spectral_rule(rs, nu, spectral_order, cutoff, opts);
    SpectralFamily spec = transform_H(fam, M, rule);
    gram_schmidt_mk(spec, rule);

    const Partition empty{std::vector<int>(rs.rank, 0)};
    const double q0 = spec.qnorms.at(empty);
    const double P0 = fam.norms.at(empty);

    TransformOrthogonalityReport rep;
    rep.empirical_constant = P0 / q0;
    for (const Partition& eta : fam.order_list) {
        TransformOrthogonalityRow row;
        row.eta = eta;
        row.proportionality_defect =
            coefficient_angle_defect(spec.qpolys.at(eta), spec.mkpolys.at(eta));
        double qn = spec.qnorms.at(eta);
        for (const Partition& zeta : fam.order_list) {
            if (zeta == eta) continue;
            double cross =
                spectral_inner_product(rule, spec.qpolys.at(eta), spec.qpolys.at(zeta));
            row.offdiagonal_mass =
                std::max(row.offdiagonal_mass,
                         std::abs(cross) / std::sqrt(qn * spec.qnorms.at(zeta)));
        }
        row.norm_ratio_defect =
            std::abs((qn / q0) / (fam.norms.at(eta) / P0) - 1.0);
        row.absolute_norm_defect = std::abs(qn / fam.norms.at(eta) - 1.0);
        rep.worst_proportionality =
            std::max(rep.worst_proportionality, row.proportionality_defect);
        rep.worst_offdiagonal = std::max(rep.worst_offdiagonal, row.offdiagonal_mass);
        rep.worst_norm_ratio = std::max(rep.worst_norm_ratio, row.norm_ratio_defect);
        rep.worst_absolute = std::max(rep.worst_absolute, row.absolute_norm_defect);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

double norm_equality_check(const RootSystemBC& rs, const Rational& nu,
                       const Partition& eta, int order) {
    JacobiFamily fam = gram_schmidt_jacobi(rs, nu, eta.weight(), order);
    const PartitionPolyD& P = fam.polys.at(eta);
    double compact = fam.norms.at(eta);
    const double v2 = 2.0 * nu.to_double();
    const int r = rs.rank;
    // H^2 = f_{-2nu}^2 P^2 with f_{-2nu}(t)^2 = prod (1 - tanh^2 t_j)^{2nu}.
    double noncompact = noncompact_integral(
        rs,
        [&](const std::vector<double>& t) {
            std::vector<double> z(r);
            double logf = 0.0;
            for (int k = 0; k < r; ++k) {
                double x = std::tanh(t[k]);
                z[k] = x * x;
                logf += std::log1p(-z[k]);
            }
            double Pv = P.eval(z);
            return Pv * Pv * std::exp(v2 * logf);
        },
        order + 40);
    return std::abs(noncompact - compact) / std::abs(compact);
}

double wilson_polynomial(int n, double x_sq, const std::array<double, 4>& p) {
    const double a = p[0], b = p[1], c = p[2], d = p[3];
    // (a+b)_n (a+c)_n (a+d)_n * 4F3(-n, n+a+b+c+d-1, a+ix, a-ix; a+b, a+c, a+d; 1)
    double pref = 1.0;
    for (int m = 0; m < n; ++m) pref *= (a + b + m) * (a + c + m) * (a + d + m);
    double sum = 1.0, term = 1.0;
    const double e = n + a + b + c + d - 1;
    for (int k = 0; k < n; ++k) {
        double axk = (a + k) * (a + k) + x_sq; // (a+ix+k)(a-ix+k)
        term *= (-(n - k)) * (e + k) * axk /
                ((a + b + k) * (a + c + k) * (a + d + k) * (k + 1));
        sum += term;
    }
    return pref * sum;
}

WilsonFitReport wilson_crosscheck_rank1(const RootSystemBC& rs, const Rational& nu,
                                        int n, const std::array<double, 4>& params,
                                        int spectral_order, double cutoff) {
    if (rs.rank != 1) throw ParameterError("Wilson cross-check is rank-1 only");
    SpectralRule rule = build_spectral_rule(rs, nu, spectral_order, cutoff);
    CherednikParams cp{rs, Rational(-2) * nu};
    TransitionMatrix M = build_transition_matrix(cp, n);
    JacobiFamily fam = gram_schmidt_jacobi(rs, nu, n, 80);
    SpectralFamily spec = transform_H(fam, M, rule);
    gram_schmidt_mk(spec, rule);
    const PartitionPolyD& mk = spec.mkpolys.at(Partition(std::vector<int>{n}));

    WilsonFitReport rep;
    rep.degree = n;
    rep.parameters = params;
    // Least-squares scale on a fixed u-grid; lambda = i u so x = u/2 and the
    // mk polynomial is evaluated at y = -u^2.
    double sww = 0.0, swm = 0.0, smm = 0.0;
    const int grid = 33;
    for (int g = 0; g <= grid; ++g) {
        double u = 0.25 + 0.35 * g;
        double w = wilson_polynomial(n, 0.25 * u * u, params);
        double m = mk.eval({-u * u});
        sww += w * w;
        swm += w * m;
        smm += m * m;
    }
    rep.scale = sww > 0 ? swm / sww : 0.0;
    double res = smm - 2 * rep.scale * swm + rep.scale * rep.scale * sww;
    rep.residual = smm > 0 ? std::sqrt(std::max(res, 0.0) / smm) : 0.0;
    return rep;
}

} // namespace bcsph
