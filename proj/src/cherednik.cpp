#include "bcsph/cherednik.hpp"

#include <algorithm>

#include "bcsph/errors.hpp"

namespace bcsph {

MultiPoly apply_cherednik(const CherednikParams& params, int j, const MultiPoly& p) {
    const RootSystemBC& rs = params.system;
    const int r = rs.rank;
    if (j < 1 || j > r) throw ParameterError("operator index out of range");
    if (p.rank() != r) throw ParameterError("polynomial rank mismatch");

    const Rational half_a = rs.a / Rational(2);
    const Rational half = Rational(1, 2);
    const MultiPoly xj = MultiPoly::variable(r, j);

    MultiPoly res = xj.scaled(params.delta) * p;
    {
        MultiPoly dp = p.derivative(j);
        res += dp;
        res -= (xj * xj) * dp;
    }
    res -= p.scaled(rs.rho[j - 1]);

    // (1 - s_ij) p is divisible by x_i - x_j; shape (1+x_i)(1-x_j), weight -a/2
    for (int i = 1; i < j; ++i) {
        MultiPoly t = p - p.weyl_act(WeylElement::s(r, i - 1, j - 1));
        if (t.is_zero()) continue;
        MultiPoly q = t.divide_by_linear(i, j, +1);
        MultiPoly shape =
            (MultiPoly::one(r) + MultiPoly::variable(r, i)) * (MultiPoly::one(r) - xj);
        res -= (shape * q).scaled(half_a);
    }
    // shape (1+x_j)(1-x_k), weight +a/2
    for (int k = j + 1; k <= r; ++k) {
        MultiPoly t = p - p.weyl_act(WeylElement::s(r, j - 1, k - 1));
        if (t.is_zero()) continue;
        MultiPoly q = t.divide_by_linear(j, k, +1);
        MultiPoly shape =
            (MultiPoly::one(r) + xj) * (MultiPoly::one(r) - MultiPoly::variable(r, k));
        res += (shape * q).scaled(half_a);
    }
    // (1 - sigma_jk) p is divisible by x_j + x_k; shape (1+x_j)(1+x_k), +a/2
    for (int k = 1; k <= r; ++k) {
        if (k == j) continue;
        MultiPoly t = p - p.weyl_act(WeylElement::sigma_pair(r, j - 1, k - 1));
        if (t.is_zero()) continue;
        MultiPoly q = t.divide_by_linear(j, k, -1);
        MultiPoly shape =
            (MultiPoly::one(r) + xj) * (MultiPoly::one(r) + MultiPoly::variable(r, k));
        res += (shape * q).scaled(half_a);
    }
    // sigma_j terms: iota (1 + (x_j + 1/x_j)/2) + b (1 + 1/x_j) on (1 - sigma_j) p
    {
        MultiPoly t = p - p.weyl_act(WeylElement::sigma(r, j - 1));
        if (!t.is_zero()) {
            MultiPoly q = t.divide_by_variable(j);
            res += (t + (xj * t).scaled(half) + q.scaled(half)).scaled(rs.iota);
            res += (t + q).scaled(rs.b);
        }
    }
    return res;
}

namespace {

MultiPoly ones_product(int r, int from, int to, int sign) {
    // prod_{l=from..to} (1 + sign x_l)
    MultiPoly p = MultiPoly::one(r);
    for (int l = from; l <= to; ++l) {
        MultiPoly f = MultiPoly::one(r);
        MultiPoly xl = MultiPoly::variable(r, l);
        f += sign > 0 ? xl : -xl;
        p = p * f;
    }
    return p;
}

} // namespace

MultiPoly verify_raising_product(const CherednikParams& params, int j) {
    const int r = params.system.rank;
    if (j < 1 || j > r) throw ParameterError("index out of range");
    const Rational shift = params.delta + params.system.rho1();
    MultiPoly u = MultiPoly::one(r);
    Rational factor = 1;
    for (int l = 1; l <= j; ++l) {
        u = apply_cherednik(params, l, u) + u.scaled(shift);
        factor *= params.delta + (l - 1) * params.system.a;
    }
    return u - ones_product(r, 1, j, +1).scaled(factor);
}

MultiPoly verify_lowering_product(const CherednikParams& params, int j) {
    const int r = params.system.rank;
    if (j < 1 || j > r) throw ParameterError("index out of range");
    const Rational shift = params.delta + params.system.rho1();
    MultiPoly u = ones_product(r, 1, r, +1);
    Rational factor = 1;
    for (int l = r; l >= j; --l) {
        u = apply_cherednik(params, l, u) - u.scaled(shift);
        factor *= Rational(1) - params.delta - params.system.iota -
                  (r - l) * params.system.a;
    }
    MultiPoly rhs = ones_product(r, 1, r, +1) * ones_product(r, j, r, -1);
    return u - rhs.scaled(factor);
}

MultiPoly verify_bernstein_sato(const CherednikParams& params) {
    const int r = params.system.rank;
    const Rational shift_sq = (params.delta + params.system.rho1()).pow(2);
    MultiPoly u = MultiPoly::one(r);
    Rational factor = 1;
    for (int j = 1; j <= r; ++j) {
        u = apply_cherednik(params, j, apply_cherednik(params, j, u)) - u.scaled(shift_sq);
        factor *= (params.delta + (j - 1) * params.system.a) *
                  (Rational(1) - params.delta - params.system.iota -
                   (r - j) * params.system.a);
    }
    MultiPoly rhs = MultiPoly::one(r);
    for (int j = 1; j <= r; ++j) {
        MultiPoly xj = MultiPoly::variable(r, j);
        rhs = rhs * (MultiPoly::one(r) - xj * xj);
    }
    return u - rhs.scaled(factor);
}

Rational leading_coefficient_probe(const CherednikParams& params, const Exponents& eta,
                                   int j) {
    const int r = params.system.rank;
    for (int e : eta)
        if (e < 0) throw ParameterError("exponents must be non-negative");
    MultiPoly out =
        apply_cherednik(params, j, MultiPoly::monomial(r, eta, Rational(1)));
    Exponents raised = eta;
    raised[j - 1] += 1;
    return out.coefficient(raised);
}

Rational raising_coefficient_no_derivative_term(const CherednikParams& params,
                                       const Exponents& eta, int j) {
    int count = 0;
    for (int i = 0; i < j - 1; ++i)
        if (eta[i] > eta[j - 1]) ++count;
    Rational parity = (eta[j - 1] & 1) ? Rational(2) : Rational(0);
    return params.delta + count * params.system.a +
           params.system.iota * parity / Rational(2);
}

Rational raising_coefficient_with_derivative(const CherednikParams& params,
                                       const Exponents& eta, int j,
                                       bool count_all_pairs) {
    int count = 0;
    int upper = count_all_pairs ? static_cast<int>(eta.size()) : j - 1;
    for (int i = 0; i < upper; ++i)
        if (i != j - 1 && eta[i] > eta[j - 1]) ++count;
    Rational parity = (eta[j - 1] & 1) ? params.system.iota : Rational(0);
    return params.delta - Rational(eta[j - 1]) + count * params.system.a + parity;
}

int TransitionMatrix::index_of(const Partition& eta) const {
    auto it = std::lower_bound(order.begin(), order.end(), eta);
    if (it == order.end() || *it != eta)
        throw ParameterError("partition " + eta.str() + " outside transition matrix");
    return static_cast<int>(it - order.begin());
}

Rational TransitionMatrix::diagonal(const Partition& eta) const {
    int i = index_of(eta);
    return entries[i][i];
}

namespace {

/// prod_j D_j^{2 z_j} 1 with memoization keyed by the remaining composition.
class OperatorPowerCache {
public:
    explicit OperatorPowerCache(const CherednikParams& params) : params_(params) {}

    const MultiPoly& value(const Exponents& z) {
        auto it = cache_.find(z);
        if (it != cache_.end()) return it->second;
        MultiPoly v(params_.system.rank);
        if (std::all_of(z.begin(), z.end(), [](int e) { return e == 0; })) {
            v = MultiPoly::one(params_.system.rank);
        } else {
            int j = 0;
            for (int k = 0; k < static_cast<int>(z.size()); ++k)
                if (z[k] > 0) j = k;
            Exponents prev = z;
            prev[j] -= 1;
            v = apply_cherednik(params_, j + 1,
                                apply_cherednik(params_, j + 1, value(prev)));
        }
        return cache_.emplace(z, std::move(v)).first->second;
    }

private:
    CherednikParams params_;
    std::map<Exponents, MultiPoly> cache_;
};

} // namespace

TransitionMatrix build_transition_matrix(const CherednikParams& params, int maxWeight,
                                         bool require_invertible) {
    const int r = params.system.rank;
    TransitionMatrix M;
    M.params = params;
    M.maxWeight = maxWeight;
    M.order = partitions_up_to(r, maxWeight);
    const int n = static_cast<int>(M.order.size());
    M.entries.assign(n, std::vector<Rational>(n, Rational(0)));

    OperatorPowerCache cache(params);
    for (int row = 0; row < n; ++row) {
        const Partition& zeta = M.order[row];
        MultiPoly acc(r);
        for (const Exponents& z : orbit_of(zeta)) acc += cache.value(z);
        SymmetricPoly sym = to_symmetric(acc); // throws if not W-invariant
        for (const auto& [kappa, c] : sym.coeffs()) {
            if (kappa.weight() > zeta.weight() ||
                (kappa.weight() == zeta.weight() && !dominance_leq(kappa, zeta)))
                throw IntegrityError("transition row " + zeta.str() +
                                         " violates dominance triangularity",
                                     kappa.str());
            M.entries[row][M.index_of(kappa)] = c;
        }
        if (require_invertible && M.entries[row][row].is_zero())
            throw ParameterError("vanishing diagonal entry at " + zeta.str() +
                                 " (inadmissible delta)");
    }
    return M;
}

void SpectralPolynomial::set(const Partition& eta, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(eta);
    else
        coeffs_[eta] = c;
}

Rational SpectralPolynomial::coefficient(const Partition& eta) const {
    auto it = coeffs_.find(eta);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

double SpectralPolynomial::eval_at_lambda_sq(const std::vector<double>& y) const {
    double acc = 0.0;
    for (const auto& [eta, c] : coeffs_) {
        double orbit_sum = 0.0;
        for (const Exponents& e : orbit_of(eta)) {
            double t = 1.0;
            for (size_t k = 0; k < y.size(); ++k)
                for (int p = 0; p < e[k]; ++p) t *= y[k];
            orbit_sum += t;
        }
        acc += c.to_double() * orbit_sum;
    }
    return acc;
}

std::string SpectralPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [eta, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*m" + eta.str() + "[lambda^2]";
    }
    return s;
}

SpectralPolynomial l_polynomial(const CherednikParams& params, const Partition& eta,
                                const TransitionMatrix& M) {
    if (eta.weight() > M.maxWeight)
        throw ParameterError("partition weight exceeds transition matrix range");
    const int target = M.index_of(eta);
    const int n = target + 1;
    // Solve sum_zeta c_zeta M[zeta][kappa] = [kappa == eta] by back-substitution;
    // rows only reach columns at or below their own canonical index.
    std::vector<Rational> c(n, Rational(0));
    for (int kappa = target; kappa >= 0; --kappa) {
        Rational rhs = kappa == target ? Rational(1) : Rational(0);
        for (int zeta = kappa + 1; zeta <= target; ++zeta)
            rhs -= c[zeta] * M.entries[zeta][kappa];
        if (M.entries[kappa][kappa].is_zero())
            throw ParameterError("singular diagonal at " + M.order[kappa].str() +
                                 " (inadmissible delta)");
        c[kappa] = rhs / M.entries[kappa][kappa];
    }
    SpectralPolynomial l(params.system.rank);
    for (int zeta = 0; zeta <= target; ++zeta) l.set(M.order[zeta], c[zeta]);
    return l;
}

Rational d_eta_closed_form(const CherednikParams& params, const Partition& eta,
                           DiagClosedForm form) {
    const int r = params.system.rank;
    Rational prod = 1;
    for (int j = 1; j <= r; ++j) {
        int shift_index = form == DiagClosedForm::JMinus1Shift ? j - 1 : r - j;
        Rational shift = shift_index * params.system.a;
        Rational first_shift =
            form == DiagClosedForm::RMinusJShiftNoA ? Rational(r - j) : shift;
        for (int k = 0; k < eta.parts[j - 1]; ++k) {
            prod *= params.delta + first_shift - 2 * Rational(k);
            prod *= params.delta + shift + params.system.iota - Rational(1) -
                    2 * Rational(k);
        }
    }
    return prod;
}

} // namespace bcsph
