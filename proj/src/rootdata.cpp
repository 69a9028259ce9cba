#include "bcsph/rootdata.hpp"

#include <algorithm>
#include <numeric>

#include "bcsph/errors.hpp"

namespace bcsph {

RootSystemBC make_root_system(int rank, const Rational& a, const Rational& b,
                              const Rational& iota) {
    if (rank < 1) throw ParameterError("rank must be >= 1");
    if (a.sign() <= 0 || b.sign() <= 0 || iota.sign() <= 0)
        throw ParameterError("multiplicities a, b, iota must be positive");
    RootSystemBC rs;
    rs.rank = rank;
    rs.a = a;
    rs.b = b;
    rs.iota = iota;
    rs.rho.reserve(rank);
    for (int j = 1; j <= rank; ++j) rs.rho.push_back(iota + b + (rank - j) * a);
    return rs;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw ParameterError("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParameterError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts < o.parts;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Dominance dominance_compare(const Partition& p, const Partition& q) {
    if (p.rank() != q.rank()) throw ParameterError("dominance comparison needs equal rank");
    bool leq = true, geq = true;
    long sp = 0, sq = 0;
    for (int i = 0; i < p.rank(); ++i) {
        sp += p.parts[i];
        sq += q.parts[i];
        if (sp > sq) leq = false;
        if (sp < sq) geq = false;
    }
    if (leq && geq) return Dominance::Equal;
    if (leq) return Dominance::Less;
    if (geq) return Dominance::Greater;
    return Dominance::Incomparable;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    Dominance d = dominance_compare(p, q);
    return d == Dominance::Less || d == Dominance::Equal;
}

Partition orbit_representative(const std::vector<int>& exponents) {
    for (int e : exponents)
        if (e < 0) throw ParameterError("orbit representative requires non-negative entries");
    std::vector<int> v = exponents;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

std::vector<Partition> partitions_up_to(int rank, int maxWeight) {
    std::vector<Partition> out;
    std::vector<int> cur(rank, 0);
    // Enumerate weakly decreasing tuples recursively.
    auto rec = [&](auto&& self, int pos, int maxPart, int remaining) -> void {
        if (pos == rank) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(maxPart, remaining); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, maxWeight, maxWeight);
    std::sort(out.begin(), out.end());
    return out;
}

WeylElement WeylElement::identity(int r) {
    WeylElement w;
    w.perm.resize(r);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(r, 1);
    return w;
}

WeylElement WeylElement::s(int r, int i, int j) {
    WeylElement w = identity(r);
    std::swap(w.perm[i], w.perm[j]);
    return w;
}

WeylElement WeylElement::sigma_pair(int r, int i, int j) {
    WeylElement w = identity(r);
    std::swap(w.perm[i], w.perm[j]);
    w.sign[i] = -1;
    w.sign[j] = -1;
    return w;
}

WeylElement WeylElement::sigma(int r, int i) {
    WeylElement w = identity(r);
    w.sign[i] = -1;
    return w;
}

WeylElement WeylElement::compose(const WeylElement& u, const WeylElement& v) {
    // act(compose(u,v), x_k) = act(u, act(v, x_k)) = sign_v[k] sign_u[perm_v[k]] x_{perm_u[perm_v[k]]}
    int r = u.rank();
    WeylElement w;
    w.perm.resize(r);
    w.sign.resize(r);
    for (int k = 0; k < r; ++k) {
        w.perm[k] = u.perm[v.perm[k]];
        w.sign[k] = static_cast<int8_t>(v.sign[k] * u.sign[v.perm[k]]);
    }
    return w;
}

std::string WeylElement::str() const {
    std::string s = "[";
    for (int k = 0; k < rank(); ++k) {
        if (k) s += ",";
        s += (sign[k] > 0 ? "+" : "-") + std::to_string(perm[k] + 1);
    }
    return s + "]";
}

std::vector<WeylElement> enumerate_weyl_group(int rank) {
    std::vector<int> p(rank);
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> out;
    do {
        for (unsigned mask = 0; mask < (1u << rank); ++mask) {
            WeylElement w;
            w.perm = p;
            w.sign.resize(rank);
            for (int k = 0; k < rank; ++k) w.sign[k] = (mask >> k) & 1 ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

CompactMultiplicity compact_multiplicity(const RootSystemBC& rs, const Rational& nu) {
    CompactMultiplicity k;
    Rational shift = 1 + rs.iota + rs.b + (rs.rank - 1) * rs.a;
    k.k2 = 2 * (2 * nu - shift) + Rational(1);
    k.k2 = k.k2 / Rational(2);
    k.k1 = (rs.iota + 2 * rs.b) / Rational(2) - k.k2;
    k.k3 = rs.a / Rational(2);
    return k;
}

bool nu_admissible(const RootSystemBC& rs, const Rational& nu) {
    return nu > rs.iota + rs.b + (rs.rank - 1) * rs.a;
}

} // namespace bcsph
