#include "bcsph/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bcsph/errors.hpp"

namespace bcsph {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(int rank, const Rational& c) {
    MultiPoly p(rank);
    p.add_term(Exponents(rank, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int rank, int j) {
    Exponents e(rank, 0);
    e.at(j - 1) = 1;
    return monomial(rank, e, Rational(1));
}

MultiPoly MultiPoly::monomial(int rank, const Exponents& e, const Rational& c) {
    MultiPoly p(rank);
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    // graded-lex: the last term has maximal total degree
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(rank_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(rank_);
    Exponents e(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < rank_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly p(rank_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

MultiPoly MultiPoly::shifted(const Exponents& s) const {
    MultiPoly p(rank_);
    Exponents e(rank_);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < rank_; ++k) e[k] = ea[k] + s[k];
        p.terms_.emplace(e, c);
    }
    return p;
}

MultiPoly MultiPoly::derivative(int j) const {
    MultiPoly p(rank_);
    int k = j - 1;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents d = e;
        d[k] -= 1;
        p.add_term(d, c * Rational(e[k]));
    }
    return p;
}

MultiPoly MultiPoly::weyl_act(const WeylElement& w) const {
    MultiPoly p(rank_);
    Exponents e(rank_);
    for (const auto& [ea, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        int sgn = 1;
        for (int k = 0; k < rank_; ++k) {
            e[w.perm[k]] += ea[k];
            if (w.sign[k] < 0 && (ea[k] & 1)) sgn = -sgn;
        }
        p.add_term(e, sgn > 0 ? c : -c);
    }
    return p;
}

MultiPoly weyl_act(const WeylElement& w, const MultiPoly& p) { return p.weyl_act(w); }

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
    const int r = d.rank();
    auto variable_index = [&](const Exponents& e) {
        int idx = -1;
        for (int k = 0; k < r; ++k) {
            if (e[k] == 1 && idx < 0)
                idx = k;
            else if (e[k] != 0)
                return -2;
        }
        return idx;
    };
    if (d.term_count() == 1) {
        const auto& [e, c] = *d.terms().begin();
        int k = variable_index(e);
        if (k >= 0 && c == Rational(1)) return p.divide_by_variable(k + 1);
    } else if (d.term_count() == 2) {
        auto it = d.terms().begin();
        const auto& [e1, c1] = *it;
        ++it;
        const auto& [e2, c2] = *it;
        int k1 = variable_index(e1), k2 = variable_index(e2);
        if (k1 >= 0 && k2 >= 0 && k1 != k2) {
            // graded-lex puts the lower variable index last; d = x_i + s x_j
            if (c2 == Rational(1) && c1 == Rational(1))
                return p.divide_by_linear(k2 + 1, k1 + 1, -1);
            if (c2 == Rational(1) && c1 == Rational(-1))
                return p.divide_by_linear(k2 + 1, k1 + 1, +1);
            if (c1 == Rational(1) && c2 == Rational(-1))
                return p.divide_by_linear(k1 + 1, k2 + 1, +1);
        }
    }
    throw ParameterError("divisor must be x_j, x_i - x_j, or x_i + x_j; got " +
                         d.str());
}

MultiPoly MultiPoly::divide_by_variable(int j) const {
    MultiPoly q(rank_);
    int k = j - 1;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0)
            throw IntegrityError("polynomial not divisible by x_" + std::to_string(j),
                                 MultiPoly::monomial(rank_, e, c).str());
        Exponents d = e;
        d[k] -= 1;
        q.terms_.emplace(d, c);
    }
    return q;
}

MultiPoly MultiPoly::divide_by_linear(int i, int j, int s) const {
    // Horner division by (x_i - s x_j): collect coefficients of powers of x_i,
    // then q_{k-1} = c_k + s x_j q_k descending; a nonzero remainder is a bug
    // in the caller's operator assembly.
    int vi = i - 1, vj = j - 1;
    int n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e[vi]);
    std::vector<MultiPoly> coeff(n + 1, MultiPoly(rank_));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        int k = d[vi];
        d[vi] = 0;
        coeff[k].add_term(d, c);
    }
    if (n == 0) {
        if (!coeff[0].is_zero())
            throw IntegrityError("polynomial not divisible by linear form", coeff[0].str());
        return MultiPoly(rank_);
    }
    std::vector<MultiPoly> q(n, MultiPoly(rank_));
    q[n - 1] = coeff[n];
    Exponents xj(rank_, 0);
    xj[vj] = 1;
    for (int k = n - 1; k >= 1; --k) {
        MultiPoly t = q[k].shifted(xj);
        if (s < 0) t = -t;
        q[k - 1] = coeff[k] + t;
    }
    MultiPoly rem = q[0].shifted(xj);
    if (s < 0) rem = -rem;
    rem += coeff[0];
    if (!rem.is_zero())
        throw IntegrityError("polynomial not divisible by x_" + std::to_string(i) +
                                 (s > 0 ? " - x_" : " + x_") + std::to_string(j),
                             rem.str());
    MultiPoly out(rank_);
    Exponents e(rank_);
    for (int k = 0; k < n; ++k) {
        for (const auto& [ea, c] : q[k].terms_) {
            e = ea;
            e[vi] += k;
            out.add_term(e, c);
        }
    }
    return out;
}

double MultiPoly::eval(const std::vector<double>& x) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (int k = 0; k < rank_; ++k)
            for (int p = 0; p < e[k]; ++p) t *= x[k];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (int k = 0; k < rank_; ++k) {
            if (e[k] == 0) continue;
            s += "*x" + std::to_string(k + 1);
            if (e[k] > 1) s += "^" + std::to_string(e[k]);
        }
    }
    return s;
}

void SymmetricPoly::set(const Partition& eta, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(eta);
    else
        coeffs_[eta] = c;
}

Rational SymmetricPoly::coefficient(const Partition& eta) const {
    auto it = coeffs_.find(eta);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

MultiPoly SymmetricPoly::expand() const {
    MultiPoly p(rank_);
    for (const auto& [eta, c] : coeffs_) p += monomial_symmetric_x2(eta).scaled(c);
    return p;
}

std::string SymmetricPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [eta, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*m" + eta.str();
    }
    return s;
}

std::vector<Exponents> orbit_of(const Partition& eta) {
    Exponents v = eta.parts;
    std::sort(v.begin(), v.end());
    std::vector<Exponents> orbit;
    do {
        orbit.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return orbit;
}

MultiPoly monomial_symmetric_x2(const Partition& eta) {
    MultiPoly p(eta.rank());
    for (Exponents e : orbit_of(eta)) {
        for (int& v : e) v *= 2;
        p.add_term(e, Rational(1));
    }
    return p;
}

SymmetricPoly to_symmetric(const MultiPoly& p) {
    int r = p.rank();
    for (const auto& [e, c] : p.terms())
        for (int k = 0; k < r; ++k)
            if (e[k] & 1)
                throw IntegrityError("polynomial is odd in x_" + std::to_string(k + 1),
                                     MultiPoly::monomial(r, e, c).str());

    // Read each orbit's coefficient off its sorted-descending representative,
    // then re-expand and compare; any discrepancy means p was not W-invariant.
    SymmetricPoly s(r);
    for (const auto& [e, c] : p.terms()) {
        Exponents half = e;
        for (int& v : half) v /= 2;
        std::sort(half.begin(), half.end(), std::greater<int>());
        Exponents rep = half;
        for (int& v : rep) v *= 2;
        if (rep == e) s.set(Partition(half), c);
    }
    if (s.expand() != p) {
        // Name a violating generator for the error message.
        for (int i = 0; i < r; ++i) {
            WeylElement g = WeylElement::sigma(r, i);
            if (p.weyl_act(g) != p)
                throw IntegrityError("polynomial not W-invariant", g.str());
            for (int j = i + 1; j < r; ++j) {
                g = WeylElement::s(r, i, j);
                if (p.weyl_act(g) != p)
                    throw IntegrityError("polynomial not W-invariant", g.str());
            }
        }
        throw IntegrityError("polynomial not expressible in the m_eta(x^2) basis");
    }
    return s;
}

} // namespace bcsph
