#include "bcsph/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace bcsph {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

UInt uabs(Int x) { return x < 0 ? UInt(0) - UInt(x) : UInt(x); }

UInt ugcd(UInt a, UInt b) {
    while (b != 0) {
        UInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegrityError("rational overflow in multiplication");
    return r;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw IntegrityError("rational overflow in addition");
    return r;
}

std::string int128_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    UInt u = uabs(v);
    std::string s;
    while (u != 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace

void Rational::normalize() {
    if (den_ == 0) throw ParameterError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    UInt g = ugcd(uabs(num_), uabs(den_));
    if (g > 1) {
        num_ /= Int(g);
        den_ /= Int(g);
    }
}

Rational& Rational::operator+=(const Rational& o) {
    // Cross-reduce first to keep intermediates small.
    UInt g = ugcd(uabs(den_), uabs(o.den_));
    Int db = o.den_ / Int(g);
    Int da = den_ / Int(g);
    Int n = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
    Int d = checked_mul(den_, db);
    num_ = n;
    den_ = d;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    UInt g1 = ugcd(uabs(num_), uabs(o.den_));
    UInt g2 = ugcd(uabs(o.num_), uabs(den_));
    Int n1 = num_ / Int(g1);
    Int d2 = o.den_ / Int(g1);
    Int n2 = o.num_ / Int(g2);
    Int d1 = den_ / Int(g2);
    num_ = checked_mul(n1, n2);
    den_ = checked_mul(d1, d2);
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw ParameterError("rational division by zero");
    return *this *= from_int128(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    // a.num/a.den < b.num/b.den with positive denominators.
    Int lhs, rhs;
    if (__builtin_mul_overflow(a.num_, b.den_, &lhs) ||
        __builtin_mul_overflow(b.num_, a.den_, &rhs))
        throw IntegrityError("rational overflow in comparison");
    return lhs < rhs;
}

Rational Rational::pow(int e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Rational base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational Rational::parse(std::string_view s) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto read_int = [&]() -> Int {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParameterError("cannot parse rational: '" + std::string(s) + "'");
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = checked_add(checked_mul(v, 10), s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    };
    Int n = read_int();
    Int d = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        d = read_int();
    }
    skip_ws();
    if (pos != s.size())
        throw ParameterError("trailing characters in rational: '" + std::string(s) + "'");
    return from_int128(n, d);
}

std::string Rational::str() const {
    std::string s = int128_str(num_);
    if (den_ != 1) s += "/" + int128_str(den_);
    return s;
}

} // namespace bcsph
