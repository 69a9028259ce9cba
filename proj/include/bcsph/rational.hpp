#ifndef BCSPH_RATIONAL_HPP
#define BCSPH_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "bcsph/errors.hpp"

namespace bcsph {

/// Exact rational arithmetic over checked 128-bit integers.
///
/// Every symbolic identity in this library must test to exact zero, so
/// coefficients are never allowed to silently wrap: any overflow throws
/// IntegrityError. 128-bit headroom covers all operator products in the
/// tested parameter ranges (numerators stay far below 1e38).
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_int128(Int n, Int d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    /// Parses "p", "-p", "p/q" with optional whitespace.
    static Rational parse(std::string_view s);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return from_int128(-num_, den_); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(int e) const;

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    void normalize();
    Int num_, den_; // den_ > 0, gcd(|num_|, den_) == 1
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }

} // namespace bcsph

#endif
