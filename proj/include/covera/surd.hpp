#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>

#include "covera/arith.hpp"

namespace covera {

using Dec100 = boost::multiprecision::cpp_dec_float_100;

// Exact value a + b*sqrt(dsc) with rational a, b and integer dsc >= 0.
// Normalised so that dsc is never 0, 1 or a perfect square while b != 0;
// consequently b != 0 implies the value is irrational, which makes sign
// tests by squaring unambiguous. Floor and ceiling use integer arithmetic
// only.
class Surd {
public:
    Surd() = default;
    Surd(const Int& a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    Surd(long long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
    Surd(const Rat& a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    Surd(const Rat& a, const Rat& b, const Int& dsc);

    // sqrt(x) for rational x >= 0, as sqrt(p*q)/q for x = p/q.
    static Surd sqrt_rational(const Rat& x);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coefficient() const { return b_; }
    const Int& discriminant() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    // Requires is_rational().
    const Rat& as_rational() const;

    Surd operator-() const;
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd l, const Surd& r) { return l += r; }
    friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
    friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
    friend Surd operator/(Surd l, const Surd& r) { return l /= r; }

    int sign() const;
    int compare(const Surd& o) const;

    friend bool operator==(const Surd& l, const Surd& r) { return l.compare(r) == 0; }
    friend bool operator!=(const Surd& l, const Surd& r) { return l.compare(r) != 0; }
    friend bool operator<(const Surd& l, const Surd& r) { return l.compare(r) < 0; }
    friend bool operator<=(const Surd& l, const Surd& r) { return l.compare(r) <= 0; }
    friend bool operator>(const Surd& l, const Surd& r) { return l.compare(r) > 0; }
    friend bool operator>=(const Surd& l, const Surd& r) { return l.compare(r) >= 0; }

    Int floor_int() const;
    Int ceil_int() const;

    // 100-digit decimal evaluation; display and cross-validation only.
    Dec100 to_dec100() const;

    // "p/q" when rational, otherwise "p/q + r/s*sqrt(D)".
    std::string str() const;

private:
    void normalize();
    // Two surds can only be combined when a shared sqrt(d) exists.
    static Int common_disc(const Surd& l, const Surd& r);

    Rat a_ = 0;
    Rat b_ = 0;
    Int d_ = 0;
};

}  // namespace covera
