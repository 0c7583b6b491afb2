#include "covera/surd.hpp"

#include "covera/errors.hpp"

namespace covera {

Surd::Surd(const Rat& a, const Rat& b, const Int& dsc) : a_(a), b_(b), d_(dsc) {
    if (d_ < 0) throw InvalidArgument("Surd: negative discriminant");
    normalize();
}

void Surd::normalize() {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    Int root;
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    if (is_perfect_square(d_, &root)) {
        a_ += b_ * Rat(root);
        b_ = 0;
        d_ = 0;
    }
}

Surd Surd::sqrt_rational(const Rat& x) {
    if (x < 0) throw InvalidArgument("Surd::sqrt_rational: negative argument");
    Int p = numerator(x);
    Int q = denominator(x);
    // sqrt(p/q) = sqrt(p*q)/q
    return Surd(Rat(0), Rat(1, q), p * q);
}

const Rat& Surd::as_rational() const {
    if (!is_rational()) throw InvalidArgument("Surd::as_rational: value is irrational");
    return a_;
}

Int Surd::common_disc(const Surd& l, const Surd& r) {
    if (l.b_ == 0) return r.d_;
    if (r.b_ == 0) return l.d_;
    if (l.d_ != r.d_)
        throw InternalError("Surd: incompatible discriminants " + l.d_.str() + " vs " + r.d_.str());
    return l.d_;
}

Surd Surd::operator-() const {
    Surd out;
    out.a_ = -a_;
    out.b_ = -b_;
    out.d_ = d_;
    return out;
}

Surd& Surd::operator+=(const Surd& o) {
    d_ = common_disc(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Surd& Surd::operator-=(const Surd& o) {
    return *this += -o;
}

Surd& Surd::operator*=(const Surd& o) {
    Int d = common_disc(*this, o);
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

Surd& Surd::operator/=(const Surd& o) {
    if (o.sign() == 0) throw InvalidArgument("Surd: division by zero");
    Int d = common_disc(*this, o);
    // 1/(c + e*sqrt(d)) = (c - e*sqrt(d)) / (c^2 - e^2 d)
    Rat denom = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
    Surd conj;
    conj.a_ = o.a_ / denom;
    conj.b_ = -o.b_ / denom;
    conj.d_ = d;
    return *this *= conj;
}

int Surd::sign() const {
    if (b_ == 0) return sign_of(a_);
    // b != 0 and d is not a perfect square: the value is irrational, so it
    // is never zero and squaring comparisons are strict.
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_);
    int sb = sign_of(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    if (lhs == rhs) throw InternalError("Surd::sign: unnormalised perfect square");
    bool rational_dominates = lhs > rhs;
    return rational_dominates ? sa : sb;
}

int Surd::compare(const Surd& o) const {
    Surd diff = *this;
    diff -= o;
    return diff.sign();
}

Int Surd::floor_int() const {
    if (b_ == 0) return floor_rat(a_);
    // Bracket b*sqrt(d) between consecutive multiples of 1/q.
    Int p = numerator(b_);
    Int q = denominator(b_);
    Int n = p * p * d_;
    Int s = isqrt_floor(n);
    Rat lo = (b_ > 0) ? Rat(s, q) : Rat(-(s + 1), q);
    Int t = floor_rat(a_ + lo);
    // Exact fix-up; the bracket is within 1/q of the true value so this
    // loops at most a couple of times.
    while (compare(Surd(Int(t + 1))) >= 0) ++t;
    while (compare(Surd(t)) < 0) --t;
    return t;
}

Int Surd::ceil_int() const {
    if (b_ == 0) return ceil_rat(a_);
    return floor_int() + 1;  // irrational, never an integer
}

Dec100 Surd::to_dec100() const {
    Dec100 a = Dec100(numerator(a_).str()) / Dec100(denominator(a_).str());
    if (b_ == 0) return a;
    Dec100 b = Dec100(numerator(b_).str()) / Dec100(denominator(b_).str());
    return a + b * sqrt(Dec100(d_.str()));
}

std::string Surd::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string root = "sqrt(" + d_.str() + ")";
    std::string bs = rat_str(b_ < 0 ? Rat(-b_) : b_);
    std::string tail = (bs == "1" ? root : bs + "*" + root);
    if (a_ == 0) return (b_ < 0 ? "-" : "") + tail;
    return rat_str(a_) + (b_ < 0 ? " - " : " + ") + tail;
}

}  // namespace covera
