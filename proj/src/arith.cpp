#include "covera/arith.hpp"

#include "covera/errors.hpp"

namespace covera {

Int floor_rat(const Rat& x) {
    Int n = numerator(x);
    Int d = denominator(x);  // always > 0 for cpp_rational
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Int ceil_rat(const Rat& x) {
    return -floor_rat(-x);
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw InvalidArgument("isqrt_floor: negative argument");
    return sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

int sign_of(const Rat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

std::string int_str(const Int& n) {
    return n.str();
}

std::string rat_str(const Rat& x) {
    Int n = numerator(x);
    Int d = denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    Int num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Int(text);
        } else {
            num = Int(text.substr(0, slash));
            den = Int(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw InvalidArgument("parse_rat: cannot parse '" + text + "'");
    }
    if (den == 0) throw InvalidArgument("parse_rat: zero denominator in '" + text + "'");
    return Rat(num, den);
}

}  // namespace covera
