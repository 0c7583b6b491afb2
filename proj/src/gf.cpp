#include "covera/gf.hpp"

#include <string>

#include "covera/errors.hpp"

namespace covera {

bool is_prime_power(int q, int* prime, int* exponent) {
    if (q < 2) return false;
    int p = 0;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    if (p == 0) p = q;
    int e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return false;
    if (prime) *prime = p;
    if (exponent) *exponent = e;
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly mul_mod_p(const Poly& f, const Poly& g, int p) {
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    return out;
}

// Remainder of f by monic g.
Poly rem_mod_p(Poly f, const Poly& g, int p) {
    int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        int factor = f[df];
        if (factor == 0) continue;
        for (int i = 0; i <= dg; ++i) {
            int j = df - dg + i;
            f[j] = ((f[j] - factor * g[i]) % p + p) % p;
        }
    }
    return f;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool irreducible(const Poly& f, int p) {
    int d = degree(f);
    for (int dd = 1; 2 * dd <= d; ++dd) {
        Poly g(dd + 1, 0);
        g[dd] = 1;
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            long long c = code;
            for (int i = 0; i < dd; ++i) {
                g[i] = int(c % p);
                c /= p;
            }
            if (is_zero(rem_mod_p(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(int q, int cap) {
    if (q > cap)
        throw InvalidArgument("finite field: order " + std::to_string(q) + " exceeds cap " +
                              std::to_string(cap));
    if (!is_prime_power(q, &p_, &e_))
        throw InvalidArgument("finite field: " + std::to_string(q) + " is not a prime power");
    q_ = q;

    if (e_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Monic x^e + sum c_i x^i; candidates scanned in ascending value of
        // sum c_i p^i, i.e. lexicographically by (c_{e-1}, ..., c_0).
        Poly f(e_ + 1, 0);
        f[e_] = 1;
        long long count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        bool found = false;
        for (long long code = 0; code < count && !found; ++code) {
            long long c = code;
            for (int i = e_ - 1; i >= 0; --i) {
                long long scale = 1;
                for (int t = 0; t < i; ++t) scale *= p_;
                f[i] = int((c / scale) % p_);
            }
            (void)c;
            if (irreducible(f, p_)) found = true;
        }
        if (!found) throw InternalError("finite field: no irreducible polynomial found");
        modulus_ = f;
    }

    auto decode = [&](int a) {
        Poly f(e_, 0);
        for (int i = 0; i < e_; ++i) {
            f[i] = a % p_;
            a /= p_;
        }
        return f;
    };
    auto encode = [&](const Poly& f) {
        int a = 0;
        for (int i = e_ - 1; i >= 0; --i) a = a * p_ + (i < int(f.size()) ? f[i] : 0);
        return a;
    };

    add_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, -1);
    for (int a = 0; a < q_; ++a) {
        Poly fa = decode(a);
        Poly na(e_, 0);
        for (int i = 0; i < e_; ++i) na[i] = (p_ - fa[i]) % p_;
        neg_[a] = encode(na);
        for (int b = 0; b < q_; ++b) {
            Poly fb = decode(b);
            Poly sum(e_, 0);
            for (int i = 0; i < e_; ++i) sum[i] = (fa[i] + fb[i]) % p_;
            add_[idx(a, b)] = encode(sum);
            Poly prod = rem_mod_p(mul_mod_p(fa, fb, p_), modulus_, p_);
            mul_[idx(a, b)] = encode(prod);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = b;
                break;
            }
    verify_axioms();
}

std::size_t FiniteField::idx(int a, int b) const {
    if (a < 0 || a >= q_ || b < 0 || b >= q_)
        throw InvalidArgument("finite field: element out of range");
    return std::size_t(a) * q_ + b;
}

int FiniteField::inv(int a) const {
    if (a <= 0 || a >= q_ || inv_[a] < 0)
        throw InvalidArgument("finite field: no inverse for " + std::to_string(a));
    return inv_[a];
}

void FiniteField::verify_axioms() const {
    for (int a = 1; a < q_; ++a)
        if (inv_[a] < 0) throw InternalError("finite field: missing inverse, modulus reducible?");
    if (q_ <= 16) {
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                for (int c = 0; c < q_; ++c) {
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw InternalError("finite field: multiplication not associative");
                    if (add(add(a, b), c) != add(a, add(b, c)))
                        throw InternalError("finite field: addition not associative");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                        throw InternalError("finite field: distributivity fails");
                }
    }
}

}  // namespace covera
