#pragma once

#include <vector>

namespace covera {

bool is_prime_power(int q, int* prime = nullptr, int* exponent = nullptr);

// GF(p^e) for prime-power orders up to a configurable cap. Extension fields
// use the lexicographically least monic irreducible modulus (coefficient
// tuples ordered most-significant first), so element numbering is
// reproducible. Elements are 0..q-1, encoding polynomials base p.
class FiniteField {
public:
    explicit FiniteField(int q, int cap = 512);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;  // throws on 0

    // Monic modulus x^e + c_{e-1} x^{e-1} + ... + c_0 as {c_0, ..., c_{e-1}, 1};
    // for prime fields this is just {0, 1} (x itself is unused).
    const std::vector<int>& modulus() const { return modulus_; }

private:
    std::size_t idx(int a, int b) const;
    void verify_axioms() const;

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<int> modulus_;
};

}  // namespace covera
