#include "covera/matrix.hpp"

#include <numeric>

#include "covera/errors.hpp"

namespace covera {

bool RatMatrix::symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix gram(const Design& d) {
    Classification c = classify(d);
    if (c.kind == DesignKind::neither)
        throw InvalidArgument("gram: design is neither a covering nor a packing");

    // Route one: X X^T from the incidence matrix. Diagonal entries are the
    // replications, off-diagonal entries the pair counts.
    Multigraph counts = pair_counts(d);
    std::vector<long long> rep = replication(d);
    RatMatrix direct(d.v);
    for (int u = 1; u <= d.v; ++u) {
        direct.at(u - 1, u - 1) = Rat(rep[u - 1]);
        for (int w = u + 1; w <= d.v; ++w) {
            direct.at(u - 1, w - 1) = Rat(counts.at(u, w));
            direct.at(w - 1, u - 1) = Rat(counts.at(u, w));
        }
    }

    // Route two: R +/- A(G) + lambda*J with G the excess or leave.
    Multigraph g = excess_or_leave(d);
    int sign = c.is_covering() ? 1 : -1;
    RatMatrix assembled(d.v);
    for (int u = 1; u <= d.v; ++u) {
        assembled.at(u - 1, u - 1) = Rat(rep[u - 1] - d.lambda) + Rat(d.lambda);
        for (int w = 1; w <= d.v; ++w) {
            if (u == w) continue;
            assembled.at(u - 1, w - 1) = Rat(sign * g.at(u, w)) + Rat(d.lambda);
        }
    }

    for (int i = 0; i < d.v; ++i)
        for (int j = 0; j < d.v; ++j)
            if (direct.at(i, j) != assembled.at(i, j))
                throw InternalError("gram: incidence and excess/leave constructions disagree at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return direct;
}

namespace {

// Row-wise denominator clearing; positive multipliers preserve rank and the
// signs of leading principal minors.
std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Int>> rows(m.n, std::vector<Int>(m.n));
    for (int i = 0; i < m.n; ++i) {
        Int scale = 1;
        for (int j = 0; j < m.n; ++j)
            scale = lcm(scale, denominator(m.at(i, j)));
        for (int j = 0; j < m.n; ++j) {
            const Rat& x = m.at(i, j);
            rows[i][j] = numerator(x) * (scale / denominator(x));
        }
    }
    return rows;
}

}  // namespace

int rank_exact(const RatMatrix& m) {
    auto a = to_integer_rows(m);
    int n = m.n;
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int row = rank + 1; row < n; ++row) {
            for (int j = col + 1; j < n; ++j)
                a[row][j] = (a[rank][col] * a[row][j] - a[row][col] * a[rank][j]) / prev;
            a[row][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

long long bose_lower(const Design& d) {
    return rank_exact(gram(d));
}

bool dominance_pd(const RatMatrix& m, const std::vector<Rat>& c) {
    if (int(c.size()) != m.n) throw InvalidArgument("dominance_pd: weight count != dimension");
    if (!m.symmetric()) throw InvalidArgument("dominance_pd: matrix must be symmetric");
    for (const Rat& w : c)
        if (w <= 0) throw InvalidArgument("dominance_pd: weights must be positive");
    for (int u = 0; u < m.n; ++u) {
        Rat sum = 0;
        for (int w = 0; w < m.n; ++w) {
            if (w == u) continue;
            Rat x = m.at(u, w);
            sum += c[w] * (x < 0 ? Rat(-x) : x);
        }
        if (!(sum < c[u] * m.at(u, u))) return false;
    }
    return true;
}

bool sylvester_pd(const RatMatrix& m) {
    if (!m.symmetric()) throw InvalidArgument("sylvester_pd: matrix must be symmetric");
    if (m.n == 0) return true;
    // Bareiss without pivoting: after step t the pivot a[t][t] equals
    // det(A_{t+1}) up to the positive row scalings, so checking pivots
    // checks the leading principal minors. A zero pivot is a zero minor.
    auto a = to_integer_rows(m);
    int n = m.n;
    Int prev = 1;
    for (int t = 0; t < n; ++t) {
        if (a[t][t] <= 0) return false;
        for (int row = t + 1; row < n; ++row) {
            for (int j = t + 1; j < n; ++j)
                a[row][j] = (a[t][t] * a[row][j] - a[row][t] * a[t][j]) / prev;
            a[row][t] = 0;
        }
        prev = a[t][t];
    }
    return true;
}

}  // namespace covera
