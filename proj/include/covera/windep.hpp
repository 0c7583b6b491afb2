#pragma once

#include <vector>

#include "covera/arith.hpp"
#include "covera/design.hpp"

namespace covera {

// Complete graph with nonnegative rational edge weights. Vertices carry
// labels so graphs derived from designs keep their point names.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::vector<int> labels);
    static WeightedGraph zero(int n);  // labels 1..n, all-zero weights
    static WeightedGraph from_multigraph(const Multigraph& g);

    int size() const { return int(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }

    void set_weight(int i, int j, const Rat& w);  // positional indices
    const Rat& weight(int i, int j) const;
    Rat vertex_weight(int i) const;

    // Positional index of a label; throws if absent.
    int index_of(int label) const;

    WeightedGraph induced(const std::vector<int>& labels) const;

private:
    std::vector<int> labels_;
    std::vector<Rat> w_;
};

// Piecewise guarantee function: 1 - x/(2m) for x <= m, (m+1)/(2x+2) for
// x >= m. The branches agree at x = m.
Rat f_m(long long m, const Rat& x);

// Greedy deletion of a maximum-weight vertex (ties broken towards the
// smallest label) until every remaining weight is below m. Returns the
// surviving labels, sorted.
std::vector<int> m_max(const WeightedGraph& g, long long m);

// ceil(sum_u f_m(wt(u))), valid lower bound on every m_max outcome.
// Requires every positive-weight edge joining two vertices of weight >= m
// to have weight >= 1; throws HypothesisViolation otherwise.
Int caro_tuza_bound(const WeightedGraph& g, long long m);

// ceil(|S| * f_m(mean full-graph weight over S)).
Int induced_bound_a(const WeightedGraph& g, long long m, const std::vector<int>& subset);

// ceil(|S0| f_m(x0) + |S1| f_m(x1)) with class-wise mean full-graph weights.
Int induced_bound_b(const WeightedGraph& g, long long m, const std::vector<int>& s0,
                    const std::vector<int>& s1);

// Reweighted excess/leave on V0 u V1: weights mu inside V1, c*mu across,
// 0 inside V0. Requires d/(r-lambda) < c < 1.
struct CReducedGraph {
    WeightedGraph graph;
    std::vector<int> v0;
    std::vector<int> v1;
    Rat c;
};
CReducedGraph c_reduced(const Multigraph& g, const std::vector<int>& v0,
                        const std::vector<int>& v1, const Rat& c, long long d, long long r,
                        long long lambda);

// The block-count guarantee h(x) used to analyse two-class deletions:
//   h(x) = v0*f_m(dx/(n v0)) + v1*f_m(d+k-1 - (n-d)x/(n v1))  for x > 0,
//   h(0) = v0 + v1*f_m(d+k-1),
// on the domain [0, min(v0*d, v1*(d+k-1))]; the domain is {0} when v0 or v1
// vanishes.
Rat h_value(long long v0, long long v1, long long d, long long k, long long n, long long m,
            const Rat& x);

}  // namespace covera
