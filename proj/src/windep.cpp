#include "covera/windep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "covera/errors.hpp"

namespace covera {

WeightedGraph::WeightedGraph(std::vector<int> labels) : labels_(std::move(labels)) {
    std::set<int> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw InvalidArgument("weighted graph: repeated vertex label");
    w_.assign(labels_.size() * labels_.size(), Rat(0));
}

WeightedGraph WeightedGraph::zero(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    return WeightedGraph(std::move(labels));
}

WeightedGraph WeightedGraph::from_multigraph(const Multigraph& g) {
    WeightedGraph out = zero(g.v);
    for (int u = 1; u <= g.v; ++u)
        for (int w = u + 1; w <= g.v; ++w)
            out.set_weight(u - 1, w - 1, Rat(g.at(u, w)));
    return out;
}

void WeightedGraph::set_weight(int i, int j, const Rat& w) {
    if (i == j) throw InvalidArgument("weighted graph: loops are not allowed");
    if (w < 0) throw InvalidArgument("weighted graph: negative weight");
    w_[std::size_t(i) * size() + j] = w;
    w_[std::size_t(j) * size() + i] = w;
}

const Rat& WeightedGraph::weight(int i, int j) const {
    return w_[std::size_t(i) * size() + j];
}

Rat WeightedGraph::vertex_weight(int i) const {
    Rat total = 0;
    for (int j = 0; j < size(); ++j)
        if (j != i) total += weight(i, j);
    return total;
}

int WeightedGraph::index_of(int label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw InvalidArgument("weighted graph: unknown label " + std::to_string(label));
}

WeightedGraph WeightedGraph::induced(const std::vector<int>& labels) const {
    WeightedGraph out(labels);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            out.set_weight(int(i), int(j), weight(index_of(labels[i]), index_of(labels[j])));
    return out;
}

Rat f_m(long long m, const Rat& x) {
    if (m < 1) throw InvalidArgument("f_m: m must be a positive integer");
    if (x < 0) throw InvalidArgument("f_m: x must be nonnegative");
    if (x <= m) return Rat(1) - x / Rat(2 * m);
    return Rat(m + 1) / (Rat(2) * x + 2);
}

std::vector<int> m_max(const WeightedGraph& g, long long m) {
    if (m < 1) throw InvalidArgument("m_max: m must be a positive integer");
    std::vector<int> alive(g.size());
    std::iota(alive.begin(), alive.end(), 0);
    for (;;) {
        int worst = -1;
        Rat worst_weight = 0;
        for (int i : alive) {
            Rat wt = 0;
            for (int j : alive)
                if (j != i) wt += g.weight(i, j);
            bool better = worst < 0 || wt > worst_weight ||
                          (wt == worst_weight && g.labels()[i] < g.labels()[worst]);
            if (better) {
                worst = i;
                worst_weight = wt;
            }
        }
        if (worst < 0 || worst_weight < m) break;
        alive.erase(std::find(alive.begin(), alive.end(), worst));
    }
    std::vector<int> out;
    out.reserve(alive.size());
    for (int i : alive) out.push_back(g.labels()[i]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_edge_hypothesis(const WeightedGraph& g, long long m) {
    std::vector<Rat> wt(g.size());
    for (int i = 0; i < g.size(); ++i) wt[i] = g.vertex_weight(i);
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            const Rat& e = g.weight(i, j);
            if (e > 0 && e < 1 && wt[i] >= m && wt[j] >= m)
                throw HypothesisViolation(
                    "edge of weight " + rat_str(e) + " joins two vertices of weight >= " +
                    std::to_string(m));
        }
}

}  // namespace

Int caro_tuza_bound(const WeightedGraph& g, long long m) {
    if (m < 1) throw InvalidArgument("caro_tuza_bound: m must be a positive integer");
    check_edge_hypothesis(g, m);
    Rat total = 0;
    for (int i = 0; i < g.size(); ++i) total += f_m(m, g.vertex_weight(i));
    return ceil_rat(total);
}

Int induced_bound_a(const WeightedGraph& g, long long m, const std::vector<int>& subset) {
    if (subset.empty()) throw InvalidArgument("induced_bound_a: S must be nonempty");
    check_edge_hypothesis(g, m);
    Rat sum = 0;
    for (int label : subset) sum += g.vertex_weight(g.index_of(label));
    Rat mean = sum / Rat(subset.size());
    return ceil_rat(Rat(subset.size()) * f_m(m, mean));
}

Int induced_bound_b(const WeightedGraph& g, long long m, const std::vector<int>& s0,
                    const std::vector<int>& s1) {
    if (s0.empty() || s1.empty())
        throw InvalidArgument("induced_bound_b: classes must be nonempty");
    for (int label : s0)
        if (std::find(s1.begin(), s1.end(), label) != s1.end())
            throw InvalidArgument("induced_bound_b: classes overlap at " + std::to_string(label));
    check_edge_hypothesis(g, m);
    Rat total = 0;
    for (const auto* cls : {&s0, &s1}) {
        Rat sum = 0;
        for (int label : *cls) sum += g.vertex_weight(g.index_of(label));
        total += Rat(cls->size()) * f_m(m, sum / Rat(cls->size()));
    }
    return ceil_rat(total);
}

CReducedGraph c_reduced(const Multigraph& g, const std::vector<int>& v0,
                        const std::vector<int>& v1, const Rat& c, long long d, long long r,
                        long long lambda) {
    if (r <= lambda) throw InvalidArgument("c_reduced: requires r > lambda");
    if (!(Rat(d) / Rat(r - lambda) < c && c < 1))
        throw InvalidArgument("c_reduced: c must lie in (d/(r-lambda), 1)");
    for (int u : v0)
        if (std::find(v1.begin(), v1.end(), u) != v1.end())
            throw InvalidArgument("c_reduced: V0 and V1 overlap at " + std::to_string(u));

    std::vector<int> labels = v0;
    labels.insert(labels.end(), v1.begin(), v1.end());
    WeightedGraph graph(labels);
    auto in_v1 = [&](int label) {
        return std::find(v1.begin(), v1.end(), label) != v1.end();
    };
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            Rat mu = Rat(g.at(labels[i], labels[j]));
            bool i1 = in_v1(labels[i]), j1 = in_v1(labels[j]);
            Rat w = 0;
            if (i1 && j1)
                w = mu;
            else if (i1 || j1)
                w = c * mu;
            graph.set_weight(int(i), int(j), w);
        }
    return CReducedGraph{std::move(graph), v0, v1, c};
}

Rat h_value(long long v0, long long v1, long long d, long long k, long long n, long long m,
            const Rat& x) {
    if (x < 0) throw InvalidArgument("h_value: x must be nonnegative");
    Rat limit = std::min(Rat(v0 * d), Rat(v1 * (d + k - 1)));
    if (x > limit) throw InvalidArgument("h_value: x outside domain");
    if (x == 0 || v0 == 0 || v1 == 0) {
        if (x != 0) throw InvalidArgument("h_value: domain is {0} when v0 or v1 is empty");
        Rat tail = (v1 == 0) ? Rat(0) : Rat(v1) * f_m(m, Rat(d + k - 1));
        return Rat(v0) + tail;
    }
    Rat left = Rat(v0) * f_m(m, Rat(d) * x / (Rat(n) * v0));
    Rat right = Rat(v1) * f_m(m, Rat(d + k - 1) - Rat(n - d) * x / (Rat(n) * v1));
    return left + right;
}

}  // namespace covera
