#include "covera/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "covera/errors.hpp"

namespace covera {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t max_nodes;
    Clock::time_point deadline;
    bool timed;
    std::uint64_t nodes = 0;
    bool exceeded = false;

    explicit Budget(const SearchBudget& b)
        : max_nodes(b.max_nodes),
          timed(b.max_seconds != std::numeric_limits<double>::infinity()) {
        if (timed)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(b.max_seconds));
    }

    // Returns false once exhausted.
    bool tick() {
        if (exceeded) return false;
        ++nodes;
        if (nodes > max_nodes) {
            exceeded = true;
            return false;
        }
        if (timed && (nodes & 0xFFF) == 1 && Clock::now() > deadline) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

int pair_index(int u, int w, int v) {
    if (u > w) std::swap(u, w);
    // 1-based points; pairs {u,w} in lexicographic order.
    int before = (u - 1) * v - (u - 1) * u / 2;
    return before + (w - u - 1);
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Enumerates k-subsets {p,q} u {k-2 of pool} in lexicographic block order.
template <typename Fn>
void for_blocks_through(int p, int q, const std::vector<int>& pool, int k, Fn&& fn) {
    int need = k - 2;
    int n_pool = int(pool.size());
    if (n_pool < need) return;
    std::vector<int> pick(need);
    std::vector<int> block;
    int depth = 0, start = 0;
    for (;;) {
        if (depth == need) {
            block.clear();
            block.push_back(p);
            block.push_back(q);
            for (int c : pick) block.push_back(pool[c]);
            std::sort(block.begin(), block.end());
            if (!fn(block)) return;
            --depth;
            if (depth < 0) break;
            start = pick[depth] + 1;
            continue;
        }
        if (start <= n_pool - (need - depth)) {
            pick[depth] = start;
            ++depth;
            ++start;
        } else {
            --depth;
            if (depth < 0) break;
            start = pick[depth] + 1;
        }
    }
}

struct CoverSearch {
    int v, k, lam;
    long long block_pairs;            // k choose 2
    std::vector<int> deficit_pair;    // lambda - count per pair (may go negative)
    std::vector<long long> deficit_point;
    long long deficit_total = 0;
    std::vector<std::vector<int>> chosen;
    Budget& budget;
    bool canonical;
    std::vector<std::vector<int>> found;

    CoverSearch(int v_, int k_, int lam_, Budget& b, bool canonical_)
        : v(v_), k(k_), lam(lam_), budget(b), canonical(canonical_) {
        int pair_total = v * (v - 1) / 2;
        block_pairs = (long long)k * (k - 1) / 2;
        deficit_pair.assign(pair_total, lam);
        deficit_point.assign(v, (long long)lam * (v - 1));
        deficit_total = (long long)lam * pair_total;
    }

    void apply(const std::vector<int>& block, int dir) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                int idx = pair_index(block[i], block[j], v);
                if (dir > 0) {
                    if (deficit_pair[idx] > 0) {
                        --deficit_total;
                        --deficit_point[block[i] - 1];
                        --deficit_point[block[j] - 1];
                    }
                    --deficit_pair[idx];
                } else {
                    ++deficit_pair[idx];
                    if (deficit_pair[idx] > 0) {
                        ++deficit_total;
                        ++deficit_point[block[i] - 1];
                        ++deficit_point[block[j] - 1];
                    }
                }
            }
    }

    bool bounds_ok(long long remaining) const {
        if (deficit_total > remaining * block_pairs) return false;
        long long demand = 0;
        for (int u = 0; u < v; ++u) {
            long long need = ceil_div(deficit_point[u], k - 1);
            if (need > remaining) return false;
            demand += need;
        }
        return demand <= remaining * k;
    }

    bool dfs(long long remaining) {
        if (!budget.tick()) return false;
        if (deficit_total == 0) {
            found = chosen;
            return true;
        }
        if (remaining == 0 || !bounds_ok(remaining)) return false;

        int p = 0, q = 0;
        {
            int idx = 0;
            bool done = false;
            for (int u = 1; u <= v && !done; ++u)
                for (int w = u + 1; w <= v; ++w, ++idx)
                    if (deficit_pair[idx] > 0) {
                        p = u;
                        q = w;
                        done = true;
                        break;
                    }
        }

        std::vector<int> last;  // empty = unconstrained
        if (canonical && !chosen.empty()) last = chosen.back();
        std::vector<int> pool;
        for (int u = 1; u <= v; ++u)
            if (u != p && u != q) pool.push_back(u);

        bool success = false;
        for_blocks_through(p, q, pool, k, [&](const std::vector<int>& block) {
            if (!last.empty() && block < last) return true;  // below canonical order, skip
            apply(block, +1);
            chosen.push_back(block);
            if (dfs(remaining - 1)) {
                success = true;
                return false;
            }
            chosen.pop_back();
            apply(block, -1);
            return !budget.exceeded;
        });
        return success;
    }
};

struct PackSearch {
    int v, k, lam;
    long long block_pairs;
    std::vector<int> capacity;  // spare capacity per pair
    std::vector<char> sealed;
    std::vector<long long> point_free;  // unsealed capacity incident to each point
    long long slack = 0;                // unsealed capacity total
    std::vector<std::vector<int>> chosen;
    long long best = -1;
    std::vector<std::vector<int>> witness;
    Budget& budget;

    PackSearch(int v_, int k_, int lam_, Budget& b)
        : v(v_), k(k_), lam(lam_), budget(b) {
        int pair_total = v * (v - 1) / 2;
        block_pairs = (long long)k * (k - 1) / 2;
        capacity.assign(pair_total, lam);
        sealed.assign(pair_total, 0);
        point_free.assign(v, (long long)lam * (v - 1));
        slack = (long long)lam * pair_total;
    }

    long long upper_bound() const {
        long long by_slack = (long long)chosen.size() + slack / block_pairs;
        long long demand = 0;
        for (int u = 0; u < v; ++u) demand += point_free[u] / (k - 1);
        return std::min(by_slack, (long long)chosen.size() + demand / k);
    }

    void record() {
        if ((long long)chosen.size() > best) {
            best = (long long)chosen.size();
            witness = chosen;
        }
    }

    void apply_block(const std::vector<int>& block, int dir) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                capacity[pair_index(block[i], block[j], v)] -= dir;
                slack -= dir;
                point_free[block[i] - 1] -= dir;
                point_free[block[j] - 1] -= dir;
            }
    }

    bool usable(int u, int w) const {
        int idx = pair_index(u, w, v);
        return !sealed[idx] && capacity[idx] > 0;
    }

    // branch_pair: pair index used at the parent when it added a block, or
    // -1; consecutive additions through the same pair are forced
    // nondecreasing, which removes permutation duplicates.
    void dfs(int branch_pair, std::vector<int> last_block) {
        if (!budget.tick()) return;
        int p = -1, q = -1;
        {
            int idx = 0;
            for (int u = 1; u <= v && p < 0; ++u)
                for (int w = u + 1; w <= v; ++w, ++idx)
                    if (!sealed[idx] && capacity[idx] > 0) {
                        p = u;
                        q = w;
                        break;
                    }
        }
        if (p < 0) {
            record();
            return;
        }
        if (upper_bound() <= best) return;

        int this_pair = pair_index(p, q, v);
        bool ordered = branch_pair == this_pair && !last_block.empty();

        std::vector<int> pool;
        for (int u = 1; u <= v; ++u)
            if (u != p && u != q && usable(p, u) && usable(q, u)) pool.push_back(u);

        for_blocks_through(p, q, pool, k, [&](const std::vector<int>& block) {
            if (ordered && block < last_block) return true;
            bool ok = true;
            for (std::size_t i = 0; i < block.size() && ok; ++i)
                for (std::size_t j = i + 1; j < block.size() && ok; ++j)
                    ok = usable(block[i], block[j]);
            if (ok) {
                apply_block(block, +1);
                chosen.push_back(block);
                dfs(this_pair, block);
                chosen.pop_back();
                apply_block(block, -1);
            }
            return !budget.exceeded;
        });
        if (budget.exceeded) return;

        // Never cover {p,q} again.
        int cap = capacity[this_pair];
        sealed[this_pair] = 1;
        slack -= cap;
        point_free[p - 1] -= cap;
        point_free[q - 1] -= cap;
        dfs(-1, {});
        point_free[p - 1] += cap;
        point_free[q - 1] += cap;
        slack += cap;
        sealed[this_pair] = 0;
    }

    // Plain nondecreasing multiset enumeration, for cross-validation.
    void dfs_reference(const std::vector<int>& min_block) {
        if (!budget.tick()) return;
        record();
        if (upper_bound() <= best) return;
        std::vector<int> block = min_block;
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < block.size() && ok; ++i)
                for (std::size_t j = i + 1; j < block.size() && ok; ++j)
                    ok = capacity[pair_index(block[i], block[j], v)] > 0;
            if (ok) {
                apply_block(block, +1);
                chosen.push_back(block);
                dfs_reference(block);
                chosen.pop_back();
                apply_block(block, -1);
                if (budget.exceeded) return;
            }
            int i = k - 1;
            while (i >= 0 && block[i] == v - (k - 1 - i)) --i;
            if (i < 0) break;
            ++block[i];
            for (int j = i + 1; j < k; ++j) block[j] = block[j - 1] + 1;
        }
    }
};

}  // namespace

SearchResult min_cover(int v, int k, int lambda, const SearchBudget& budget, SearchMode mode) {
    if (!(3 <= k && k < v)) throw TrivialParamsError("min_cover: requires 3 <= k < v");
    if (lambda < 1) throw TrivialParamsError("min_cover: lambda must be positive");

    // Schonheim bound, computed locally: the deepening start.
    long long target = (long long)lambda * (v - 1);
    long long r = ceil_div(target, k - 1);
    long long start = std::max(ceil_div((long long)v * r, k), 1LL);

    Budget shared(budget);
    SearchResult out;
    for (long long depth = start;; ++depth) {
        CoverSearch search(v, k, lambda, shared, mode == SearchMode::canonical);
        bool found = search.dfs(depth);
        if (shared.exceeded) {
            out.status = SearchStatus::budget_exceeded;
            out.nodes = shared.nodes;
            return out;
        }
        if (found) {
            out.status = SearchStatus::found;
            out.value = (long long)search.found.size();
            out.witness = make_design(v, k, lambda, search.found);
            out.nodes = shared.nodes;
            return out;
        }
    }
}

SearchResult max_pack(int v, int k, int lambda, const SearchBudget& budget, SearchMode mode) {
    if (!(3 <= k && k < v)) throw TrivialParamsError("max_pack: requires 3 <= k < v");
    if (lambda < 1) throw TrivialParamsError("max_pack: lambda must be positive");
    Budget shared(budget);
    PackSearch search(v, k, lambda, shared);
    if (mode == SearchMode::canonical) {
        search.dfs(-1, {});
    } else {
        std::vector<int> first(k);
        for (int i = 0; i < k; ++i) first[i] = i + 1;
        search.dfs_reference(first);
    }
    SearchResult out;
    out.nodes = shared.nodes;
    if (shared.exceeded) {
        out.status = SearchStatus::budget_exceeded;
        out.value = search.best;  // valid lower bound, not proven optimal
        return out;
    }
    out.status = SearchStatus::found;
    out.value = search.best;
    out.witness = make_design(v, k, lambda, search.witness);
    return out;
}

}  // namespace covera
