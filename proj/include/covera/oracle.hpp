#pragma once

#include <cstdint>
#include <limits>

#include "covera/design.hpp"

namespace covera {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

enum class SearchStatus { found, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    long long value = -1;       // exact optimum when status == found
    Design witness;             // optimal design when status == found
    std::uint64_t nodes = 0;
};

// canonical is the production search; reference drops the canonical-order
// restrictions and exists to cross-validate pruning soundness on tiny cases.
enum class SearchMode { canonical, reference };

// Exact minimum block count of a (v,k,lambda)-covering, by iterative
// deepening starting at the Schonheim bound. Blocks are explored in
// nondecreasing canonical order and each new block must contain the first
// deficient pair. Intended for v <= 10.
SearchResult min_cover(int v, int k, int lambda, const SearchBudget& budget = {},
                       SearchMode mode = SearchMode::canonical);

// Exact maximum block count of a (v,k,lambda)-packing, by branch and bound
// over the first pair with spare capacity (use it or seal it), pruned by
// pair-slack and per-point capacity counts.
SearchResult max_pack(int v, int k, int lambda, const SearchBudget& budget = {},
                      SearchMode mode = SearchMode::canonical);

}  // namespace covera
