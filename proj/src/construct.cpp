#include "covera/construct.hpp"

#include <algorithm>
#include <string>

#include "covera/errors.hpp"
#include "covera/gf.hpp"

namespace covera {

Design affine_plane(int q) {
    FiniteField gf(q);
    auto point = [&](int x, int y) { return 1 + x * q + y; };

    std::vector<std::vector<int>> blocks;
    blocks.reserve(std::size_t(q) * q + q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            line.reserve(q);
            for (int x = 0; x < q; ++x) line.push_back(point(x, gf.add(gf.mul(a, x), b)));
            blocks.push_back(std::move(line));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        line.reserve(q);
        for (int y = 0; y < q; ++y) line.push_back(point(c, y));
        blocks.push_back(std::move(line));
    }
    return make_design(q * q, q, 1, std::move(blocks));
}

Design blowup(int q, int s) {
    if (s < 1) throw InvalidArgument("blowup: s must be positive");
    Design plane = affine_plane(q);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(plane.b());
    for (const auto& line : plane.blocks) {
        std::vector<int> block;
        block.reserve(line.size() * s);
        for (int u : line)
            for (int i = 1; i <= s; ++i) block.push_back((u - 1) * s + i);
        blocks.push_back(std::move(block));
    }
    return make_design(plane.v * s, plane.k * s, 1, std::move(blocks));
}

Design restrict_covering(const Design& d, int v_target) {
    if (d.lambda != 1) throw InvalidArgument("restrict_covering: requires lambda = 1");
    if (!classify(d).is_covering())
        throw InvalidArgument("restrict_covering: input is not a covering");
    if (v_target > d.v) throw InvalidArgument("restrict_covering: v_target exceeds v");
    if (v_target <= d.k) throw InvalidArgument("restrict_covering: requires v_target > k");
    if (v_target == d.v) return d;

    std::vector<std::vector<int>> blocks;
    blocks.reserve(d.b());
    for (const auto& block : d.blocks) {
        std::vector<int> reduced;
        std::vector<bool> present(v_target + 1, false);
        int removed = 0;
        for (int u : block) {
            if (u <= v_target) {
                reduced.push_back(u);
                present[u] = true;
            } else {
                ++removed;
            }
        }
        int candidate = 1;
        while (removed-- > 0) {
            while (candidate <= v_target && present[candidate]) ++candidate;
            if (candidate > v_target)
                throw InternalError("restrict_covering: no replacement point available");
            present[candidate] = true;
            reduced.push_back(candidate);
        }
        blocks.push_back(std::move(reduced));
    }
    Design out = make_design(v_target, d.k, 1, std::move(blocks));
    if (!classify(out).is_covering())
        throw InternalError("restrict_covering: result lost the covering property");
    return out;
}

ExactRange exact_range(std::int64_t q, std::int64_t s) {
    if (q < 2 || !is_prime_power(int(q)))
        throw InvalidArgument("exact_range: q must be a prime power >= 2");
    if (s < 2 * q + 1)
        throw InvalidArgument("exact_range: requires s >= 2q+1, got s=" + std::to_string(s));
    ExactRange out;
    out.q = q;
    out.s = s;
    if (s <= 4 * q + 1)
        out.z = std::min(Rat(q - 1), Rat(q * (s - 2 * q - 1) + 2, q + 1));
    else
        out.z = Rat(q * q * (s - q - 2) - q + 2, 3 * q * q + 3 * q - 2);
    out.v_hi = s * q * q;
    Rat cutoff = Rat(out.v_hi - q + 1) - out.z;
    out.v_lo = floor_rat(cutoff).convert_to<std::int64_t>() + 1;
    return out;
}

}  // namespace covera
