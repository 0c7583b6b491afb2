#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covera/arith.hpp"
#include "covera/design.hpp"

namespace covera {

// Soundness audit of a concrete design file: classification, block count,
// the rank lower bound, and (for nontrivial parameters) comparison against
// the applicable catalog bounds. sound is false when a relation that must
// hold for genuine coverings/packings fails.
struct VerifyResult {
    Classification classification;
    long long b = 0;
    long long bose = 0;
    bool sound = true;
    std::optional<bool> certificate;  // set when a subset was supplied
    std::string text;
};

VerifyResult verify_design(const Design& d, const std::vector<int>& subset = {},
                           const std::vector<Rat>& weights = {});

}  // namespace covera
