#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace covera {

// All bound computations run on arbitrary-precision integers and rationals.
// Floating point never enters a value path; see Surd for the irrational case.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Largest r with r*r <= n. Requires n >= 0.
Int isqrt_floor(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

int sign_of(const Rat& x);

std::string int_str(const Int& n);

// "p" when integral, otherwise "p/q" in lowest terms.
std::string rat_str(const Rat& x);

// Accepts "p" or "p/q" with optional sign.
Rat parse_rat(const std::string& text);

}  // namespace covera
