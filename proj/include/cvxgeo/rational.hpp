#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cvx {

/// Exact rational scalar. All geometric predicates are decided with these;
/// floating point never enters the affine module.
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

/// Row rank by fraction-free-ish Gaussian elimination (exact).
int rat_rank(RatMat m);

/// Unique solution of A x = b, or nullopt when the system is inconsistent
/// or underdetermined.
std::optional<RatVec> solve_unique(RatMat a, RatVec b);

}  // namespace cvx
