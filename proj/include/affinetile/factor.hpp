#pragma once

#include <utility>
#include <vector>

#include "affinetile/poly.hpp"

namespace tiling {

// Irreducible factorization over Q of a nonzero polynomial: monic irreducible
// factors with multiplicities, sorted by (degree, coefficients).  Squarefree
// parts of degree > 8 are rejected with math_error.
std::vector<std::pair<RatPoly, int>> factor_rational(const RatPoly& p);
std::vector<std::pair<RatPoly, int>> factor_rational(const IntPoly& p);

// Distinct monic irreducible factors, multiplicities dropped.
std::vector<RatPoly> distinct_irreducible_factors(const RatPoly& p);

bool is_irreducible(const RatPoly& p);

// Radical: product of the distinct monic irreducible factors.
RatPoly radical(const RatPoly& p);

}  // namespace tiling
