#pragma once

#include "affinetile/substitution.hpp"

namespace tiling {

// Free generators of the Z-module spanned by a set of exact points.  The
// basis is canonical: points are flattened to rational vectors of length
// coords * field degree and put in column Hermite normal form.
struct ZModuleBasis {
  RatMat basis;  // (coords * degree) x N, column echelon, canonical
  std::vector<std::vector<FieldElem>> generators;  // the N columns as points

  size_t rank() const { return basis.cols(); }
  friend bool operator==(const ZModuleBasis& a, const ZModuleBasis& b) {
    return a.basis == b.basis;
  }
};

struct AddressMap {
  ZModuleBasis basis;
  int level = 0;  // level at which the module stabilized
};

struct ExpansionOnJ {
  IntMat M;  // phi V = V M, integer by construction
};

struct MReport {
  bool integral = false;
  bool diagonalizable = false;
  RatPoly char_poly;
  // (minimal polynomial of a phi-eigenvalue, divides char_poly(M))
  std::vector<std::pair<std::string, bool>> divisibility;
  bool all_divisible = false;
  double lipschitz_level_k = 0;   // max |a(xi)|_inf / |xi|_inf over differences
  double lipschitz_level_k1 = 0;  // same at the next level
};

// all pairwise differences of control points within the level-k patch of
// every seed type, deduplicated exactly
std::vector<std::vector<FieldElem>> collect_differences(const SubstitutionRule& rule, int k);

ZModuleBasis zmodule_basis(const SubstitutionRule& rule,
                           const std::vector<std::vector<FieldElem>>& vectors);

// integer coordinates with V a = xi; throws math_error if xi is outside J
std::vector<Int> address(const ZModuleBasis& basis, const SubstitutionRule& rule,
                         const std::vector<FieldElem>& xi);

// levels k = 2, 3, ... until two consecutive normal forms agree
AddressMap stabilized_address_map(const SubstitutionRule& rule, int k_max = 8);

// M with phi V = V M; throws math_error if phi V leaves the module
ExpansionOnJ expansion_on_J(const SubstitutionRule& rule, const AddressMap& map);

MReport verify_M_properties(const SubstitutionRule& rule, const AddressMap& map,
                            const ExpansionOnJ& e);

}  // namespace tiling
