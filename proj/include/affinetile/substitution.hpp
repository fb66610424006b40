#pragma once

#include <memory>
#include <string>
#include <vector>

#include "affinetile/expansion.hpp"
#include "affinetile/numberfield.hpp"

namespace tiling {

// A tile-substitution system with exact algebraic data.  Points are vectors
// of field elements, one per coordinate; each coordinate carries its own
// embedding slot (a real slot is one axis, a complex slot is two).
struct SubstitutionRule {
  struct Tile {
    std::string name;
    // ordered children: (type index, offset vector)
    std::vector<std::pair<size_t, std::vector<FieldElem>>> children;
    size_t control_child = 0;
    std::vector<std::pair<double, double>> seed_polygon;  // rendering only
  };

  std::shared_ptr<const NumberField> field;
  std::vector<size_t> coord_slots;  // embedding slot per coordinate
  Mat<FieldElem> expansion;         // diagonal, or rational over real slots
  std::vector<Tile> tiles;

  size_t num_coords() const { return coord_slots.size(); }
  size_t real_dimension() const;
  bool slot_real(size_t coord) const { return field->root(coord_slots[coord]).is_real(); }
  void validate() const;
};

struct PlacedTile {
  size_t type;
  std::vector<FieldElem> translation;

  friend bool operator==(const PlacedTile& a, const PlacedTile& b) {
    return a.type == b.type && a.translation == b.translation;
  }
};

struct Patch {
  std::vector<PlacedTile> tiles;
  int level = 0;
};

IntMat subdivision_matrix(const SubstitutionRule& rule);

// some power (up to dimension^2) of the boolean shadow is strictly positive
bool is_primitive(const IntMat& m);

struct VolumeReport {
  double pf_eigenvalue = 0;
  double abs_det = 0;
  bool consistent = false;  // agreement within 1e-9
};
VolumeReport volume_consistency(const SubstitutionRule& rule);

std::vector<FieldElem> apply_expansion(const SubstitutionRule& rule,
                                       const std::vector<FieldElem>& v);

Patch seed_patch(const SubstitutionRule& rule, size_t type);

// k levels of subdivision; duplicate placed tiles at level >= 1 are an input
// validation error (overlapping interiors)
Patch expand_patch(const SubstitutionRule& rule, const Patch& patch, int k);

// exact control points c_i with phi c_i = c_{sigma(i)} + d_i
std::vector<std::vector<FieldElem>> control_points(const SubstitutionRule& rule);

// forward invariance of the control-point set at level k
bool verify_control_invariance(const SubstitutionRule& rule, int k);

// conjugation-closed eigendata of the expansion (for the theorem verdict);
// rejects non-expanding maps like eigen_data
EigenData rule_eigen_data(const SubstitutionRule& rule, long precision_bits = 128);

// numeric coordinates of an exact point (real dimension 1 -> y = 0)
std::pair<double, double> numeric_point(const SubstitutionRule& rule,
                                        const std::vector<FieldElem>& v);

}  // namespace tiling
