#pragma once

#include <string>
#include <vector>

#include "affinetile/numberfield.hpp"

namespace tiling {

// Reduced word in a free group.  Letter i is stored as i+1, its inverse as
// -(i+1); letters are named 'a', 'b', ... for parsing and printing.
using Word = std::vector<int>;

Word reduce(Word w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

// lowercase = generator, uppercase = inverse, "[x,y]" = commutator shorthand
Word parse_word(const std::string& s, size_t num_letters);
std::string word_to_string(const Word& w);

// letter counts (with sign) of a word
std::vector<Int> abelianization(const Word& w, size_t num_letters);

struct Endomorphism {
  std::vector<Word> images;  // image of each generator

  size_t num_letters() const { return images.size(); }
};

// apply and reduce; throws math_error when the unreduced image exceeds budget
Word apply_endo(const Endomorphism& psi, const Word& w, size_t budget = 10'000'000);

// letter-count matrix of psi (column j = abelianization of psi(letter j))
IntMat endo_matrix(const Endomorphism& psi);

// letter -> exact vector assignment together with the expansion
struct VectorAssignment {
  std::shared_ptr<const NumberField> field;
  std::vector<size_t> coord_slots;
  Mat<FieldElem> expansion;                        // num_coords x num_coords
  std::vector<std::vector<FieldElem>> vectors;     // per letter

  size_t num_coords() const { return coord_slots.size(); }
  bool slot_real(size_t coord) const { return field->root(coord_slots[coord]).is_real(); }
};

// exact: sum of vectors of psi(x) equals phi * vector(x) for every letter
bool check_compatibility(const VectorAssignment& assign, const Endomorphism& psi);

// exact: the path of w returns to the origin
bool is_closed(const VectorAssignment& assign, const Word& w);

// vertices of phi^{-n} applied to the cumulative path of psi^n(w), embedded
// numerically; the exact endpoint is checked to be zero
std::vector<std::pair<double, double>> boundary_curve(const VectorAssignment& assign,
                                                      const Endomorphism& psi, const Word& w,
                                                      int iters, size_t budget = 10'000'000);

// one path per polyline; viewBox padded 5%, stroke 0.2% of the diagonal
std::string svg_document(const std::vector<std::vector<std::pair<double, double>>>& polylines);

}  // namespace tiling
