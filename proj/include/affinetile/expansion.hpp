#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affinetile/factor.hpp"
#include "affinetile/matrix.hpp"
#include "affinetile/roots.hpp"

namespace tiling {

// One selected root of a monic irreducible polynomial, with multiplicity.
struct SpectralSelection {
  IntPoly min_poly;
  std::pair<double, double> approx;  // picks the root nearest this point
  int multiplicity = 1;
};

// Block-spectral form of an expansion map: complex selections implicitly
// carry their conjugates (real matrices have conjugation-closed spectra).
struct SpectralSpec {
  std::vector<SpectralSelection> selections;
};

// An expansion map, given either as a rational matrix or spectrally.
struct ExpansionMap {
  std::optional<RatMat> matrix;
  std::optional<SpectralSpec> spectral;
};

// A certified eigenvalue: monic irreducible minimal polynomial, isolated
// root, and algebraic multiplicity (conjugates are separate entries).
struct Eigenvalue {
  RatPoly min_poly;
  RootBox box;
  int multiplicity;
  bool algebraic_integer;

  std::pair<double, double> approx() const { return box.approx(); }
};

struct EigenData {
  std::vector<Eigenvalue> values;  // conjugation-closed
  size_t dimension() const;
};

bool same_eigenvalue(const Eigenvalue& a, const Eigenvalue& b);

// throws math_error unless |eigenvalue| > 1 (exact for algebraic integers)
void require_expanding(const Eigenvalue& e);

// Extract certified conjugation-closed eigendata; rejects non-expanding maps
// (math_error naming the offending modulus) and non-diagonalizable rational
// matrices (input_error citing the diagonalizability hypothesis).
EigenData eigen_data(const ExpansionMap& phi, long precision_bits = 128);

enum class PerronClass { Perron, ComplexPerron, Neither };

// Lind / Thurston classification of an algebraic integer with |lambda| > 1.
PerronClass classify_perron(const Eigenvalue& lambda);

struct ConjugateReport {
  std::pair<double, double> approx;
  int modulus_cmp;            // sign of |conjugate| - |eigenvalue|
  int present_multiplicity;   // multiplicity of the conjugate in the spectrum
  bool ok;
};

struct EigenvalueReport {
  std::pair<double, double> approx;
  std::string min_poly;
  int multiplicity;
  std::vector<ConjugateReport> conjugates;
  bool ok;
};

struct Verdict {
  bool pass = false;
  std::vector<EigenvalueReport> reports;
  std::vector<std::string> failures;
};

// Necessary condition: every eigenvalue is an algebraic integer, and each
// Galois conjugate either has strictly smaller modulus or is itself an
// eigenvalue with at least the same multiplicity.
Verdict check_theorem_condition(const EigenData& spec);

// Direct sum of companion blocks: one copy of each distinct minimal
// polynomial per maximal multiplicity among its selected roots.
IntMat build_companion_witness(const EigenData& spec);

struct Competitor {
  std::vector<std::pair<double, double>> members;
  double growth;
  int cmp_vs_target;  // sign of target growth - this growth
  bool is_target;
};

struct WitnessReport {
  IntMat M;
  double target_growth = 0;
  std::vector<Competitor> competitors;
  bool strict_max = false;
};

// Enumerate all conjugation-closed size-n sub-multisets of spec(M) and
// compare |product| against the target multiset, exactly.
WitnessReport check_growth_condition(const IntMat& M, const EigenData& target);

}  // namespace tiling
