#include "affinetile/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace tiling {

namespace {

double dist2(std::pair<double, double> a, std::pair<double, double> b) {
  double dr = a.first - b.first, di = a.second - b.second;
  return dr * dr + di * di;
}

RealAlg one() { return RealAlg::from_rational(Rat(1)); }

}  // namespace

// exact for algebraic integers, interval refinement otherwise (non-integers
// already fail the theorem's part (i))
void require_expanding(const Eigenvalue& e) {
  if (e.algebraic_integer) {
    if (compare_exact(modulus_squared(e.box), one()) <= 0) {
      auto [re, im] = e.approx();
      throw math_error("map is not expanding: eigenvalue near (" + std::to_string(re) + ", " +
                       std::to_string(im) + ") has modulus <= 1");
    }
    return;
  }
  RootBox b = e.box;
  for (long bits = 16; bits <= 1024; bits *= 2) {
    RatInterval m = b.refined(bits).mag_sq();
    if (m.lo > 1) return;
    if (m.hi < 1) {
      auto [re, im] = e.approx();
      throw math_error("map is not expanding: eigenvalue near (" + std::to_string(re) + ", " +
                       std::to_string(im) + ") has modulus < 1");
    }
  }
  throw math_error("cannot certify that the map is expanding (modulus indistinguishable from 1)");
}

namespace {

std::vector<Eigenvalue> roots_of_factor(const RatPoly& f, int mult, const Rat& precision) {
  std::vector<Eigenvalue> out;
  bool alg_int = is_integral(f);
  for (const RootBox& r : isolate_roots(f, precision))
    out.push_back({f, r, mult, alg_int});
  return out;
}

}  // namespace

size_t EigenData::dimension() const {
  size_t n = 0;
  for (const auto& e : values) n += e.multiplicity;
  return n;
}

bool same_eigenvalue(const Eigenvalue& a, const Eigenvalue& b) {
  return a.min_poly == b.min_poly && same_root(a.box, b.box);
}

EigenData eigen_data(const ExpansionMap& phi, long precision_bits) {
  Rat precision = pow2_inv(precision_bits);
  EigenData out;
  if (phi.matrix && phi.spectral) throw input_error("expansion map must have exactly one form");
  if (phi.matrix) {
    const RatMat& a = *phi.matrix;
    if (!a.is_square()) throw input_error("expansion matrix must be square");
    if (!is_diagonalizable(a))
      throw input_error(
          "matrix is not diagonalizable over C; the theorem's hypothesis requires a "
          "diagonalizable expanding map (the Jordan-block case is open)");
    for (const auto& [f, mult] : factor_rational(char_poly(a)))
      for (auto& e : roots_of_factor(f, mult, precision)) out.values.push_back(std::move(e));
  } else if (phi.spectral) {
    for (const auto& sel : phi.spectral->selections) {
      if (!is_monic(sel.min_poly)) throw input_error("spectral min_poly must be monic");
      RatPoly f = to_rat(sel.min_poly);
      if (!is_irreducible(f)) throw input_error("spectral min_poly must be irreducible: " + to_string(sel.min_poly));
      if (sel.multiplicity < 1) throw input_error("multiplicity must be positive");
      std::vector<RootBox> roots = isolate_roots(sel.min_poly, precision);
      size_t best = 0;
      for (size_t i = 1; i < roots.size(); ++i)
        if (dist2(roots[i].approx(), sel.approx) < dist2(roots[best].approx(), sel.approx)) best = i;
      Eigenvalue e{f, roots[best], sel.multiplicity, true};
      for (const auto& prev : out.values)
        if (same_eigenvalue(prev, e))
          throw input_error("spectral selection repeats a root (conjugates are implicit)");
      bool real = roots[best].is_real();
      out.values.push_back(e);
      if (!real) out.values.push_back({f, roots[best].conjugate(), sel.multiplicity, true});
    }
  } else {
    throw input_error("expansion map has no data");
  }
  for (const auto& e : out.values) require_expanding(e);
  return out;
}

PerronClass classify_perron(const Eigenvalue& lambda) {
  if (!lambda.algebraic_integer) throw math_error("classify_perron requires an algebraic integer");
  RealAlg lm = modulus_squared(lambda.box);
  if (compare_exact(lm, one()) <= 0) throw math_error("classify_perron requires modulus > 1");
  bool real = lambda.box.is_real();
  IntPoly p = lambda.box.poly();
  int equal_modulus_others = 0;
  for (const RootBox& g : isolate_roots(p, Rat(1, 1024))) {
    if (same_root(g, lambda.box)) continue;
    int cmp = compare_exact(modulus_squared(g), lm);
    if (cmp > 0) return PerronClass::Neither;
    if (cmp == 0) ++equal_modulus_others;
  }
  if (real) return equal_modulus_others == 0 ? PerronClass::Perron : PerronClass::Neither;
  // the complex conjugate always ties; exactly one tie is allowed
  return equal_modulus_others == 1 ? PerronClass::ComplexPerron : PerronClass::Neither;
}

Verdict check_theorem_condition(const EigenData& spec) {
  Verdict v;
  v.pass = true;
  for (const auto& e : spec.values) {
    if (!e.algebraic_integer) {
      auto [re, im] = e.approx();
      v.failures.push_back("eigenvalue near (" + std::to_string(re) + ", " + std::to_string(im) +
                           ") is not an algebraic integer (minimal polynomial " +
                           to_string(e.min_poly) + " is not integral); fails part (i)");
      v.pass = false;
    }
  }
  if (!v.pass) return v;

  for (const auto& e : spec.values) {
    EigenvalueReport rep;
    rep.approx = e.approx();
    rep.min_poly = to_string(e.min_poly);
    rep.multiplicity = e.multiplicity;
    rep.ok = true;
    RealAlg em = modulus_squared(e.box);
    for (const RootBox& g : isolate_roots(e.box.poly(), Rat(1, 1024))) {
      if (same_root(g, e.box)) continue;
      ConjugateReport cr;
      cr.approx = g.approx();
      cr.modulus_cmp = compare_exact(modulus_squared(g), em);
      cr.present_multiplicity = 0;
      for (const auto& other : spec.values)
        if (other.min_poly == e.min_poly && same_root(other.box, g))
          cr.present_multiplicity = other.multiplicity;
      cr.ok = cr.modulus_cmp < 0 || cr.present_multiplicity >= e.multiplicity;
      if (!cr.ok) {
        v.pass = false;
        rep.ok = false;
        v.failures.push_back(
            "conjugate near (" + std::to_string(cr.approx.first) + ", " +
            std::to_string(cr.approx.second) + ") of eigenvalue near (" +
            std::to_string(rep.approx.first) + ", " + std::to_string(rep.approx.second) +
            ") has modulus " + (cr.modulus_cmp == 0 ? std::string("equal") : std::string("greater")) +
            " but multiplicity " + std::to_string(cr.present_multiplicity) + " < " +
            std::to_string(e.multiplicity));
      }
      rep.conjugates.push_back(std::move(cr));
    }
    v.reports.push_back(std::move(rep));
  }
  return v;
}

IntMat build_companion_witness(const EigenData& spec) {
  // distinct integral minimal polynomials with the maximal multiplicity used
  std::vector<std::pair<IntPoly, int>> blocks;
  for (const auto& e : spec.values) {
    if (!e.algebraic_integer)
      throw math_error("companion witness requires algebraic-integer eigenvalues");
    IntPoly p = to_int_checked(e.min_poly);
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const auto& b) { return b.first == p; });
    if (it == blocks.end())
      blocks.emplace_back(p, e.multiplicity);
    else
      it->second = std::max(it->second, e.multiplicity);
  }
  size_t n = 0;
  for (const auto& [p, copies] : blocks) n += static_cast<size_t>(p.degree()) * copies;
  IntMat m(n, n);
  size_t off = 0;
  for (const auto& [p, copies] : blocks) {
    int d = p.degree();
    for (int c = 0; c < copies; ++c) {
      for (int i = 0; i + 1 < d; ++i) m(off + i + 1, off + i) = Int(1);
      for (int i = 0; i < d; ++i) m(off + i, off + d - 1) = -p.coeff(i);
      off += d;
    }
  }
  return m;
}

namespace {

// conjugation-closed building block of sub-multisets of spec(M)
struct Atom {
  std::vector<std::pair<double, double>> members;  // 1 real root or a conjugate pair
  RealAlg growth_sq;                               // |product of members|^2
  int avail;
};

}  // namespace

WitnessReport check_growth_condition(const IntMat& M, const EigenData& target) {
  WitnessReport rep;
  rep.M = M;
  if (!is_diagonalizable(to_rat(M)))
    throw math_error("witness matrix must be diagonalizable");

  // spectrum of M as (eigenvalue root, multiplicity)
  std::vector<Eigenvalue> spec;
  for (const auto& [f, mult] : factor_rational(char_poly(M)))
    for (const RootBox& r : isolate_roots(f, Rat(1, 1024)))
      spec.push_back({f, r, mult, is_integral(f)});

  // group into atoms: a real root, or a conjugate pair keyed by the im>0 member
  std::vector<Atom> atoms;
  std::vector<size_t> atom_of_spec(spec.size(), SIZE_MAX);
  for (size_t i = 0; i < spec.size(); ++i) {
    const auto& e = spec[i];
    if (e.box.is_real()) {
      atom_of_spec[i] = atoms.size();
      atoms.push_back({{e.approx()}, modulus_squared(e.box), e.multiplicity});
    } else if (e.approx().second > 0) {
      RealAlg ms = modulus_squared(e.box);
      size_t idx = atoms.size();
      atoms.push_back({{e.approx(), e.box.conjugate().approx()},
                       product({ms, ms}),
                       e.multiplicity});
      atom_of_spec[i] = idx;
      for (size_t j = 0; j < spec.size(); ++j)
        if (j != i && spec[j].min_poly == e.min_poly && same_root(spec[j].box, e.box.conjugate()))
          atom_of_spec[j] = idx;
    }
  }

  // locate the target multiset inside spec(M)
  std::vector<int> target_counts(atoms.size(), 0);
  size_t n = 0;
  for (const auto& t : target.values) {
    bool found = false;
    for (size_t i = 0; i < spec.size(); ++i) {
      if (spec[i].min_poly == t.min_poly && same_root(spec[i].box, t.box)) {
        if (spec[i].multiplicity < t.multiplicity)
          throw math_error("target eigenvalue multiplicity exceeds its multiplicity in spec(M)");
        if (t.box.is_real()) target_counts[atom_of_spec[i]] += t.multiplicity;
        else if (t.approx().second > 0) target_counts[atom_of_spec[i]] += t.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) throw math_error("target eigenvalue is not in spec(M)");
    n += t.multiplicity;
  }

  // enumerate all conjugation-closed size-n sub-multisets
  std::vector<std::vector<int>> selections;
  std::vector<int> cur(atoms.size(), 0);
  auto rec = [&](auto&& self, size_t i, size_t remaining) -> void {
    if (i == atoms.size()) {
      if (remaining == 0) selections.push_back(cur);
      return;
    }
    size_t size = atoms[i].members.size();
    for (int c = 0; c <= atoms[i].avail && static_cast<size_t>(c) * size <= remaining; ++c) {
      cur[i] = c;
      self(self, i + 1, remaining - c * size);
    }
    cur[i] = 0;
  };
  rec(rec, 0, n);

  auto growth_sq_of = [&](const std::vector<int>& counts) {
    std::vector<RealAlg> fs;
    for (size_t i = 0; i < counts.size(); ++i)
      for (int c = 0; c < counts[i]; ++c) fs.push_back(atoms[i].growth_sq);
    return product(fs);
  };
  RealAlg target_gsq = growth_sq_of(target_counts);
  rep.target_growth = std::sqrt(to_double(target_gsq.approx(64).mid()));

  rep.strict_max = true;
  for (const auto& sel : selections) {
    Competitor comp;
    comp.is_target = sel == target_counts;
    for (size_t i = 0; i < sel.size(); ++i)
      for (int c = 0; c < sel[i]; ++c)
        for (const auto& mpt : atoms[i].members) comp.members.push_back(mpt);
    RealAlg gsq = growth_sq_of(sel);
    comp.growth = std::sqrt(to_double(gsq.approx(64).mid()));
    comp.cmp_vs_target = comp.is_target ? 0 : compare_exact(target_gsq, gsq);
    if (!comp.is_target && comp.cmp_vs_target <= 0) rep.strict_max = false;
    rep.competitors.push_back(std::move(comp));
  }
  return rep;
}

}  // namespace tiling
