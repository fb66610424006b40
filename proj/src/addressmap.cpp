#include "affinetile/addressmap.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace tiling {

namespace {

std::vector<Rat> flatten(const SubstitutionRule& rule, const std::vector<FieldElem>& v) {
  size_t d = rule.field->degree();
  std::vector<Rat> out;
  out.reserve(v.size() * d);
  for (const auto& e : v)
    for (size_t i = 0; i < d; ++i) out.push_back(e.coeff(i));
  return out;
}

std::vector<FieldElem> unflatten(const SubstitutionRule& rule, const std::vector<Rat>& x) {
  size_t d = rule.field->degree();
  std::vector<FieldElem> out;
  for (size_t c = 0; c < rule.num_coords(); ++c) {
    std::vector<Rat> coeffs(x.begin() + c * d, x.begin() + (c + 1) * d);
    out.push_back(FieldElem(rule.field.get(), std::move(coeffs)));
  }
  return out;
}

std::string key_of(const SubstitutionRule& rule, const std::vector<FieldElem>& v) {
  std::string s;
  for (const Rat& r : flatten(rule, v)) s += to_string(r) + ",";
  return s;
}

// max-norm of the numeric embedding across all real axes
double embedded_norm(const SubstitutionRule& rule, const std::vector<FieldElem>& v) {
  double n = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    ComplexInterval ci = embed(v[i], rule.coord_slots[i], 64);
    n = std::max(n, std::abs(to_double(ci.re.mid())));
    if (!rule.slot_real(i)) n = std::max(n, std::abs(to_double(ci.im.mid())));
  }
  return n;
}

std::vector<size_t> pivot_rows(const RatMat& basis) {
  std::vector<size_t> rows(basis.cols());
  for (size_t j = 0; j < basis.cols(); ++j) {
    size_t r = 0;
    while (r < basis.rows() && basis(r, j) == 0) ++r;
    if (r == basis.rows()) throw math_error("zero column in module basis");
    rows[j] = r;
  }
  return rows;
}

}  // namespace

std::vector<std::vector<FieldElem>> collect_differences(const SubstitutionRule& rule, int k) {
  if (k < 1) throw input_error("collect_differences requires k >= 1");
  auto c = control_points(rule);
  std::vector<std::vector<FieldElem>> out;
  std::unordered_set<std::string> seen;
  for (size_t seed = 0; seed < rule.tiles.size(); ++seed) {
    Patch patch = expand_patch(rule, seed_patch(rule, seed), k);
    std::vector<std::vector<FieldElem>> points;
    for (const auto& tile : patch.tiles) {
      std::vector<FieldElem> p = c[tile.type];
      for (size_t i = 0; i < p.size(); ++i) p[i] += tile.translation[i];
      points.push_back(std::move(p));
    }
    for (size_t a = 0; a < points.size(); ++a)
      for (size_t b = 0; b < points.size(); ++b) {
        if (a == b) continue;
        std::vector<FieldElem> delta = points[a];
        for (size_t i = 0; i < delta.size(); ++i) delta[i] -= points[b][i];
        if (seen.insert(key_of(rule, delta)).second) out.push_back(std::move(delta));
      }
  }
  return out;
}

ZModuleBasis zmodule_basis(const SubstitutionRule& rule,
                           const std::vector<std::vector<FieldElem>>& vectors) {
  ZModuleBasis zb;
  size_t rows = rule.num_coords() * rule.field->degree();
  if (vectors.empty()) {
    zb.basis = RatMat(rows, 0);
    return zb;
  }
  // clear a common denominator, HNF over Z, then scale back (the rational
  // normal form is independent of the denominator choice)
  Int den(1);
  std::vector<std::vector<Rat>> flat;
  for (const auto& v : vectors) {
    flat.push_back(flatten(rule, v));
    for (const Rat& r : flat.back()) den = lcm(den, r.get_den());
  }
  IntMat g(rows, flat.size());
  for (size_t j = 0; j < flat.size(); ++j)
    for (size_t i = 0; i < rows; ++i) {
      Rat scaled = flat[j][i] * Rat(den);
      g(i, j) = scaled.get_num();
    }
  IntMat h = hnf_columns(g);
  zb.basis = RatMat(rows, h.cols());
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < h.cols(); ++j) zb.basis(i, j) = Rat(h(i, j)) / Rat(den);
  for (size_t j = 0; j < h.cols(); ++j) {
    std::vector<Rat> col(rows);
    for (size_t i = 0; i < rows; ++i) col[i] = zb.basis(i, j);
    zb.generators.push_back(unflatten(rule, col));
  }
  return zb;
}

std::vector<Int> address(const ZModuleBasis& basis, const SubstitutionRule& rule,
                         const std::vector<FieldElem>& xi) {
  std::vector<Rat> res = flatten(rule, xi);
  if (res.size() != basis.basis.rows()) throw math_error("address: dimension mismatch");
  std::vector<size_t> pr = pivot_rows(basis.basis);
  std::vector<Int> a(basis.rank());
  for (size_t j = 0; j < basis.rank(); ++j) {
    Rat q = res[pr[j]] / basis.basis(pr[j], j);
    if (q.get_den() != 1) throw math_error("point is not in the module (non-integer coordinate)");
    a[j] = q.get_num();
    for (size_t i = 0; i < res.size(); ++i) res[i] -= q * basis.basis(i, j);
  }
  for (const Rat& r : res)
    if (r != 0) throw math_error("point is not in the module");
  return a;
}

AddressMap stabilized_address_map(const SubstitutionRule& rule, int k_max) {
  if (k_max < 2) throw input_error("stabilized_address_map requires k_max >= 2");
  ZModuleBasis prev = zmodule_basis(rule, collect_differences(rule, 2));
  for (int k = 3; k <= k_max; ++k) {
    ZModuleBasis next = zmodule_basis(rule, collect_differences(rule, k));
    if (next == prev) return {std::move(next), k};
    prev = std::move(next);
  }
  throw math_error("module not stabilized by level " + std::to_string(k_max));
}

ExpansionOnJ expansion_on_J(const SubstitutionRule& rule, const AddressMap& map) {
  size_t n = map.basis.rank();
  IntMat M(n, n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<FieldElem> img = apply_expansion(rule, map.basis.generators[j]);
    std::vector<Int> col;
    try {
      col = address(map.basis, rule, img);
    } catch (const math_error&) {
      throw math_error("module is not forward-invariant at level " + std::to_string(map.level) +
                       ": phi * generator " + std::to_string(j) + " leaves the module");
    }
    for (size_t i = 0; i < n; ++i) M(i, j) = col[i];
  }
  return {M};
}

MReport verify_M_properties(const SubstitutionRule& rule, const AddressMap& map,
                            const ExpansionOnJ& e) {
  MReport rep;
  rep.integral = true;  // by construction of expansion_on_J
  RatMat mq = to_rat(e.M);
  rep.char_poly = char_poly(mq);
  rep.diagonalizable = is_diagonalizable(mq);
  rep.all_divisible = true;
  for (const auto& ev : rule_eigen_data(rule).values) {
    std::string name = to_string(ev.min_poly);
    if (std::any_of(rep.divisibility.begin(), rep.divisibility.end(),
                    [&](const auto& p) { return p.first == name; }))
      continue;
    bool div = divides(ev.min_poly, rep.char_poly);
    rep.all_divisible = rep.all_divisible && div;
    rep.divisibility.emplace_back(name, div);
  }
  auto diagnostic = [&](int k) {
    double worst = 0;
    for (const auto& delta : collect_differences(rule, k)) {
      double den = embedded_norm(rule, delta);
      if (den == 0) continue;
      std::vector<Int> a = address(map.basis, rule, delta);
      double num = 0;
      for (const Int& v : a) num = std::max(num, std::abs(to_double(Rat(v))));
      worst = std::max(worst, num / den);
    }
    return worst;
  };
  rep.lipschitz_level_k = diagnostic(map.level);
  rep.lipschitz_level_k1 = diagnostic(map.level + 1);
  return rep;
}

}  // namespace tiling
