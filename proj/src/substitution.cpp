#include "affinetile/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace tiling {

namespace {

bool is_diagonal(const Mat<FieldElem>& a) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (i != j && !(a(i, j) == FieldElem(0))) return false;
  return true;
}

bool all_rational(const Mat<FieldElem>& a) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_rational()) return false;
  return true;
}

std::string point_key(const std::vector<FieldElem>& v) {
  std::string s;
  for (const auto& e : v) {
    for (const Rat& c : e.coeffs()) s += to_string(c) + ",";
    s += ";";
  }
  return s;
}

}  // namespace

size_t SubstitutionRule::real_dimension() const {
  size_t n = 0;
  for (size_t i = 0; i < coord_slots.size(); ++i) n += slot_real(i) ? 1 : 2;
  return n;
}

void SubstitutionRule::validate() const {
  if (!field) throw input_error("rule has no number field");
  if (coord_slots.empty()) throw input_error("rule needs at least one coordinate");
  for (size_t s : coord_slots)
    if (s >= field->num_roots()) throw input_error("embedding slot out of range");
  size_t m = coord_slots.size();
  if (expansion.rows() != m || expansion.cols() != m)
    throw input_error("expansion matrix shape must match the coordinate count");
  if (!is_diagonal(expansion)) {
    if (!all_rational(expansion))
      throw input_error("non-diagonal expansion matrices must have rational entries");
    for (size_t i = 0; i < m; ++i)
      if (!slot_real(i))
        throw input_error("non-diagonal expansion matrices require real embedding slots");
  }
  if (tiles.empty()) throw input_error("rule has no tile types");
  for (const auto& t : tiles) {
    if (t.children.empty()) throw input_error("tile type '" + t.name + "' has no children");
    if (t.control_child >= t.children.size())
      throw input_error("control_child out of range for tile type '" + t.name + "'");
    for (const auto& [child, offset] : t.children) {
      if (child >= tiles.size()) throw input_error("child type index out of range");
      if (offset.size() != m) throw input_error("offset dimension mismatch");
    }
  }
}

IntMat subdivision_matrix(const SubstitutionRule& rule) {
  size_t k = rule.tiles.size();
  IntMat m(k, k);
  for (size_t i = 0; i < k; ++i)
    for (const auto& [child, offset] : rule.tiles[i].children) m(i, child) += 1;
  return m;
}

bool is_primitive(const IntMat& m) {
  if (!m.is_square()) throw math_error("is_primitive requires a square matrix");
  size_t d = m.rows();
  std::vector<std::vector<bool>> b(d, std::vector<bool>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (m(i, j) < 0) throw math_error("subdivision matrix entries must be nonnegative");
      b[i][j] = m(i, j) > 0;
    }
  auto all_ones = [&](const std::vector<std::vector<bool>>& x) {
    for (const auto& row : x)
      for (bool v : row)
        if (!v) return false;
    return true;
  };
  std::vector<std::vector<bool>> p = b;
  for (size_t e = 1; e <= d * d; ++e) {
    if (all_ones(p)) return true;
    std::vector<std::vector<bool>> q(d, std::vector<bool>(d, false));
    for (size_t i = 0; i < d; ++i)
      for (size_t k2 = 0; k2 < d; ++k2)
        if (p[i][k2])
          for (size_t j = 0; j < d; ++j) q[i][j] = q[i][j] || b[k2][j];
    p = std::move(q);
  }
  return false;
}

std::vector<FieldElem> apply_expansion(const SubstitutionRule& rule,
                                       const std::vector<FieldElem>& v) {
  return rule.expansion * v;
}

Patch seed_patch(const SubstitutionRule& rule, size_t type) {
  if (type >= rule.tiles.size()) throw input_error("seed type out of range");
  std::vector<FieldElem> zero(rule.num_coords(), FieldElem(0));
  return {{{type, zero}}, 0};
}

Patch expand_patch(const SubstitutionRule& rule, const Patch& patch, int k) {
  if (k < 0) throw input_error("expansion level must be nonnegative");
  Patch cur = patch;
  for (int step = 0; step < k; ++step) {
    Patch next;
    next.level = cur.level + 1;
    for (const auto& tile : cur.tiles) {
      std::vector<FieldElem> pv = apply_expansion(rule, tile.translation);
      for (const auto& [child, offset] : rule.tiles[tile.type].children) {
        std::vector<FieldElem> t(pv);
        for (size_t i = 0; i < t.size(); ++i) t[i] += offset[i];
        next.tiles.push_back({child, std::move(t)});
      }
    }
    if (next.level >= 1) {
      std::unordered_set<std::string> seen;
      for (const auto& tile : next.tiles) {
        std::string key = std::to_string(tile.type) + "|" + point_key(tile.translation);
        if (!seen.insert(key).second)
          throw input_error("malformed rule: duplicate placed tile at level " +
                            std::to_string(next.level));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<FieldElem>> control_points(const SubstitutionRule& rule) {
  size_t k = rule.tiles.size(), m = rule.num_coords();
  std::vector<size_t> sigma(k);
  std::vector<std::vector<FieldElem>> d(k);
  for (size_t i = 0; i < k; ++i) {
    const auto& [child, offset] = rule.tiles[i].children[rule.tiles[i].control_child];
    sigma[i] = child;
    d[i] = offset;
  }
  std::vector<std::vector<FieldElem>> c(k);
  std::vector<bool> solved(k, false);
  Mat<FieldElem> id = Mat<FieldElem>::identity(m);

  // solve each sigma-cycle exactly: (phi^len - I) c = sum phi^{len-1-j} d_j
  std::vector<int> state(k, 0);  // 0 unvisited, 1 in progress, 2 done
  for (size_t start = 0; start < k; ++start) {
    if (state[start] != 0) continue;
    std::vector<size_t> path;
    size_t cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = sigma[cur];
    }
    if (state[cur] == 1) {
      // found a new cycle starting at cur
      std::vector<size_t> cycle;
      size_t idx = std::find(path.begin(), path.end(), cur) - path.begin();
      for (size_t i = idx; i < path.size(); ++i) cycle.push_back(path[i]);
      size_t len = cycle.size();
      std::vector<FieldElem> rhs(m, FieldElem(0));
      for (size_t j = 0; j < len; ++j) {
        std::vector<FieldElem> term = mat_pow(rule.expansion, len - 1 - j) * d[cycle[j]];
        for (size_t i = 0; i < m; ++i) rhs[i] += term[i];
      }
      Mat<FieldElem> lhs = mat_pow(rule.expansion, len) - id;
      c[cycle[0]] = solve_linear(lhs, rhs);
      solved[cycle[0]] = true;
      for (size_t j = 0; j + 1 < len; ++j) {
        // phi c_i = c_{sigma(i)} + d_i  =>  c_{sigma(i)} = phi c_i - d_i
        std::vector<FieldElem> nxt = rule.expansion * c[cycle[j]];
        for (size_t i = 0; i < m; ++i) nxt[i] -= d[cycle[j]][i];
        c[cycle[j + 1]] = std::move(nxt);
        solved[cycle[j + 1]] = true;
      }
    }
    for (size_t i : path) state[i] = 2;
  }

  // propagate backward to the remaining types: c_i = phi^{-1}(c_{sigma(i)} + d_i)
  Mat<FieldElem> phi_inv = inverse(rule.expansion);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < k; ++i) {
      if (solved[i] || !solved[sigma[i]]) continue;
      std::vector<FieldElem> v = c[sigma[i]];
      for (size_t j = 0; j < m; ++j) v[j] += d[i][j];
      c[i] = phi_inv * v;
      solved[i] = true;
      progress = true;
    }
  }
  for (size_t i = 0; i < k; ++i)
    if (!solved[i]) throw math_error("control point propagation failed");

  // exact invariant check
  for (size_t i = 0; i < k; ++i) {
    std::vector<FieldElem> lhs = rule.expansion * c[i];
    for (size_t j = 0; j < m; ++j)
      if (!(lhs[j] == c[sigma[i]][j] + d[i][j]))
        throw math_error("control point identity failed for type " + rule.tiles[i].name);
  }
  return c;
}

bool verify_control_invariance(const SubstitutionRule& rule, int k) {
  if (k < 1) throw input_error("verify_control_invariance requires k >= 1");
  auto c = control_points(rule);
  for (size_t seed = 0; seed < rule.tiles.size(); ++seed) {
    Patch pk = expand_patch(rule, seed_patch(rule, seed), k);
    Patch pk1 = expand_patch(rule, pk, 1);
    std::unordered_set<std::string> next_points;
    for (const auto& tile : pk1.tiles) {
      std::vector<FieldElem> p = c[tile.type];
      for (size_t i = 0; i < p.size(); ++i) p[i] += tile.translation[i];
      next_points.insert(point_key(p));
    }
    for (const auto& tile : pk.tiles) {
      std::vector<FieldElem> p = c[tile.type];
      for (size_t i = 0; i < p.size(); ++i) p[i] += tile.translation[i];
      std::vector<FieldElem> img = apply_expansion(rule, p);
      if (!next_points.count(point_key(img))) return false;
    }
  }
  return true;
}

EigenData rule_eigen_data(const SubstitutionRule& rule, long precision_bits) {
  rule.validate();
  if (!is_diagonal(rule.expansion)) {
    size_t m = rule.num_coords();
    RatMat a(m, m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) a(i, j) = rule.expansion(i, j).rat_value();
    return eigen_data({a, std::nullopt}, precision_bits);
  }
  Rat precision = pow2_inv(precision_bits);
  EigenData out;
  auto add = [&out](const Eigenvalue& e) {
    for (auto& prev : out.values)
      if (same_eigenvalue(prev, e)) {
        prev.multiplicity += e.multiplicity;
        return;
      }
    out.values.push_back(e);
  };
  for (size_t i = 0; i < rule.num_coords(); ++i) {
    FieldElem elem = rule.expansion(i, i);
    size_t slot = rule.coord_slots[i];
    RatPoly mp = minimal_poly(elem);
    std::vector<RootBox> boxes = isolate_roots(mp, precision);
    size_t idx = identify_root(boxes, [&](long bits) { return embed(elem, slot, bits); });
    bool alg_int = is_integral(mp);
    if (rule.slot_real(i)) {
      add({mp, boxes[idx], 1, alg_int});
    } else if (boxes[idx].is_real()) {
      // a real value acting on a complex coordinate: multiplicity 2
      add({mp, boxes[idx], 2, alg_int});
    } else {
      add({mp, boxes[idx], 1, alg_int});
      add({mp, boxes[idx].conjugate(), 1, alg_int});
    }
  }
  for (const auto& e : out.values) require_expanding(e);
  return out;
}

VolumeReport volume_consistency(const SubstitutionRule& rule) {
  IntMat m = subdivision_matrix(rule);
  if (!is_primitive(m)) throw math_error("volume_consistency requires a primitive rule");
  std::vector<RootBox> reals = real_roots(clear_denominators(char_poly(m)), pow2_inv(64));
  if (reals.empty()) throw math_error("subdivision matrix has no real eigenvalue");
  RootBox pf = reals.back();  // ascending order: the PF root is the largest
  VolumeReport rep;
  rep.pf_eigenvalue = to_double(pf.refined(64).re.mid());

  RatInterval det_sq(Rat(1));
  EigenData ed = rule_eigen_data(rule, 96);
  for (const auto& e : ed.values) {
    RootBox b = e.box;
    RatInterval ms = b.refined(96).mag_sq();
    for (int c = 0; c < e.multiplicity; ++c) det_sq = det_sq * ms;
  }
  rep.abs_det = std::sqrt(to_double(det_sq.mid()));
  rep.consistent = std::abs(rep.pf_eigenvalue - rep.abs_det) <= 1e-9;
  return rep;
}

std::pair<double, double> numeric_point(const SubstitutionRule& rule,
                                        const std::vector<FieldElem>& v) {
  std::vector<double> axes;
  for (size_t i = 0; i < v.size(); ++i) {
    ComplexInterval ci = embed(v[i], rule.coord_slots[i], 64);
    axes.push_back(to_double(ci.re.mid()));
    if (!rule.slot_real(i)) axes.push_back(to_double(ci.im.mid()));
  }
  double x = axes.size() > 0 ? axes[0] : 0.0;
  double y = axes.size() > 1 ? axes[1] : 0.0;
  return {x, y};
}

}  // namespace tiling
