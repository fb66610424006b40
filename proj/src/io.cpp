#include "affinetile/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tiling {

using json = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// doubles are emitted as canonical strings so reports are byte-identical
// across platforms and json libraries
json num(double v) { return json(fmt_double(v)); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("JSON parse error: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw input_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw input_error(std::string(what) + " must be a number");
  return j.get<double>();
}

void expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
}

void check_schema(const json& j) {
  if (member(j, "schema").get<int>() != 1) throw input_error("unsupported schema version");
}

RatPoly poly_from(const json& j, const char* what) {
  expect_array(j, what);
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(parse_rat(str(e, what)));
  return RatPoly(std::move(c));
}

IntPoly int_poly_from(const json& j, const char* what) {
  RatPoly p = poly_from(j, what);
  std::vector<Int> c;
  for (const Rat& q : p.coeffs()) {
    if (q.get_den() != 1) throw input_error(std::string(what) + " must have integer coefficients");
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

json poly_to(const RatPoly& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

FieldElem elem_from(const NumberField* f, const json& j, const char* what) {
  expect_array(j, what);
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(parse_rat(str(e, what)));
  if (static_cast<int>(c.size()) > f->degree())
    throw input_error(std::string(what) + " has more coefficients than the field degree");
  c.resize(f->degree(), Rat(0));
  return FieldElem(f, std::move(c));
}

json elem_to(const FieldElem& e, size_t degree) {
  json a = json::array();
  for (size_t i = 0; i < degree; ++i) a.push_back(to_string(e.coeff(i)));
  return a;
}

// nearest cached root of the field to an approximate (re, im) selector
size_t slot_from_approx(const NumberField& f, double re, double im) {
  size_t best = 0;
  double best_d = 0;
  for (size_t i = 0; i < f.num_roots(); ++i) {
    auto [r, m] = f.root(i).approx();
    double d = (r - re) * (r - re) + (m - im) * (m - im);
    if (i == 0 || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

struct FieldPart {
  std::shared_ptr<const NumberField> field;
  std::vector<size_t> coord_slots;
  Mat<FieldElem> expansion;
};

// common "field" / "embeddings" / "expansion" block of rule and boundary files
FieldPart field_part_from(const json& j) {
  FieldPart out;
  out.field = std::make_shared<NumberField>(poly_from(member(member(j, "field"), "min_poly"),
                                                      "field.min_poly"));
  const json& emb = member(j, "embeddings");
  expect_array(emb, "embeddings");
  for (const auto& sel : emb) {
    expect_array(sel, "embedding selector");
    if (sel.size() != 2) throw input_error("embedding selector must be [re, im]");
    out.coord_slots.push_back(slot_from_approx(*out.field, number(sel[0], "embedding"),
                                               number(sel[1], "embedding")));
  }
  size_t n = out.coord_slots.size();
  const json& exp = member(j, "expansion");
  expect_array(exp, "expansion");
  if (exp.size() != n) throw input_error("expansion must be an n x n matrix of coefficient vectors");
  out.expansion = Mat<FieldElem>(n, n);
  for (size_t i = 0; i < n; ++i) {
    expect_array(exp[i], "expansion row");
    if (exp[i].size() != n)
      throw input_error("expansion must be an n x n matrix of coefficient vectors");
    for (size_t k = 0; k < n; ++k)
      out.expansion(i, k) = elem_from(out.field.get(), exp[i][k], "expansion entry");
  }
  return out;
}

std::vector<FieldElem> point_from(const NumberField* f, const json& j, size_t n,
                                  const char* what) {
  expect_array(j, what);
  if (j.size() != n)
    throw input_error(std::string(what) + " must have one coefficient vector per coordinate");
  std::vector<FieldElem> p;
  for (const auto& c : j) p.push_back(elem_from(f, c, what));
  return p;
}

json point_to(const SubstitutionRule& rule, const std::vector<FieldElem>& p) {
  json a = json::array();
  for (const FieldElem& e : p) a.push_back(elem_to(e, rule.field->degree()));
  return a;
}

json numeric_to(const SubstitutionRule& rule, const std::vector<FieldElem>& p) {
  json a = json::array();
  for (size_t i = 0; i < p.size(); ++i) {
    ComplexInterval ci = embed(p[i], rule.coord_slots[i], 64);
    a.push_back(num(to_double(ci.re.mid())));
    if (!rule.slot_real(i)) a.push_back(num(to_double(ci.im.mid())));
  }
  return a;
}

json int_mat_to(const IntMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json approx_to(const std::pair<double, double>& a) {
  return json::array({num(a.first), num(a.second)});
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string spec_kind(const std::string& text) {
  json j = parse(text);
  return str(member(j, "type"), "type");
}

ExpansionMap load_expansion_spec(const std::string& text) {
  json j = parse(text);
  check_schema(j);
  if (str(member(j, "type"), "type") != "expansion")
    throw input_error("not an expansion spec file");
  ExpansionMap phi;
  if (j.contains("matrix")) {
    const json& m = j["matrix"];
    expect_array(m, "matrix");
    size_t n = m.size();
    RatMat a(n, n);
    for (size_t i = 0; i < n; ++i) {
      expect_array(m[i], "matrix row");
      if (m[i].size() != n) throw input_error("matrix must be square");
      for (size_t k = 0; k < n; ++k) a(i, k) = parse_rat(str(m[i][k], "matrix entry"));
    }
    phi.matrix = std::move(a);
  } else if (j.contains("blocks")) {
    SpectralSpec spec;
    expect_array(j["blocks"], "blocks");
    for (const auto& b : j["blocks"]) {
      IntPoly mp = int_poly_from(member(b, "min_poly"), "min_poly");
      const json& roots = member(b, "roots");
      expect_array(roots, "roots");
      for (const auto& r : roots) {
        const json& ap = member(r, "approx");
        expect_array(ap, "approx");
        if (ap.size() != 2) throw input_error("approx must be [re, im]");
        SpectralSelection sel;
        sel.min_poly = mp;
        sel.approx = {number(ap[0], "approx"), number(ap[1], "approx")};
        sel.multiplicity = r.contains("multiplicity") ? r["multiplicity"].get<int>() : 1;
        if (sel.multiplicity < 1) throw input_error("multiplicity must be positive");
        spec.selections.push_back(std::move(sel));
      }
    }
    phi.spectral = std::move(spec);
  } else {
    throw input_error("expansion spec needs either 'matrix' or 'blocks'");
  }
  return phi;
}

SubstitutionRule load_rule(const std::string& text) {
  json j = parse(text);
  check_schema(j);
  if (str(member(j, "type"), "type") != "rule") throw input_error("not a rule file");
  FieldPart fp = field_part_from(j);
  SubstitutionRule rule;
  rule.field = fp.field;
  rule.coord_slots = fp.coord_slots;
  rule.expansion = fp.expansion;
  const json& tiles = member(j, "tiles");
  expect_array(tiles, "tiles");
  std::vector<std::string> names;
  for (const auto& t : tiles) names.push_back(str(member(t, "name"), "tile name"));
  auto type_index = [&](const std::string& name) -> size_t {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw input_error("unknown tile type '" + name + "'");
  };
  for (const auto& t : tiles) {
    SubstitutionRule::Tile tile;
    tile.name = str(member(t, "name"), "tile name");
    const json& ch = member(t, "children");
    expect_array(ch, "children");
    for (const auto& c : ch)
      tile.children.emplace_back(
          type_index(str(member(c, "type"), "child type")),
          point_from(rule.field.get(), member(c, "offset"), rule.num_coords(), "offset"));
    if (t.contains("control_child")) tile.control_child = t["control_child"].get<size_t>();
    if (t.contains("seed_polygon")) {
      expect_array(t["seed_polygon"], "seed_polygon");
      for (const auto& p : t["seed_polygon"]) {
        expect_array(p, "seed_polygon point");
        if (p.size() != 2) throw input_error("seed_polygon points must be [x, y]");
        tile.seed_polygon.emplace_back(number(p[0], "seed_polygon"), number(p[1], "seed_polygon"));
      }
    }
    rule.tiles.push_back(std::move(tile));
  }
  rule.validate();
  return rule;
}

BoundarySpec load_boundary_spec(const std::string& text) {
  json j = parse(text);
  check_schema(j);
  if (str(member(j, "type"), "type") != "boundary") throw input_error("not a boundary spec file");
  FieldPart fp = field_part_from(j);
  BoundarySpec spec;
  spec.assign.field = fp.field;
  spec.assign.coord_slots = fp.coord_slots;
  spec.assign.expansion = fp.expansion;
  const json& letters = member(j, "letters");
  expect_array(letters, "letters");
  for (const auto& l : letters) {
    std::string name = str(l, "letter");
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
      throw input_error("letters must be single lowercase characters");
    if (name[0] != 'a' + static_cast<char>(spec.letters.size()))
      throw input_error("letters must be consecutive starting at 'a'");
    spec.letters.push_back(name);
  }
  size_t nl = spec.letters.size();
  const json& vecs = member(j, "vectors");
  expect_array(vecs, "vectors");
  if (vecs.size() != nl) throw input_error("need one vector per letter");
  for (const auto& v : vecs)
    spec.assign.vectors.push_back(
        point_from(fp.field.get(), v, spec.assign.num_coords(), "letter vector"));
  const json& endo = member(j, "endomorphism");
  expect_array(endo, "endomorphism");
  if (endo.size() != nl) throw input_error("need one image word per letter");
  for (const auto& w : endo) spec.psi.images.push_back(parse_word(str(w, "image word"), nl));
  if (j.contains("words")) {
    if (!j["words"].is_object()) throw input_error("words must be an object");
    for (const auto& [name, w] : j["words"].items())
      spec.words.emplace_back(name, str(w, "word"));
  }
  return spec;
}

namespace {

json verdict_to(const Verdict& v) {
  json out;
  out["pass"] = v.pass;
  json reports = json::array();
  for (const auto& r : v.reports) {
    json jr;
    jr["approx"] = approx_to(r.approx);
    jr["min_poly"] = r.min_poly;
    jr["multiplicity"] = r.multiplicity;
    jr["ok"] = r.ok;
    json conj = json::array();
    for (const auto& c : r.conjugates) {
      json jc;
      jc["approx"] = approx_to(c.approx);
      jc["modulus_cmp"] = c.modulus_cmp;
      jc["present_multiplicity"] = c.present_multiplicity;
      jc["ok"] = c.ok;
      conj.push_back(std::move(jc));
    }
    jr["conjugates"] = std::move(conj);
    reports.push_back(std::move(jr));
  }
  out["eigenvalues"] = std::move(reports);
  out["failures"] = v.failures;
  return out;
}

}  // namespace

std::string verdict_json(const Verdict& v) { return dump(verdict_to(v)); }

std::string witness_json(const WitnessReport& w) {
  json out;
  out["M"] = int_mat_to(w.M);
  out["target_growth"] = num(w.target_growth);
  json comps = json::array();
  for (const auto& c : w.competitors) {
    json jc;
    json members = json::array();
    for (const auto& m : c.members) members.push_back(approx_to(m));
    jc["members"] = std::move(members);
    jc["growth"] = num(c.growth);
    jc["cmp_vs_target"] = c.cmp_vs_target;
    jc["is_target"] = c.is_target;
    comps.push_back(std::move(jc));
  }
  out["competitors"] = std::move(comps);
  out["strict_max"] = w.strict_max;
  return dump(out);
}

std::string tiling_check_json(const SubstitutionRule& rule, const IntMat& subdivision,
                              bool primitive, const VolumeReport& vol, const Verdict& verdict) {
  json out;
  json names = json::array();
  for (const auto& t : rule.tiles) names.push_back(t.name);
  out["tiles"] = std::move(names);
  out["subdivision_matrix"] = int_mat_to(subdivision);
  out["primitive"] = primitive;
  out["volume"] = {{"pf_eigenvalue", num(vol.pf_eigenvalue)},
                   {"abs_det", num(vol.abs_det)},
                   {"consistent", vol.consistent}};
  out["theorem_verdict"] = verdict_to(verdict);
  return dump(out);
}

std::string patch_json(const SubstitutionRule& rule, const Patch& patch) {
  json out = json::array();
  for (const auto& t : patch.tiles) {
    json jt;
    jt["type"] = rule.tiles[t.type].name;
    jt["translation_exact"] = point_to(rule, t.translation);
    jt["translation_numeric"] = numeric_to(rule, t.translation);
    jt["level"] = patch.level;
    out.push_back(std::move(jt));
  }
  return dump(out);
}

std::string controlpoints_json(const SubstitutionRule& rule,
                               const std::vector<std::vector<FieldElem>>& points) {
  json out = json::array();
  for (size_t i = 0; i < points.size(); ++i) {
    json jp;
    jp["type"] = rule.tiles[i].name;
    jp["exact"] = point_to(rule, points[i]);
    jp["numeric"] = numeric_to(rule, points[i]);
    out.push_back(std::move(jp));
  }
  return dump(out);
}

std::string addressmap_json(const SubstitutionRule& rule, const AddressMap& map,
                            const ExpansionOnJ& e, const MReport& rep) {
  json out;
  out["level"] = map.level;
  json gens = json::array();
  for (const auto& g : map.basis.generators) gens.push_back(point_to(rule, g));
  out["generators"] = std::move(gens);
  out["M"] = int_mat_to(e.M);
  out["char_poly"] = poly_to(rep.char_poly);
  json div = json::array();
  for (const auto& [name, ok] : rep.divisibility)
    div.push_back(json{{"min_poly", name}, {"divides", ok}});
  out["checks"] = {{"integral", rep.integral},
                   {"diagonalizable", rep.diagonalizable},
                   {"divisibility", std::move(div)},
                   {"all_divisible", rep.all_divisible}};
  out["lipschitz_diagnostic"] = {{"level_k", num(rep.lipschitz_level_k)},
                                 {"level_k1", num(rep.lipschitz_level_k1)}};
  return dump(out);
}

std::string polyline_json(const std::vector<std::pair<double, double>>& curve) {
  json out = json::array();
  for (const auto& [x, y] : curve) out.push_back(json::array({num(x), num(y)}));
  return dump(out);
}

}  // namespace tiling
