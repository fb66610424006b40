#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "affinetile/io.hpp"

using namespace tiling;

namespace {

struct Options {
  long precision = 128;
  bool json = false;
  bool quiet = false;
};

void say(const Options& opt, const std::string& line) {
  if (!opt.quiet) std::cout << line << "\n";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string approx_str(const std::pair<double, double>& a) {
  if (a.second == 0) return fmt(a.first);
  return fmt(a.first) + (a.second < 0 ? " - " : " + ") + fmt(std::abs(a.second)) + "i";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

void print_verdict(const Options& opt, const Verdict& v) {
  for (const auto& r : v.reports) {
    say(opt, "eigenvalue " + approx_str(r.approx) + "  (min poly " + r.min_poly +
                 ", multiplicity " + std::to_string(r.multiplicity) + ")  " +
                 (r.ok ? "ok" : "VIOLATION"));
    for (const auto& c : r.conjugates) {
      std::string rel = c.modulus_cmp < 0   ? "|conj| < |eigenvalue|"
                        : c.modulus_cmp > 0 ? "|conj| > |eigenvalue|"
                                            : "|conj| = |eigenvalue|";
      say(opt, "  conjugate " + approx_str(c.approx) + "  " + rel + ", present multiplicity " +
                   std::to_string(c.present_multiplicity) + (c.ok ? "" : "  <-- violates (ii)"));
    }
  }
  for (const auto& f : v.failures) say(opt, "failure: " + f);
  say(opt, v.pass ? "PASS" : "FAIL");
}

int cmd_check_expansion(const Options& opt, const std::string& file) {
  ExpansionMap phi = load_expansion_spec(read_file(file));
  Verdict v = check_theorem_condition(eigen_data(phi, opt.precision));
  if (opt.json)
    std::cout << verdict_json(v);
  else
    print_verdict(opt, v);
  return v.pass ? 0 : 1;
}

int cmd_witness(const Options& opt, const std::string& file) {
  ExpansionMap phi = load_expansion_spec(read_file(file));
  EigenData ed = eigen_data(phi, opt.precision);
  IntMat M = build_companion_witness(ed);
  WitnessReport w = check_growth_condition(M, ed);
  if (opt.json) {
    std::cout << witness_json(w);
  } else {
    say(opt, "companion witness: " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) +
                 " integer matrix, target growth " + fmt(w.target_growth));
    for (const auto& c : w.competitors) {
      std::string members;
      for (const auto& m : c.members) members += (members.empty() ? "" : ", ") + approx_str(m);
      say(opt, std::string(c.is_target ? "  target    " : "  competitor") + " {" + members +
                   "}  growth " + fmt(c.growth) +
                   (c.is_target       ? ""
                    : c.cmp_vs_target > 0 ? "  (smaller)"
                    : c.cmp_vs_target < 0 ? "  (LARGER)"
                                          : "  (TIE)"));
    }
    say(opt, w.strict_max ? "strict_max: PASS" : "strict_max: FAIL");
  }
  return w.strict_max ? 0 : 1;
}

// numeric matrix of the expansion on the embedded real axes (rendering only)
std::vector<std::vector<double>> numeric_expansion(const SubstitutionRule& rule) {
  size_t d = rule.real_dimension();
  std::vector<size_t> axis(rule.num_coords());
  for (size_t i = 0, a = 0; i < rule.num_coords(); ++i) {
    axis[i] = a;
    a += rule.slot_real(i) ? 1 : 2;
  }
  std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
  for (size_t i = 0; i < rule.num_coords(); ++i)
    for (size_t j = 0; j < rule.num_coords(); ++j) {
      const FieldElem& e = rule.expansion(i, j);
      if (e.is_zero()) continue;
      ComplexInterval ci = embed(e, rule.coord_slots[j], 64);
      double x = to_double(ci.re.mid()), y = to_double(ci.im.mid());
      bool ri = rule.slot_real(i), rj = rule.slot_real(j);
      if (ri && rj) {
        m[axis[i]][axis[j]] = x;
      } else if (!ri && !rj) {
        m[axis[i]][axis[j]] = x;
        m[axis[i]][axis[j] + 1] = -y;
        m[axis[i] + 1][axis[j]] = y;
        m[axis[i] + 1][axis[j] + 1] = x;
      } else {
        throw math_error("cannot render a rule mixing real and complex coordinates");
      }
    }
  return m;
}

std::vector<std::vector<double>> mat_inv2(const std::vector<std::vector<double>>& m) {
  size_t d = m.size();
  if (d == 1) return {{1.0 / m[0][0]}};
  if (d == 2) {
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}};
  }
  throw math_error("rendering supports at most two real dimensions");
}

std::pair<double, double> apply2(const std::vector<std::vector<double>>& m, double x, double y) {
  if (m.size() == 1) return {m[0][0] * x, 0};
  return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
}

std::string patch_svg(const SubstitutionRule& rule, const Patch& patch) {
  // draw the level-k subdivision of the seed tile: each child's seed polygon
  // placed at its translation, all pulled back through phi^-k
  std::vector<std::vector<double>> inv = mat_inv2(numeric_expansion(rule));
  std::vector<std::vector<std::pair<double, double>>> polys;
  for (const auto& t : patch.tiles) {
    auto [tx, ty] = numeric_point(rule, t.translation);
    std::vector<std::pair<double, double>> poly;
    const auto& seed = rule.tiles[t.type].seed_polygon;
    if (seed.empty()) continue;
    for (auto [px, py] : seed) poly.emplace_back(tx + px, ty + py);
    if (!poly.empty()) poly.push_back(poly.front());
    for (int k = 0; k < patch.level; ++k)
      for (auto& p : poly) p = apply2(inv, p.first, p.second);
    polys.push_back(std::move(poly));
  }
  return svg_document(polys);
}

int cmd_tiling(const Options& opt, const std::string& sub, const std::string& file, int levels,
               const std::string& seed, const std::string& svg_path) {
  SubstitutionRule rule = load_rule(read_file(file));
  if (sub == "check") {
    IntMat m = subdivision_matrix(rule);
    bool prim = is_primitive(m);
    VolumeReport vol = prim ? volume_consistency(rule) : VolumeReport{};
    Verdict v = check_theorem_condition(rule_eigen_data(rule, opt.precision));
    if (opt.json) {
      std::cout << tiling_check_json(rule, m, prim, vol, v);
    } else {
      std::string rows;
      for (size_t i = 0; i < m.rows(); ++i) {
        rows += i ? "; " : "";
        for (size_t j = 0; j < m.cols(); ++j) rows += (j ? " " : "") + to_string(m(i, j));
      }
      say(opt, "subdivision matrix: [" + rows + "]");
      say(opt, std::string("primitive: ") + (prim ? "yes" : "NO"));
      if (prim)
        say(opt, "volume: PF eigenvalue " + fmt(vol.pf_eigenvalue) + " vs |det phi| " +
                     fmt(vol.abs_det) + (vol.consistent ? "  consistent" : "  INCONSISTENT"));
      print_verdict(opt, v);
    }
    return prim && vol.consistent && v.pass ? 0 : 1;
  }
  size_t seed_type = 0;
  if (!seed.empty()) {
    size_t i = 0;
    while (i < rule.tiles.size() && rule.tiles[i].name != seed) ++i;
    if (i == rule.tiles.size()) throw input_error("unknown seed type '" + seed + "'");
    seed_type = i;
  }
  if (sub == "expand") {
    Patch patch = expand_patch(rule, seed_patch(rule, seed_type), levels);
    std::cout << patch_json(rule, patch);
    if (!svg_path.empty()) {
      write_text_file(svg_path, patch_svg(rule, patch));
      say(opt, "wrote " + svg_path);
    }
    return 0;
  }
  if (sub == "controlpoints") {
    std::cout << controlpoints_json(rule, control_points(rule));
    return 0;
  }
  if (sub == "addressmap") {
    AddressMap map = stabilized_address_map(rule);
    ExpansionOnJ e = expansion_on_J(rule, map);
    MReport rep = verify_M_properties(rule, map, e);
    if (opt.json) {
      std::cout << addressmap_json(rule, map, e, rep);
    } else {
      say(opt, "module stabilized at level " + std::to_string(map.level) + ", rank " +
                   std::to_string(map.basis.rank()));
      std::string rows;
      for (size_t i = 0; i < e.M.rows(); ++i) {
        rows += i ? "; " : "";
        for (size_t j = 0; j < e.M.cols(); ++j) rows += (j ? " " : "") + to_string(e.M(i, j));
      }
      say(opt, "M = [" + rows + "]  char poly " + to_string(rep.char_poly));
      say(opt, std::string("diagonalizable: ") + (rep.diagonalizable ? "yes" : "NO"));
      for (const auto& [name, ok] : rep.divisibility)
        say(opt, "  " + name + (ok ? " divides char poly" : " DOES NOT divide char poly"));
      say(opt, "lipschitz diagnostic: " + fmt(rep.lipschitz_level_k) + " (level " +
                   std::to_string(map.level) + "), " + fmt(rep.lipschitz_level_k1) + " (level " +
                   std::to_string(map.level + 1) + ")");
    }
    return rep.all_divisible && rep.diagonalizable ? 0 : 1;
  }
  throw input_error("unknown tiling subcommand '" + sub + "'");
}

int cmd_boundary(const Options& opt, const std::string& file, const std::string& word, int iters,
                 const std::string& svg_path) {
  BoundarySpec spec = load_boundary_spec(read_file(file));
  if (!check_compatibility(spec.assign, spec.psi))
    throw math_error("vector assignment is not compatible with the endomorphism");
  say(opt, "compatibility: ok");
  std::vector<std::pair<std::string, std::string>> jobs;
  if (!word.empty())
    jobs.emplace_back(word, word);
  else if (!spec.words.empty())
    jobs = spec.words;
  else
    throw input_error("no word given (pass --word or add a 'words' table to the file)");
  std::vector<std::vector<std::pair<double, double>>> curves;
  for (const auto& [name, text] : jobs) {
    Word w = parse_word(text, spec.letters.size());
    curves.push_back(boundary_curve(spec.assign, spec.psi, w, iters));
    say(opt, name + ": " + std::to_string(curves.back().size()) +
                 " vertices, closed exactly after " + std::to_string(iters) + " iterations");
    if (opt.json) std::cout << polyline_json(curves.back());
  }
  if (!svg_path.empty()) {
    write_text_file(svg_path, svg_document(curves));
    say(opt, "wrote " + svg_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and figures for self-affine substitution tilings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--precision", opt.precision, "working precision in bits")->capture_default_str();
  app.add_flag("--json", opt.json, "emit JSON reports");
  app.add_flag("--quiet", opt.quiet, "suppress human-readable output");

  std::string file, sub, seed, svg_path, word;
  int levels = 1, iters = 6;

  app.fallthrough();
  auto* ce = app.add_subcommand("check-expansion", "check the eigenvalue condition");
  ce->fallthrough();
  ce->add_option("file", file, "expansion spec")->required();

  auto* wi = app.add_subcommand("witness", "companion witness and growth comparison");
  wi->fallthrough();
  wi->add_option("file", file, "expansion spec")->required();

  auto* ti = app.add_subcommand("tiling", "substitution rule tools");
  ti->fallthrough();
  ti->add_option("subcommand", sub, "check | expand | controlpoints | addressmap")->required();
  ti->add_option("file", file, "rule file")->required();
  ti->add_option("--levels", levels, "subdivision levels")->capture_default_str();
  ti->add_option("--seed", seed, "seed tile type (name)");
  ti->add_option("--svg", svg_path, "write an SVG rendering");

  auto* bo = app.add_subcommand("boundary", "iterated boundary curves");
  bo->fallthrough();
  bo->add_option("file", file, "boundary spec")->required();
  bo->add_option("--word", word, "boundary word, e.g. \"[a,c]\"");
  bo->add_option("--iters", iters, "endomorphism iterations")->capture_default_str();
  bo->add_option("--svg", svg_path, "write the curves as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (ce->parsed()) return cmd_check_expansion(opt, file);
    if (wi->parsed()) return cmd_witness(opt, file);
    if (ti->parsed()) return cmd_tiling(opt, sub, file, levels, seed, svg_path);
    if (bo->parsed()) return cmd_boundary(opt, file, word, iters, svg_path);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
