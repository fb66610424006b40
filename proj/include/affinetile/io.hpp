#pragma once

#include <string>
#include <vector>

#include "affinetile/addressmap.hpp"
#include "affinetile/boundary.hpp"

namespace tiling {

// Loaded boundary spec: letter vectors, the endomorphism, and optional named
// default words from the file.
struct BoundarySpec {
  VectorAssignment assign;
  Endomorphism psi;
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> words;
};

std::string read_file(const std::string& path);

// All loaders take JSON text and throw input_error with a location on
// malformed input.  Schemas are documented in the README.
ExpansionMap load_expansion_spec(const std::string& text);
SubstitutionRule load_rule(const std::string& text);
BoundarySpec load_boundary_spec(const std::string& text);

// kind of a spec file: "expansion", "rule" or "boundary"
std::string spec_kind(const std::string& text);

// Canonical JSON reports: insertion-ordered keys, exact rationals as
// fraction strings, doubles via a fixed shortest-round-trip format.
std::string verdict_json(const Verdict& v);
std::string witness_json(const WitnessReport& w);
std::string tiling_check_json(const SubstitutionRule& rule, const IntMat& subdivision,
                              bool primitive, const VolumeReport& vol, const Verdict& verdict);
std::string patch_json(const SubstitutionRule& rule, const Patch& patch);
std::string controlpoints_json(const SubstitutionRule& rule,
                               const std::vector<std::vector<FieldElem>>& points);
std::string addressmap_json(const SubstitutionRule& rule, const AddressMap& map,
                            const ExpansionOnJ& e, const MReport& rep);
std::string polyline_json(const std::vector<std::pair<double, double>>& curve);

}  // namespace tiling
