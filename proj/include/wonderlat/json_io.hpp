#pragma once

#include <json.hpp>

#include "wonderlat/engine.hpp"
#include "wonderlat/orbit.hpp"

// Versioned JSON documents: the lattice interchange format consumed by the
// CLI and the test suite, plus certificate and report serializations.

namespace wlat {

inline constexpr const char* kSchemaVersion = "1";

inline nlohmann::json to_json(const WonderfulLattice& L) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = L.id;
  j["acting_group"] = L.datum.name();
  j["colors"] = L.colors;
  j["spherical_roots"] = L.sroots;
  j["pairing"] = L.pairing;
  j["omega"] = L.omega;
  j["simple_root_expansion"] = L.expansion;
  j["strict"] = L.strict;
  return j;
}

inline WonderfulLattice lattice_from_json(const nlohmann::json& j) {
  WonderfulLattice L = catalog(j.at("id").get<std::string>());
  // the catalog is the source of truth; verify the document round-trips
  if (to_json(L) != j) throw InvalidType("lattice document does not match the catalog");
  return L;
}

inline nlohmann::json to_json(const TripleVerdict& v) {
  return {{"d", v.triple.d},
          {"e", v.triple.e},
          {"f", v.triple.f},
          {"status", to_string(v.status)},
          {"witness", v.witness}};
}

inline nlohmann::json to_json(const CertNode& n) {
  nlohmann::json j;
  j["d"] = n.triple.d;
  j["e"] = n.triple.e;
  j["f"] = n.triple.f;
  j["step"] = n.step;
  if (n.verdict) j["verdict"] = to_json(*n.verdict);
  if (!n.children.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CertNode& c : n.children) arr.push_back(to_json(c));
    j["children"] = arr;
  }
  return j;
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["d"] = c.d;
  j["e"] = c.e;
  j["lemma_constant"] = c.lemma_constant;
  j["surjective"] = c.surjective;
  j["refuted"] = c.refuted;
  j["inconclusive"] = c.inconclusive;
  if (c.failing_leaf)
    j["failing_leaf"] = {{"d", c.failing_leaf->d},
                         {"e", c.failing_leaf->e},
                         {"f", c.failing_leaf->f}};
  nlohmann::json arr = nlohmann::json::array();
  for (const CertNode& t : c.trees) arr.push_back(to_json(t));
  j["trees"] = arr;
  return j;
}

inline nlohmann::json to_json(const NormalityVerdict& v) {
  return {{"case", v.case_id},
          {"theta", v.theta},
          {"minuscule", v.minuscule},
          {"faithful", v.faithful},
          {"verdict", v.verdict == Normality::Normal      ? "normal"
                      : v.verdict == Normality::NonNormal ? "non-normal"
                                                          : "inconclusive"},
          {"surjectivity", v.surjectivity_source}};
}

}  // namespace wlat
