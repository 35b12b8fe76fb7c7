#include "exceptio/report.hpp"

namespace exceptio {

using nlohmann::json;

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const ScanReport& r) {
  j = json{{"poly", r.poly_key},
           {"limit", r.limit},
           {"primes_scanned", r.primes_scanned},
           {"failures", r.failures},
           {"density", r.density_estimate},
           {"delta", r.delta ? json(r.delta->get_str()) : json(nullptr)}};
}

void to_json(json& j, const CachedScan& r) {
  j = r.report;
  j["cache"] = {{"hit", r.cache_hit}, {"extended", r.extended}, {"recovered", r.recovered}};
}

void to_json(json& j, const Verdict& v) {
  if (const auto* h = std::get_if<HasIntegerRoot>(&v)) {
    j = {{"verdict", "HasIntegerRoot"}, {"root", h->root.get_str()}};
  } else if (const auto* n = std::get_if<NotExceptional>(&v)) {
    j = {{"verdict", "NotExceptional"}, {"witness", n->witness}};
  } else {
    j = {{"verdict", "ExceptionalLikely"}, {"failures", std::get<ExceptionalLikely>(v).failures}};
  }
}

void to_json(json& j, const Permutation& g) { j = g.cycle_string(); }

void to_json(json& j, const GroupSummary& s) {
  j = json{{"order", s.order},
           {"transitive", s.transitive},
           {"orbits", s.orbit_count},
           {"coverage", s.coverage.covered},
           {"coverage_witness", s.coverage.witness ? json(*s.coverage.witness) : json(nullptr)},
           {"density", s.density},
           {"quad_completion", s.quad_completion ? json(*s.quad_completion) : json(nullptr)}};
}

void to_json(json& j, const NuMap& nu) {
  json values = json::object();
  for (const auto& [l, v] : nu.values) values[std::to_string(l)] = v;
  j = {{"nu", values}, {"zeta", nu.zeta_value}};
}

void to_json(json& j, const ExactResult& r) {
  j = {{"exceptional_exact", r.exceptional}, {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

void to_json(json& j, const FormSet& t) { j = t.supports(); }

void to_json(json& j, const SearchResult& r) {
  j = {{"min", r.minimum ? json(*r.minimum) : json(nullptr)},
       {"n", r.witness ? json(r.witness->n) : json(nullptr)},
       {"witness", r.witness ? json(*r.witness) : json(nullptr)},
       {"exhaustive", r.exhaustive},
       {"nodes", r.nodes_explored}};
}

void to_json(json& j, const CompletionCandidate& c) {
  json qr = json::object();
  for (const auto& [p, s] : c.qr_certificates) qr[std::to_string(p)] = s;
  j = {{"d", c.d}, {"mod8", c.residue_mod_8}, {"qr", qr}};
}

void to_json(json& j, const CompletionReport& r) {
  j = {{"completed", r.completed.key()},
       {"prime_failures", r.prime_failures},
       {"checked_primes", r.checked_primes},
       {"power_failures", r.power_failures},
       {"ok", r.ok()}};
}

}  // namespace exceptio
