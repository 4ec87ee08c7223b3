#include "semimod/report.hpp"

#include "semimod/model_io.hpp"

#ifndef SEMIMOD_VERSION
#define SEMIMOD_VERSION "0.0.0"
#endif

namespace semimod {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return json(*v);
}

json opt_pair(const std::optional<std::pair<Elem, Elem>>& v) {
  if (!v) return nullptr;
  return json::array({v->first, v->second});
}

template <class T>
json opt_obj(const std::optional<T>& v) {
  if (!v) return nullptr;
  return to_json(*v);
}

}  // namespace

std::string tool_version() { return SEMIMOD_VERSION; }

json report_envelope(const std::string& command, json result, std::uint64_t seed,
                     std::uint64_t budget) {
  return {{"tool", "semimod"},       {"version", tool_version()}, {"format", kFormatVersion},
          {"command", command},      {"seed", seed},              {"budget", budget},
          {"result", std::move(result)}};
}

json to_json(const Violation& v) { return {{"axiom", v.axiom}, {"witness", v.witness}}; }

json to_json(const LinearMap& f) {
  return {{"dom", f.dom->name}, {"cod", f.cod->name}, {"map", f.map}};
}

json to_json(const FiniteSemimodule& m) {
  auto out = semimodule_json(m);
  out["name"] = m.name;
  return out;
}

json to_json(const Congruence& c) {
  json classes = json::array();
  for (const auto& cl : c.classes()) classes.push_back(cl);
  return {{"class_of", c.class_of}, {"class_count", c.class_count}, {"classes", classes}};
}

json to_json(const NormalityReport& r) {
  return {{"injective", r.injective},
          {"surjective", r.surjective},
          {"k_normal", r.k_normal},
          {"i_normal", r.i_normal},
          {"normal", r.normal},
          {"injective_witness", opt_pair(r.injective_witness)},
          {"surjective_witness", opt(r.surjective_witness)},
          {"k_normal_witness", opt_pair(r.k_normal_witness)},
          {"i_normal_witness", opt(r.i_normal_witness)}};
}

json to_json(const PositionReport& r) {
  return {{"index", r.index},
          {"object", r.object},
          {"chain", r.chain},
          {"proper_exact", r.proper_exact},
          {"semi_exact", r.semi_exact},
          {"quasi_exact", r.quasi_exact},
          {"exact", r.exact},
          {"image_outside_kernel", opt(r.image_outside_kernel)},
          {"kernel_outside_image", opt(r.kernel_outside_image)},
          {"kernel_outside_closure", opt(r.kernel_outside_closure)},
          {"closure_outside_kernel", opt(r.closure_outside_kernel)},
          {"k_normal_witness", opt_pair(r.k_normal_witness)}};
}

json to_json(const ExactnessReport& r) {
  json positions = json::array();
  for (const auto& p : r.positions) positions.push_back(to_json(p));
  return {{"positions", positions},     {"chain", r.chain},
          {"proper_exact", r.proper_exact}, {"semi_exact", r.semi_exact},
          {"quasi_exact", r.quasi_exact},   {"exact", r.exact}};
}

json to_json(const ShortExactReport& r) {
  return {{"short_exact", r.short_exact},
          {"f_injective", r.f_injective},
          {"image_is_kernel", r.image_is_kernel},
          {"g_surjective", r.g_surjective},
          {"g_k_normal", r.g_k_normal},
          {"f_normal", r.f_normal},
          {"g_normal", r.g_normal},
          {"kernel_iso_canonical", r.kernel_iso_canonical},
          {"quotient_iso_canonical", r.quotient_iso_canonical},
          {"kernel_isomorphic", opt(r.kernel_isomorphic)},
          {"quotient_isomorphic", opt(r.quotient_isomorphic)},
          {"exactness", to_json(r.exactness)}};
}

json to_json(const Splittings& s) {
  return {{"left", opt_obj(s.left)},
          {"right", opt_obj(s.right)},
          {"left_splitting", s.left.has_value()},
          {"right_splitting", s.right.has_value()}};
}

json to_json(const PullbackResult& r) {
  return {{"apex", to_json(*r.apex)}, {"pairs", r.pairs}, {"to_a", to_json(r.to_a)},
          {"to_b", to_json(r.to_b)}};
}

json to_json(const PushoutResult& r) {
  return {{"apex", to_json(*r.apex)},
          {"rho", to_json(r.rho)},
          {"leg_m", to_json(r.legs.leg_m)},
          {"leg_n", to_json(r.legs.leg_n)}};
}

json to_json(const UniversalCheck& r) {
  json counts = json::array();
  for (const auto& c : r.cocones) counts.push_back(c.mediating_count);
  return {{"passed", r.passed},
          {"reason", r.reason},
          {"cocones", r.cocones.size()},
          {"mediating_counts", counts},
          {"first_failure", opt(r.first_failure)}};
}

json to_json(const ProjectivityWitness& w) {
  return {{"reason", w.reason},
          {"epimorphism", to_json(w.epimorphism)},
          {"kernel", opt(w.kernel)},
          {"congruence", opt(w.congruence)},
          {"map", opt_obj(w.map)},
          {"lift", opt_obj(w.lift)},
          {"other_lift", opt_obj(w.other_lift)},
          {"induced", opt_obj(w.induced)}};
}

json to_json(const ProjectivityReport& r) {
  return {{"subject", r.subject},
          {"target", r.target},
          {"flavor", to_string(r.flavor)},
          {"verdict", r.verdict},
          {"witness", opt_obj(r.witness)},
          {"quotients_checked", r.quotients_checked},
          {"maps_checked", r.maps_checked},
          {"cross_check", opt(r.cross_check)}};
}

json to_json(const GlobalReport& r) {
  json targets = json::array();
  for (const auto& t : r.per_target) targets.push_back(to_json(t));
  json retract = nullptr;
  if (r.retract) {
    retract = {{"retraction", to_json(r.retract->retraction)},
               {"section", to_json(r.retract->section)}};
  }
  return {{"subject", r.subject},
          {"flavor", to_string(r.flavor)},
          {"scope", r.scope},
          {"retract_of_free", opt(r.retract_of_free)},
          {"free_rank", opt(r.free_rank)},
          {"retract", retract},
          {"per_target", targets},
          {"skipped_targets", r.skipped_targets},
          {"universe_verdict", r.universe_verdict}};
}

json to_json(const RationalMatrix2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const WitnessCheck& r) {
  return {{"sums_equal", r.sums_equal},
          {"components_differ", r.components_differ},
          {"memberships", r.memberships},
          {"certifies_not_direct", r.certifies_not_direct},
          {"notes", r.notes}};
}

}  // namespace semimod
