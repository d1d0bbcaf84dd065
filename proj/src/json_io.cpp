#include "sumfree/json_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "sumfree/errors.hpp"

namespace sumfree {

Json set_to_json(const CyclicSet& s) {
  Json out;
  out["n"] = s.modulus();
  out["elements"] = s.elements();
  return out;
}

CyclicSet set_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("elements"))
    throw DomainError(R"(set document must be an object with "n" and "elements")");
  if (!doc["n"].is_number_integer() || !doc["elements"].is_array())
    throw DomainError(R"(set document: "n" must be an integer and "elements" an array)");
  std::vector<Int> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_number_integer()) throw DomainError("set document: elements must be integers");
    elements.push_back(e.get<Int>());
  }
  return CyclicSet::from_elements(doc["n"].get<Int>(), elements);
}

CyclicSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open set file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("set file " + path + " is not valid JSON: " + e.what());
  }
  return set_from_json(doc);
}

std::vector<Int> parse_element_list(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  std::vector<Int> out;
  if (trim(text).empty()) return out;
  for (;;) {
    const std::size_t comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("not an integer list: \"" + std::string(text) + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) return out;
    text.remove_prefix(comma + 1);
  }
}

Json to_json(const Properties& p) {
  Json out;
  out["symmetric"] = p.symmetric;
  out["sum_free"] = p.sum_free;
  out["complete"] = p.complete;
  out["size"] = p.size;
  return out;
}

Json to_json(const TCandidate& t) { return t.members(); }

Json to_json(const IntervalAPParameters& p) {
  Json out;
  out["t"] = p.t;
  out["d"] = p.d;
  out["k"] = p.k;
  out["variant"] = p.a;
  out["n"] = p.n;
  return out;
}

Json to_json(const EquivalenceReport& r) {
  Json out;
  out["n"] = r.params.n;
  out["s"] = r.params.s;
  out["t"] = r.params.t;
  out["candidates"] = r.candidates;
  out["special_count"] = r.special_count;
  Json bad = Json::array();
  for (auto mask : r.counterexamples) bad.push_back(to_json(TCandidate::from_mask(r.params.t, mask)));
  out["counterexamples"] = std::move(bad);
  return out;
}

Json to_json(const SpecialEnumeration& e, bool include_sets) {
  Json out;
  out["t"] = e.t;
  out["g"] = e.g;
  if (include_sets) {
    Json sets = Json::array();
    for (const auto& t : e.sets) sets.push_back(to_json(t));
    out["sets"] = std::move(sets);
  }
  return out;
}

Json to_json(const ScsfPrediction& p) {
  Json out;
  out["p"] = p.p;
  out["k"] = p.k;
  out["residue"] = p.residue;
  out["r"] = p.r;
  out["t"] = p.t;
  out["size"] = p.size;
  out["g"] = p.g;
  out["count"] = p.count;
  out["asymptotic_claim"] = p.asymptotic_claim;
  out["size_nonpositive"] = p.size_nonpositive;
  return out;
}

Json to_json(const SizeLadder& ladder, bool checked) {
  Json out;
  out["n"] = ladder.n;
  out["base_size"] = ladder.base_size;
  out["difference"] = ladder.difference;
  Json rungs = Json::array();
  for (const auto& rung : ladder.rungs) {
    Json r;
    r["t"] = rung.params.t;
    r["d"] = rung.params.d;
    r["k"] = rung.params.k;
    r["size"] = rung.size;
    r["set"] = build_small(rung.params, checked).elements();
    rungs.push_back(std::move(r));
  }
  out["rungs"] = std::move(rungs);
  return out;
}

Json to_json(const Catalog& c, bool include_classes) {
  Json out;
  out["n"] = c.n;
  out["size_filter"] = c.size_filter ? Json(*c.size_filter) : Json(nullptr);
  out["count"] = c.sets.size();
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back(set_to_json(s));
  out["sets"] = std::move(sets);
  if (include_classes) {
    Json classes = Json::array();
    for (const auto& cls : c.classes) {
      Json entry;
      entry["representative"] = set_to_json(cls.representative);
      entry["orbit_size"] = cls.orbit_size;
      classes.push_back(std::move(entry));
    }
    out["classes"] = std::move(classes);
  }
  return out;
}

Json to_json(const ProbeReport& r) {
  Json out;
  out["p"] = r.p;
  out["s"] = r.s;
  out["t_integer"] = r.t_integer;
  out["t"] = r.t_integer ? Json(r.t) : Json(nullptr);
  out["definition_valid"] = r.definition_valid;
  out["theorem_valid"] = r.theorem_valid;
  out["asymptotic_claim"] = r.asymptotic_claim;
  out["hypotheses_unmet"] = r.hypotheses_unmet;
  out["special_count"] = r.special_count;
  out["catalog_count"] = r.catalog_count;
  out["construction_count"] = r.construction_count;
  out["matched"] = r.matched;
  Json catalog_extra = Json::array();
  for (const auto& s : r.catalog_extra) catalog_extra.push_back(set_to_json(s));
  out["catalog_extra"] = std::move(catalog_extra);
  Json construction_extra = Json::array();
  for (const auto& s : r.construction_extra) construction_extra.push_back(set_to_json(s));
  out["construction_extra"] = std::move(construction_extra);
  out["classification"] = r.classification;
  out["prediction"] = r.prediction ? to_json(*r.prediction) : Json(nullptr);
  out["prediction_budget_exceeded"] = r.prediction_budget_exceeded;
  return out;
}

Json to_json(const GraphProperties& g) {
  Json out;
  out["degree"] = g.degree;
  out["triangle_free"] = g.triangle_free;
  out["diameter"] = g.diameter;
  out["diameter_sampled"] = g.diameter_sampled;
  out["diameter_sources"] = g.diameter_sources;
  return out;
}

Json to_json(const PartitionReport& r) {
  Json out;
  out["p"] = r.p;
  Json parts = Json::array();
  for (const auto& part : r.parts) parts.push_back(set_to_json(part));
  out["parts"] = std::move(parts);
  out["products_are_unions"] = r.products_are_unions;
  out["identity_part"] = r.identity_part;
  out["closed_under_inverse"] = r.closed_under_inverse;
  out["partition"] = r.parts_partition_group;
  out["all_axioms"] = r.all_axioms();
  return out;
}

Json to_json(const SimulationReport& r) {
  Json out;
  out["horizon"] = r.horizon;
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  out["contained"] = r.contained;
  out["containment_frequency"] = r.containment_frequency;
  out["containment_ci95"] = {r.containment_low, r.containment_high};
  out["conditional_density"] = r.conditional_density;
  out["conditional_density_stderr"] = r.conditional_density_stderr;
  out["reference_density"] = r.reference_density ? Json(*r.reference_density) : Json(nullptr);
  return out;
}

}  // namespace sumfree
