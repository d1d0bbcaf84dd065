#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumfree/applications.hpp"
#include "sumfree/cyclic_set.hpp"
#include "sumfree/interval_ap.hpp"
#include "sumfree/search_oracle.hpp"
#include "sumfree/special_sets.hpp"
#include "sumfree/st_family.hpp"

namespace sumfree {

using Json = nlohmann::ordered_json;

/// {"n": n, "elements": [ascending members]}.
Json set_to_json(const CyclicSet& s);

/// Inverse of set_to_json. Throws DomainError on a malformed document or
/// an element outside [0, n-1].
CyclicSet set_from_json(const Json& doc);

/// Reads a set document from a file.
CyclicSet read_set_file(const std::string& path);

/// Parses "0,4,5,6" (whitespace tolerated, empty string = no elements).
/// Throws std::invalid_argument on anything that is not an integer list.
std::vector<Int> parse_element_list(std::string_view text);

Json to_json(const Properties& p);
Json to_json(const TCandidate& t);
Json to_json(const IntervalAPParameters& p);
Json to_json(const EquivalenceReport& r);
Json to_json(const SpecialEnumeration& e, bool include_sets = true);
Json to_json(const ScsfPrediction& p);
Json to_json(const SizeLadder& ladder, bool checked = true);
Json to_json(const Catalog& c, bool include_classes);
Json to_json(const ProbeReport& r);
Json to_json(const GraphProperties& g);
Json to_json(const PartitionReport& r);
Json to_json(const SimulationReport& r);

}  // namespace sumfree
