#pragma once

// Hypergraph files are UTF-8 JSON:
//
//   {
//     "atoms": [ {"id": "a", "vector": [[1, 0], [0, 0], [0, 0]]}, {"id": "b"} ],
//     "contexts": [ ["a", "b", "c"] ]
//   }
//
// "vector" is optional and lists [re, im] pairs. Ids are case sensitive and
// unique; every vector in a file has the same dimension. Labels are normalized
// on load, since only the ray matters.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qrk/hypergraph.hpp"

namespace qrk {

/// Throws ParseError on malformed JSON, duplicate ids or mixed label dimensions.
OrthoHypergraph parse_hypergraph(std::string_view json_text);
OrthoHypergraph load_hypergraph(const std::filesystem::path& path);

/// Full double precision, indent 1.
std::string hypergraph_to_json(const OrthoHypergraph& h);
void save_hypergraph(const std::filesystem::path& path, const OrthoHypergraph& h);

std::string diagnostics_to_json(const std::vector<Diagnostic>& diags);
std::string states_to_json(const std::vector<TwoValuedState>& states);
std::string relation_to_json(const GadgetRelation& g);
std::string indefiniteness_to_json(const IndefinitenessReport& r);

/// "a=1 b=0 ..." in atom-id order.
std::string state_to_text(const TwoValuedState& s);
std::string indefiniteness_to_text(const IndefinitenessReport& r);

}  // namespace qrk
