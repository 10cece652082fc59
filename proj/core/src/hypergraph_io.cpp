#include "qrk/hypergraph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "qrk/errors.hpp"

namespace qrk {

using nlohmann::json;

namespace {

Ket parse_vector(const json& v, const std::string& id) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "vector of '" + id + "' is not a list");
  std::vector<Complex> amps;
  for (const auto& pair : v) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorCode::ParseError, "vector of '" + id + "' must hold [re, im] pairs");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  try {
    return normalize(std::span<const Complex>(amps));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "vector of '" + id + "': " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

OrthoHypergraph parse_hypergraph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with an \"atoms\" list");
  }
  OrthoHypergraph h;
  std::optional<std::size_t> dim;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("id") || !a["id"].is_string()) {
      throw Error(ErrorCode::ParseError, "every atom needs a string \"id\"");
    }
    const auto id = a["id"].get<std::string>();
    std::optional<Ket> label;
    if (a.contains("vector") && !a["vector"].is_null()) {
      label = parse_vector(a["vector"], id);
      if (dim && *dim != label->dim()) {
        throw Error(ErrorCode::ParseError, "vector of '" + id + "' has dimension " +
                                               std::to_string(label->dim()) + ", expected " +
                                               std::to_string(*dim));
      }
      dim = label->dim();
    }
    if (h.contains(id)) throw Error(ErrorCode::ParseError, "duplicate atom id '" + id + "'");
    h.add_atom(id, std::move(label));
  }
  if (doc.contains("contexts")) {
    if (!doc["contexts"].is_array()) throw Error(ErrorCode::ParseError, "\"contexts\" must be a list");
    for (const auto& ctx : doc["contexts"]) {
      if (!ctx.is_array()) throw Error(ErrorCode::ParseError, "each context must be a list of ids");
      std::vector<std::string> ids;
      for (const auto& id : ctx) {
        if (!id.is_string()) throw Error(ErrorCode::ParseError, "context entries must be atom ids");
        ids.push_back(id.get<std::string>());
      }
      h.add_context(std::move(ids));
    }
  }
  return h;
}

OrthoHypergraph load_hypergraph(const std::filesystem::path& path) {
  return parse_hypergraph(read_file(path));
}

std::string hypergraph_to_json(const OrthoHypergraph& h) {
  json atoms = json::array();
  for (const auto& a : h.atoms()) {
    json entry = {{"id", a.id}};
    if (a.label) {
      json vec = json::array();
      for (const auto& c : a.label->amplitudes()) vec.push_back({c.real(), c.imag()});
      entry["vector"] = std::move(vec);
    }
    atoms.push_back(std::move(entry));
  }
  json doc = {{"atoms", std::move(atoms)}, {"contexts", h.contexts()}};
  return doc.dump(1) + "\n";
}

void save_hypergraph(const std::filesystem::path& path, const OrthoHypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << hypergraph_to_json(h);
}

std::string diagnostics_to_json(const std::vector<Diagnostic>& diags) {
  json arr = json::array();
  for (const auto& d : diags) {
    json e = {{"kind", std::string(to_string(d.kind))}, {"atom", d.atom}, {"message", d.message}};
    e["context"] = d.context ? json(*d.context) : json(nullptr);
    arr.push_back(std::move(e));
  }
  return json{{"valid", diags.empty()}, {"violations", std::move(arr)}}.dump(2) + "\n";
}

std::string states_to_json(const std::vector<TwoValuedState>& states) {
  json arr = json::array();
  for (const auto& s : states) {
    json obj = json::object();
    for (const auto& [id, v] : s.values) obj[id] = v ? 1 : 0;
    arr.push_back(std::move(obj));
  }
  return json{{"count", states.size()}, {"states", std::move(arr)}}.dump(2) + "\n";
}

std::string relation_to_json(const GadgetRelation& g) {
  return json{{"from", g.from},
              {"to", g.to},
              {"relation", std::string(to_string(g.relation))},
              {"states_target_true", g.target_true},
              {"states_target_false", g.target_false}}
             .dump(2) +
         "\n";
}

std::string indefiniteness_to_json(const IndefinitenessReport& r) {
  json atoms = json::object();
  for (const auto& [id, d] : r.atoms) atoms[id] = std::string(to_string(d));
  return json{{"prepared", r.prepared},
              {"total_states", r.total_states},
              {"value_indefinite", r.value_indefinite()},
              {"atoms", std::move(atoms)}}
             .dump(2) +
         "\n";
}

std::string state_to_text(const TwoValuedState& s) {
  std::string out;
  for (const auto& [id, v] : s.values) {
    if (!out.empty()) out += ' ';
    out += id;
    out += v ? "=1" : "=0";
  }
  return out;
}

std::string indefiniteness_to_text(const IndefinitenessReport& r) {
  std::size_t width = 4;
  for (const auto& [id, d] : r.atoms) width = std::max(width, id.size());
  std::ostringstream out;
  out << "prepared " << r.prepared << " = 1; total states: " << r.total_states
      << (r.value_indefinite() ? " (value indefinite)" : "") << "\n";
  for (const auto& [id, d] : r.atoms) {
    out << id << std::string(width - id.size() + 2, ' ') << to_string(d) << "\n";
  }
  return out.str();
}

}  // namespace qrk
