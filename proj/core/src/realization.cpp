#include "qrk/realization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qrk/errors.hpp"
#include "qrk/format.hpp"

namespace qrk {

using nlohmann::json;

namespace {

const Ket& label_of(const OrthoHypergraph& h, std::string_view id) {
  const Atom& a = h.atom(id);
  if (!a.label) throw Error(ErrorCode::MissingLabel, "atom '" + a.id + "' has no vector");
  return *a.label;
}

}  // namespace

RealizationReport verify_realization(const OrthoHypergraph& h, double tol) {
  const auto diags = validate(h);
  if (!diags.empty()) throw Error(ErrorCode::InvalidHypergraph, diags.front().message);

  RealizationReport r;
  r.tolerance = tol;
  for (const auto& a : h.atoms()) {
    if (!a.label) throw Error(ErrorCode::MissingLabel, "atom '" + a.id + "' has no vector");
    if (r.dim == 0) r.dim = a.label->dim();
    if (a.label->dim() != r.dim) {
      throw Error(ErrorCode::DimensionMismatch, "atom '" + a.id + "' is labelled in dimension " +
                                                    std::to_string(a.label->dim()));
    }
  }
  for (std::size_t c = 0; c < h.contexts().size(); ++c) {
    const auto& ctx = h.contexts()[c];
    if (ctx.size() != r.dim) {
      throw Error(ErrorCode::ContextSizeMismatch, "context " + std::to_string(c) + " has " +
                                                      std::to_string(ctx.size()) + " atoms in dimension " +
                                                      std::to_string(r.dim));
    }
    ContextResidual res{c, 0.0, 0.0};
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Ket& u = *h.atom(ctx[i]).label;
      res.max_norm_error = std::max(res.max_norm_error, std::abs(1.0 - std::sqrt(std::abs(inner(u, u)))));
      for (std::size_t j = i + 1; j < ctx.size(); ++j) {
        res.max_overlap = std::max(res.max_overlap, std::abs(inner(u, *h.atom(ctx[j]).label)));
      }
    }
    if (res.max_overlap > tol || res.max_norm_error > tol) r.offending.push_back(c);
    r.residuals.push_back(res);
  }
  r.pass = r.offending.empty();
  return r;
}

Ket complete_context_d3(const Ket& u, const Ket& v) {
  if (u.dim() != 3 || v.dim() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "context completion needs two vectors of C^3");
  }
  if (!orthogonal(u, v)) throw Error(ErrorCode::NotOrthogonal, "inputs are not orthogonal");
  const Complex w[3] = {
      std::conj(u[1] * v[2] - u[2] * v[1]),
      std::conj(u[2] * v[0] - u[0] * v[2]),
      std::conj(u[0] * v[1] - u[1] * v[0]),
  };
  return normalize(std::span<const Complex>(w));
}

TerminalGap terminal_gap(const OrthoHypergraph& h, std::string_view from, std::string_view to) {
  if (from == to) throw Error(ErrorCode::PreconditionViolated, "terminals coincide (collinear)");
  const Ket& a = label_of(h, from);
  const Ket& b = label_of(h, to);
  TerminalGap g{classify_pair(h, from, to), born(a, b), std::nullopt};
  if (collinear(a, b)) {
    g.warning = "terminal labels are collinear";
  } else if (orthogonal(a, b)) {
    g.warning = "terminal labels are orthogonal";
  }
  return g;
}

std::string realization_to_json(const RealizationReport& r) {
  json contexts = json::array();
  for (const auto& c : r.residuals) {
    contexts.push_back({{"context", c.context},
                        {"max_overlap", round_significant(c.max_overlap)},
                        {"max_norm_error", round_significant(c.max_norm_error)}});
  }
  return json{{"pass", r.pass},
              {"tolerance", round_significant(r.tolerance)},
              {"dim", r.dim},
              {"offending", r.offending},
              {"contexts", std::move(contexts)}}
             .dump(2) +
         "\n";
}

std::string realization_to_text(const OrthoHypergraph& h, const RealizationReport& r) {
  std::ostringstream out;
  out << "dimension " << r.dim << ", " << r.residuals.size() << " contexts, tolerance "
      << format_number(r.tolerance) << "\n";
  double worst_overlap = 0.0;
  double worst_norm = 0.0;
  for (const auto& c : r.residuals) {
    worst_overlap = std::max(worst_overlap, c.max_overlap);
    worst_norm = std::max(worst_norm, c.max_norm_error);
  }
  out << "max overlap " << format_number(worst_overlap) << ", max norm error "
      << format_number(worst_norm) << "\n";
  for (auto c : r.offending) {
    out << "offending context " << c << ":";
    for (const auto& id : h.contexts()[c]) out << ' ' << id;
    out << " (overlap " << format_number(r.residuals[c].max_overlap) << ")\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string terminal_gap_to_json(const TerminalGap& g) {
  json doc = {{"from", g.classical.from},
              {"to", g.classical.to},
              {"classical", std::string(to_string(g.classical.relation))},
              {"states_target_true", g.classical.target_true},
              {"states_target_false", g.classical.target_false},
              {"quantum", round_significant(g.quantum)}};
  doc["warning"] = g.warning ? json(*g.warning) : json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace qrk
