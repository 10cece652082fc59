#include "qrk/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "qrk/errors.hpp"

namespace qrk {

std::size_t OrthoHypergraph::add_atom(std::string id, std::optional<Ket> label) {
  if (index_.contains(id)) throw Error(ErrorCode::DuplicateAtom, "atom '" + id + "' already present");
  const std::size_t i = atoms_.size();
  index_.emplace(id, i);
  atoms_.push_back(Atom{std::move(id), std::move(label)});
  return i;
}

void OrthoHypergraph::add_context(std::vector<std::string> atom_ids) {
  contexts_.push_back(std::move(atom_ids));
}

std::optional<std::size_t> OrthoHypergraph::index_of(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Atom& OrthoHypergraph::atom(std::string_view id) const {
  const auto i = index_of(id);
  if (!i) throw Error(ErrorCode::UnknownAtom, "no atom '" + std::string(id) + "'");
  return atoms_[*i];
}

OrthoHypergraph OrthoHypergraph::without_context(std::size_t index) const {
  OrthoHypergraph copy = *this;
  copy.contexts_.erase(copy.contexts_.begin() + static_cast<std::ptrdiff_t>(index));
  return copy;
}

std::string_view to_string(DiagnosticKind kind) noexcept {
  switch (kind) {
    case DiagnosticKind::UnknownAtomInContext: return "UnknownAtomInContext";
    case DiagnosticKind::DuplicateAtomInContext: return "DuplicateAtomInContext";
    case DiagnosticKind::ContextTooSmall: return "ContextTooSmall";
    case DiagnosticKind::OrphanAtom: return "OrphanAtom";
  }
  return "Unknown";
}

std::vector<Diagnostic> validate(const OrthoHypergraph& h) {
  std::vector<Diagnostic> out;
  std::vector<bool> used(h.size(), false);
  for (std::size_t c = 0; c < h.contexts().size(); ++c) {
    const auto& ctx = h.contexts()[c];
    if (ctx.size() < 2) {
      out.push_back({DiagnosticKind::ContextTooSmall, ctx.empty() ? "" : ctx.front(), c,
                     "context " + std::to_string(c) + " has fewer than 2 atoms"});
    }
    std::set<std::string_view> seen;
    for (const auto& id : ctx) {
      if (!seen.insert(id).second) {
        out.push_back({DiagnosticKind::DuplicateAtomInContext, id, c,
                       "atom '" + id + "' repeated in context " + std::to_string(c)});
      }
      if (const auto i = h.index_of(id)) {
        used[*i] = true;
      } else {
        out.push_back({DiagnosticKind::UnknownAtomInContext, id, c,
                       "context " + std::to_string(c) + " names unknown atom '" + id + "'"});
      }
    }
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!used[i]) {
      const auto& id = h.atoms()[i].id;
      out.push_back({DiagnosticKind::OrphanAtom, id, std::nullopt, "atom '" + id + "' is in no context"});
    }
  }
  return out;
}

std::optional<bool> TwoValuedState::get(std::string_view id) const {
  const auto it = values.find(id);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

namespace {

constexpr std::int8_t kOpen = -1;

// Index form of a validated hypergraph.
struct Compiled {
  std::vector<std::vector<std::uint32_t>> contexts;
  std::vector<std::vector<std::uint32_t>> incidence;
  // Atom indices sorted by id, used to emit states in canonical order.
  std::vector<std::uint32_t> by_id;
};

Compiled compile(const OrthoHypergraph& h) {
  const auto diags = validate(h);
  if (!diags.empty()) throw Error(ErrorCode::InvalidHypergraph, diags.front().message);
  Compiled c;
  c.incidence.resize(h.size());
  for (const auto& ctx : h.contexts()) {
    std::vector<std::uint32_t> ids;
    ids.reserve(ctx.size());
    for (const auto& id : ctx) ids.push_back(static_cast<std::uint32_t>(*h.index_of(id)));
    for (auto a : ids) c.incidence[a].push_back(static_cast<std::uint32_t>(c.contexts.size()));
    c.contexts.push_back(std::move(ids));
  }
  c.by_id.resize(h.size());
  for (std::uint32_t i = 0; i < h.size(); ++i) c.by_id[i] = i;
  std::sort(c.by_id.begin(), c.by_id.end(),
            [&](auto x, auto y) { return h.atoms()[x].id < h.atoms()[y].id; });
  return c;
}

using Values = std::vector<std::int8_t>;

// Applies the two closure rules to a fixpoint. Returns false on contradiction
// and stores the atom where it surfaced in `conflict`.
class Propagator {
 public:
  explicit Propagator(const Compiled& c) : c_(c), queued_(c.contexts.size(), false) {}

  bool assign(Values& v, std::uint32_t atom, bool value, std::uint32_t& conflict) {
    const std::int8_t want = value ? 1 : 0;
    if (v[atom] == want) return true;
    if (v[atom] != kOpen) {
      conflict = atom;
      return false;
    }
    v[atom] = want;
    for (auto ctx : c_.incidence[atom]) enqueue(ctx);
    return true;
  }

  void enqueue_all() {
    for (std::uint32_t i = 0; i < c_.contexts.size(); ++i) enqueue(i);
  }

  bool run(Values& v, std::uint32_t& conflict) {
    bool ok = true;
    while (ok && !queue_.empty()) {
      const auto ctx = queue_.back();
      queue_.pop_back();
      queued_[ctx] = false;
      ok = examine(v, ctx, conflict);
    }
    for (auto ctx : queue_) queued_[ctx] = false;
    queue_.clear();
    return ok;
  }

 private:
  void enqueue(std::uint32_t ctx) {
    if (!queued_[ctx]) {
      queued_[ctx] = true;
      queue_.push_back(ctx);
    }
  }

  bool examine(Values& v, std::uint32_t ctx, std::uint32_t& conflict) {
    const auto& atoms = c_.contexts[ctx];
    int ones = 0;
    int open = 0;
    std::uint32_t last_open = 0;
    for (auto a : atoms) {
      if (v[a] == 1) {
        if (++ones > 1) {
          conflict = a;
          return false;
        }
      } else if (v[a] == kOpen) {
        ++open;
        last_open = a;
      }
    }
    if (ones == 1) {
      for (auto a : atoms) {
        if (v[a] == kOpen && !assign(v, a, false, conflict)) return false;
      }
    } else if (open == 0) {
      conflict = atoms.front();
      return false;
    } else if (open == 1) {
      return assign(v, last_open, true, conflict);
    }
    return true;
  }

  const Compiled& c_;
  std::vector<bool> queued_;
  std::vector<std::uint32_t> queue_;
};

Values seed_values(const OrthoHypergraph& h, const Compiled& c, const TwoValuedState& constraints) {
  Values v(h.size(), kOpen);
  for (const auto& [id, value] : constraints.values) {
    const auto i = h.index_of(id);
    if (!i) throw Error(ErrorCode::UnknownAtom, "constraint on unknown atom '" + id + "'");
    v[*i] = value ? 1 : 0;
  }
  for (std::size_t k = 0; k < c.contexts.size(); ++k) {
    int ones = 0;
    for (auto a : c.contexts[k]) ones += v[a] == 1;
    if (ones > 1) {
      throw Error(ErrorCode::InvalidConstraint,
                  "constraints mark two atoms of context " + std::to_string(k) + " true");
    }
  }
  return v;
}

TwoValuedState to_state(const OrthoHypergraph& h, const Values& v) {
  TwoValuedState s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != kOpen) s.values.emplace_hint(s.values.end(), h.atoms()[i].id, v[i] == 1);
  }
  return s;
}

// Depth-first search over contexts. `emit` returns false to abort.
template <typename Emit>
void search(const Compiled& c, Values& root, Emit&& emit) {
  Propagator prop(c);
  std::uint32_t conflict = 0;
  prop.enqueue_all();
  if (!prop.run(root, conflict)) return;

  bool stop = false;
  auto recurse = [&](auto& self, const Values& v) -> void {
    if (stop) return;
    // Branch on the context with no true atom and the fewest open atoms.
    std::size_t best = c.contexts.size();
    int best_open = 0;
    for (std::size_t k = 0; k < c.contexts.size(); ++k) {
      int open = 0;
      bool has_true = false;
      for (auto a : c.contexts[k]) {
        has_true = has_true || v[a] == 1;
        open += v[a] == kOpen;
      }
      if (!has_true && (best == c.contexts.size() || open < best_open)) {
        best = k;
        best_open = open;
        if (open <= 2) break;
      }
    }
    if (best == c.contexts.size()) {
      // Every context has its true atom, so propagation already falsified the rest.
      if (!emit(v)) stop = true;
      return;
    }
    for (auto a : c.contexts[best]) {
      if (v[a] != kOpen) continue;
      Values next = v;
      prop.assign(next, a, true, conflict);
      if (prop.run(next, conflict)) self(self, next);
      if (stop) return;
    }
  };
  recurse(recurse, root);
}

}  // namespace

bool is_total_state(const OrthoHypergraph& h, const TwoValuedState& s) {
  if (s.size() != h.size()) return false;
  for (const auto& a : h.atoms()) {
    if (!s.get(a.id)) return false;
  }
  for (const auto& ctx : h.contexts()) {
    int ones = 0;
    for (const auto& id : ctx) ones += s.get(id).value_or(false) ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

void for_each_total_state(const OrthoHypergraph& h, const TwoValuedState& constraints,
                          const std::function<bool(const TwoValuedState&)>& visit) {
  const Compiled c = compile(h);
  Values root = seed_values(h, c, constraints);
  search(c, root, [&](const Values& v) { return visit(to_state(h, v)); });
}

std::vector<TwoValuedState> enumerate_total_states(const OrthoHypergraph& h,
                                                   const TwoValuedState& constraints) {
  const Compiled c = compile(h);
  Values root = seed_values(h, c, constraints);
  std::vector<Values> found;
  search(c, root, [&](const Values& v) {
    found.push_back(v);
    return true;
  });
  // Canonical order: lexicographic over values listed in atom-id order.
  auto key_less = [&](const Values& x, const Values& y) {
    for (auto i : c.by_id) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
  };
  std::sort(found.begin(), found.end(), key_less);
  std::vector<TwoValuedState> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(to_state(h, v));
  return out;
}

std::uint64_t count_total_states(const OrthoHypergraph& h, const TwoValuedState& constraints) {
  const Compiled c = compile(h);
  Values root = seed_values(h, c, constraints);
  std::uint64_t n = 0;
  search(c, root, [&](const Values&) {
    ++n;
    return true;
  });
  return n;
}

ClosureResult closure(const OrthoHypergraph& h, const TwoValuedState& partial, ClosureMode mode) {
  const Compiled c = compile(h);
  Values v(h.size(), kOpen);
  Propagator prop(c);
  std::uint32_t conflict = 0;
  for (const auto& [id, value] : partial.values) {
    const auto i = h.index_of(id);
    if (!i) throw Error(ErrorCode::UnknownAtom, "partial state names unknown atom '" + id + "'");
    v[*i] = value ? 1 : 0;
  }
  prop.enqueue_all();
  if (!prop.run(v, conflict)) {
    return Contradiction{h.atoms()[conflict].id, "forced both true and false by propagation"};
  }
  if (mode == ClosureMode::Unit) return to_state(h, v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t x = 0; x < v.size(); ++x) {
      if (v[x] != kOpen) continue;
      for (const bool probe : {true, false}) {
        Values trial = v;
        prop.assign(trial, x, probe, conflict);
        if (prop.run(trial, conflict)) continue;
        // x = probe is refuted; commit the opposite value.
        prop.assign(v, x, !probe, conflict);
        if (!prop.run(v, conflict)) {
          return Contradiction{h.atoms()[x].id, "both truth values lead to a contradiction"};
        }
        changed = true;
        break;
      }
    }
  }
  return to_state(h, v);
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::TrueImpliesFalse: return "TrueImpliesFalse";
    case Relation::TrueImpliesTrue: return "TrueImpliesTrue";
    case Relation::Unconstrained: return "Unconstrained";
    case Relation::NoStateWithSourceTrue: return "NoStateWithSourceTrue";
  }
  return "Unknown";
}

GadgetRelation classify_pair(const OrthoHypergraph& h, std::string_view from, std::string_view to) {
  const auto src = h.index_of(from);
  const auto dst = h.index_of(to);
  if (!src) throw Error(ErrorCode::UnknownAtom, "no atom '" + std::string(from) + "'");
  if (!dst) throw Error(ErrorCode::UnknownAtom, "no atom '" + std::string(to) + "'");
  if (*src == *dst) throw Error(ErrorCode::PreconditionViolated, "source and target are the same atom");

  const Compiled c = compile(h);
  TwoValuedState constraint;
  constraint.set(std::string(from), true);
  Values root = seed_values(h, c, constraint);
  GadgetRelation g{std::string(from), std::string(to), Relation::Unconstrained, 0, 0};
  search(c, root, [&](const Values& v) {
    (v[*dst] == 1 ? g.target_true : g.target_false) += 1;
    return true;
  });
  if (g.target_true == 0 && g.target_false == 0) {
    g.relation = Relation::NoStateWithSourceTrue;
  } else if (g.target_true == 0) {
    g.relation = Relation::TrueImpliesFalse;
  } else if (g.target_false == 0) {
    g.relation = Relation::TrueImpliesTrue;
  }
  return g;
}

OrthoHypergraph merge(const OrthoHypergraph& a, const OrthoHypergraph& b) {
  std::vector<Atom> atoms = a.atoms();
  for (const auto& atom : b.atoms()) {
    const auto i = a.index_of(atom.id);
    if (!i) {
      atoms.push_back(atom);
      continue;
    }
    auto& mine = atoms[*i].label;
    if (!atom.label) continue;
    if (!mine) {
      mine = atom.label;
    } else if (mine->dim() != atom.label->dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "shared atom '" + atom.id + "' labelled in different dimensions");
    } else if (!collinear(*mine, *atom.label)) {
      throw Error(ErrorCode::LabelConflict, "shared atom '" + atom.id + "' has non-collinear labels");
    }
  }
  OrthoHypergraph out;
  for (auto& atom : atoms) out.add_atom(std::move(atom.id), std::move(atom.label));
  std::set<std::set<std::string>> seen;
  for (const auto* g : {&a, &b}) {
    for (const auto& ctx : g->contexts()) {
      if (seen.insert(std::set<std::string>(ctx.begin(), ctx.end())).second) out.add_context(ctx);
    }
  }
  return out;
}

std::string_view to_string(Definiteness d) noexcept {
  switch (d) {
    case Definiteness::ForcedTrue: return "forced-1";
    case Definiteness::ForcedFalse: return "forced-0";
    case Definiteness::UndefinedRequired: return "undefined-required";
    case Definiteness::Free: return "free";
  }
  return "unknown";
}

std::optional<Definiteness> IndefinitenessReport::status(std::string_view atom) const {
  for (const auto& [id, d] : atoms) {
    if (id == atom) return d;
  }
  return std::nullopt;
}

IndefinitenessReport indefiniteness_report(const OrthoHypergraph& h, std::string_view prepared) {
  const auto p = h.index_of(prepared);
  if (!p) throw Error(ErrorCode::UnknownAtom, "no atom '" + std::string(prepared) + "'");
  const Compiled c = compile(h);
  TwoValuedState constraint;
  constraint.set(std::string(prepared), true);
  Values root = seed_values(h, c, constraint);

  std::vector<bool> seen_true(h.size(), false);
  std::vector<bool> seen_false(h.size(), false);
  IndefinitenessReport r{std::string(prepared), 0, {}};
  search(c, root, [&](const Values& v) {
    ++r.total_states;
    for (std::size_t i = 0; i < v.size(); ++i) {
      (v[i] == 1 ? seen_true : seen_false)[i] = true;
    }
    return true;
  });
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == *p) continue;
    Definiteness d = Definiteness::Free;
    if (r.total_states == 0) {
      d = Definiteness::UndefinedRequired;
    } else if (!seen_false[i]) {
      d = Definiteness::ForcedTrue;
    } else if (!seen_true[i]) {
      d = Definiteness::ForcedFalse;
    }
    r.atoms.emplace_back(h.atoms()[i].id, d);
  }
  return r;
}

}  // namespace qrk
