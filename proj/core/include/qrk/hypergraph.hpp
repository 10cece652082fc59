#pragma once

// Orthogonality hypergraphs and their two-valued states.
//
// Atoms are yes/no propositions named by string id; a context is a maximal set
// of mutually exclusive atoms, so a (total) two-valued state marks exactly one
// atom per context true. Atoms shared by several contexts are the intertwines
// that make classical assignments hard or impossible.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrk/hilbert.hpp"

namespace qrk {

struct Atom {
  std::string id;
  std::optional<Ket> label;
};

class OrthoHypergraph {
 public:
  /// Returns the new atom's index. Throws DuplicateAtom.
  std::size_t add_atom(std::string id, std::optional<Ket> label = std::nullopt);

  /// Stored verbatim; validate() reports unknown ids, repeats and short contexts.
  void add_context(std::vector<std::string> atom_ids);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<std::vector<std::string>>& contexts() const noexcept { return contexts_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return index_of(id).has_value(); }
  /// Throws UnknownAtom.
  const Atom& atom(std::string_view id) const;

  /// Copy without the context at `index`; atoms are kept.
  OrthoHypergraph without_context(std::size_t index) const;

 private:
  std::vector<Atom> atoms_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::string>> contexts_;
};

enum class DiagnosticKind { UnknownAtomInContext, DuplicateAtomInContext, ContextTooSmall, OrphanAtom };

std::string_view to_string(DiagnosticKind kind) noexcept;

struct Diagnostic {
  DiagnosticKind kind;
  std::string atom;
  std::optional<std::size_t> context;
  std::string message;
};

/// Empty result means the hypergraph is well formed.
std::vector<Diagnostic> validate(const OrthoHypergraph& h);

/// Partial map atom id -> truth value, ordered by atom id.
///
/// Ordering of states compares the value sequences in atom-id order, which is
/// the canonical order of enumerate_total_states().
struct TwoValuedState {
  std::map<std::string, bool, std::less<>> values;

  std::optional<bool> get(std::string_view id) const;
  void set(std::string id, bool value) { values.insert_or_assign(std::move(id), value); }
  std::size_t size() const noexcept { return values.size(); }

  friend auto operator<=>(const TwoValuedState&, const TwoValuedState&) = default;
  friend bool operator==(const TwoValuedState&, const TwoValuedState&) = default;
};

/// True when every context has exactly one true atom and all atoms are assigned.
bool is_total_state(const OrthoHypergraph& h, const TwoValuedState& s);

/// All total states extending `constraints`, canonically sorted.
///
/// Depth-first branching on the context with the fewest open atoms, with
/// two-rule propagation after every decision. Worst case is exponential in the
/// number of contexts. Throws InvalidHypergraph, UnknownAtom, or
/// InvalidConstraint when `constraints` marks two atoms of one context true.
std::vector<TwoValuedState> enumerate_total_states(const OrthoHypergraph& h,
                                                   const TwoValuedState& constraints = {});

/// Same search as enumerate_total_states without materializing the states.
std::uint64_t count_total_states(const OrthoHypergraph& h, const TwoValuedState& constraints = {});

/// Visits total states in search order (not canonical). Return false to stop.
void for_each_total_state(const OrthoHypergraph& h, const TwoValuedState& constraints,
                          const std::function<bool(const TwoValuedState&)>& visit);

enum class ClosureMode {
  /// Only the two rules: a true atom falsifies its context mates; a context
  /// whose other atoms are all false makes the last one true.
  Unit,
  /// Unit rules plus failed-literal probing: if x = v unit-propagates to a
  /// contradiction, x is fixed to !v.
  Lookahead,
};

struct Contradiction {
  std::string atom;
  std::string reason;
};

using ClosureResult = std::variant<TwoValuedState, Contradiction>;

/// Fixpoint of the admissibility rules starting from `partial`.
ClosureResult closure(const OrthoHypergraph& h, const TwoValuedState& partial,
                      ClosureMode mode = ClosureMode::Lookahead);

enum class Relation { TrueImpliesFalse, TrueImpliesTrue, Unconstrained, NoStateWithSourceTrue };

std::string_view to_string(Relation r) noexcept;

struct GadgetRelation {
  std::string from;
  std::string to;
  Relation relation;
  /// Total states with from = 1 and to = 1.
  std::uint64_t target_true = 0;
  /// Total states with from = 1 and to = 0.
  std::uint64_t target_false = 0;
};

/// Classifies what classical states with `from` true say about `to`.
GadgetRelation classify_pair(const OrthoHypergraph& h, std::string_view from, std::string_view to);

/// Union with atoms identified by id; contexts with the same atom set appear once.
/// Throws LabelConflict when a shared atom carries non-collinear labels.
OrthoHypergraph merge(const OrthoHypergraph& a, const OrthoHypergraph& b);

enum class Definiteness { ForcedTrue, ForcedFalse, UndefinedRequired, Free };

std::string_view to_string(Definiteness d) noexcept;

struct IndefinitenessReport {
  std::string prepared;
  /// Number of total states with the prepared atom true.
  std::uint64_t total_states = 0;
  /// One entry per other atom, in hypergraph order.
  std::vector<std::pair<std::string, Definiteness>> atoms;

  bool value_indefinite() const noexcept { return total_states == 0; }
  std::optional<Definiteness> status(std::string_view atom) const;
};

/// Which atoms can carry a definite classical value once `prepared` is true.
/// With no total state left, every other atom is UndefinedRequired.
IndefinitenessReport indefiniteness_report(const OrthoHypergraph& h, std::string_view prepared);

}  // namespace qrk
