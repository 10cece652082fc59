#pragma once

// Checks that vector labels turn a hypergraph into a set of orthonormal
// bases, and compares classical gadget relations with Born probabilities.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrk/hilbert.hpp"
#include "qrk/hypergraph.hpp"

namespace qrk {

struct ContextResidual {
  std::size_t context = 0;
  /// max |<u|v>| over distinct atoms of the context.
  double max_overlap = 0.0;
  /// max |1 - ||v|||.
  double max_norm_error = 0.0;
};

struct RealizationReport {
  double tolerance = kTolerance;
  std::size_t dim = 0;
  std::vector<ContextResidual> residuals;
  std::vector<std::size_t> offending;
  bool pass = false;
};

/// Every atom must be labelled, all labels in one dimension d, every context of
/// size d. Throws MissingLabel, DimensionMismatch, ContextSizeMismatch (and
/// InvalidHypergraph for malformed input).
RealizationReport verify_realization(const OrthoHypergraph& h, double tol = kTolerance);

/// Unit vector orthogonal to two orthogonal vectors of C^3: conj(u x v).
/// Throws DimensionMismatch, NotOrthogonal.
Ket complete_context_d3(const Ket& u, const Ket& v);

struct TerminalGap {
  GadgetRelation classical;
  double quantum = 0.0;
  /// Set when the labels are orthogonal or collinear, where the classical and
  /// quantum predictions cannot disagree.
  std::optional<std::string> warning;
};

/// classify_pair plus born(label(from), label(to)).
/// Throws MissingLabel; PreconditionViolated when from == to.
TerminalGap terminal_gap(const OrthoHypergraph& h, std::string_view from, std::string_view to);

std::string realization_to_json(const RealizationReport& r);
std::string realization_to_text(const OrthoHypergraph& h, const RealizationReport& r);
std::string terminal_gap_to_json(const TerminalGap& g);

}  // namespace qrk
