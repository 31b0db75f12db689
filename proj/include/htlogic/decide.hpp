#pragma once

// Deciding validity and finite consequence by enumeration over the
// three-element algebra BT, with countermodels on the two-state frame K0.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htlogic/algebra.hpp"
#include "htlogic/duality.hpp"
#include "htlogic/frame.hpp"

namespace htlogic {

/// Default cap: 12 variables over a three-element carrier.
inline constexpr std::size_t kDefaultMaxVars = 12;

struct DecisionResult {
  std::vector<Formula> gamma;
  Formula alpha;
  bool holds = true;
  /// Set when refuted: an assignment into BT sending gamma to top and alpha
  /// below top.
  std::optional<Assignment> counter_assignment;
  /// Set when refuted: a model on K0 in which gamma is true and alpha is not.
  std::optional<HTModel> countermodel;
  /// First state of the countermodel at which alpha fails.
  std::optional<State> failing_state;

  explicit operator bool() const noexcept { return holds; }
};

/// Decides whether alpha follows from the finite premise list gamma. The
/// evidence of a refutation is re-verified before returning; a mismatch
/// throws std::logic_error. Throws ResourceError beyond `max_vars`
/// variables.
DecisionResult decide_consequence(std::span<const Formula> gamma, const Formula& alpha,
                                  std::size_t max_vars = kDefaultMaxVars);

DecisionResult decide_validity(const Formula& alpha, std::size_t max_vars = kDefaultMaxVars);

/// Image of an element of BT as an R-closed set of K0:
/// bot -> {}, mid -> {t2}, top -> {t1,t2}.
StateSet bt_to_k0(Element e);

/// The model on K0 matching `v` through bt_to_k0. Throws StructureError
/// unless v refutes alpha in BT.
HTModel countermodel_on_k0(const Formula& alpha, const Assignment& v);

struct Discrepancy {
  Formula formula;
  std::string description;
};

struct HarnessReport {
  std::size_t formulas = 0;
  std::size_t valid = 0;
  std::size_t refuted = 0;
  std::size_t frames = 0;
  std::vector<Discrepancy> discrepancies;

  bool passed() const noexcept { return discrepancies.empty(); }
};

/// Cross-checks decide_validity against the relational semantics: a valid
/// formula must be valid on every enumerated frame of at most
/// `max_frame_size` states, and a refuted one must fail in its K0
/// countermodel and, when two-state frames are enumerated, on at least one
/// enumerated frame.
HarnessReport equivalence_harness(std::span<const Formula> corpus, std::size_t max_frame_size,
                                  bool mod_iso = false);

}  // namespace htlogic
