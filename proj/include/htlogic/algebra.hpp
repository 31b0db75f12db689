#pragma once

// Finite bounded distributive lattices carrying the perception operators
// S1, S2 and, optionally, the operator C and a Heyting implication/negation.
//
// A T-structure uses (S1, S2, C); an HT-algebra uses (S1, S2, =>, ~). The two
// presentations are interconvertible with derive_implication / derive_c.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "htlogic/formula.hpp"

namespace htlogic {

/// Index of an element in an algebra's carrier.
using Element = std::size_t;

/// Variable assignment into a carrier. Induces the unique homomorphism from
/// formulas into the algebra.
using Assignment = std::map<std::string, Element>;

/// Raw description of an algebra, by element index.
struct AlgebraTables {
  std::vector<std::string> elements;
  /// The full order relation as (lower, upper) pairs, reflexive pairs included.
  std::vector<std::pair<Element, Element>> le;
  Element bot = 0;
  Element top = 0;
  std::vector<Element> s1;
  std::vector<Element> s2;
  std::optional<std::vector<Element>> c;
  /// Row-major: imp[a * n + b] = a => b.
  std::optional<std::vector<Element>> imp;
  std::optional<std::vector<Element>> neg;
};

class FiniteAlgebra {
 public:
  /// Validates that `le` is a partial order in which all binary meets and
  /// joins exist, that bot/top are its bounds, that the lattice is
  /// distributive, and that every present table is total on the carrier.
  /// Throws StructureError otherwise.
  explicit FiniteAlgebra(AlgebraTables tables);

  std::size_t size() const noexcept { return t_.elements.size(); }
  const std::string& name(Element e) const { return t_.elements.at(e); }
  const std::vector<std::string>& names() const noexcept { return t_.elements; }
  std::optional<Element> find(std::string_view name) const;
  /// Like find, but throws StructureError for unknown names.
  Element element(std::string_view name) const;

  Element bot() const noexcept { return t_.bot; }
  Element top() const noexcept { return t_.top; }
  bool le(Element a, Element b) const { return order_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }

  Element s1(Element a) const { return t_.s1[a]; }
  Element s2(Element a) const { return t_.s2[a]; }
  /// S_i for i in {1, 2}.
  Element s(int i, Element a) const { return i == 1 ? s1(a) : s2(a); }

  bool has_c() const noexcept { return t_.c.has_value(); }
  bool has_imp() const noexcept { return t_.imp.has_value(); }
  bool has_neg() const noexcept { return t_.neg.has_value(); }
  Element c(Element a) const { return (*t_.c)[a]; }
  Element imp(Element a, Element b) const { return (*t_.imp)[a * size() + b]; }
  Element neg(Element a) const { return (*t_.neg)[a]; }

  const AlgebraTables& tables() const noexcept { return t_; }

  FiniteAlgebra with_c(std::vector<Element> c) const;
  FiniteAlgebra with_implication(std::vector<Element> imp, std::vector<Element> neg) const;
  FiniteAlgebra without_c() const;
  FiniteAlgebra without_implication() const;

  /// Exact equality of carriers, orders and operator tables.
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    const auto& x = a.t_;
    const auto& y = b.t_;
    return x.elements == y.elements && a.order_ == b.order_ && x.bot == y.bot &&
           x.top == y.top && x.s1 == y.s1 && x.s2 == y.s2 && x.c == y.c && x.imp == y.imp &&
           x.neg == y.neg;
  }

 private:
  AlgebraTables t_;
  std::vector<bool> order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

/// The basic three-element T-structure on the chain bot < mid < top, with
/// every table populated.
FiniteAlgebra make_bt();

/// The two-element subalgebra {bot, top} of make_bt().
FiniteAlgebra make_b();

/// Componentwise product. Optional tables are kept only when both factors
/// carry them. Element (x, y) is named "(x,y)" and indexed x * |b| + y.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ---------------------------------------------------------------------------
// Axiom checking

struct Violation {
  std::string axiom;
  /// Elements (or states, for frame checks) that falsify the axiom.
  std::vector<std::size_t> witness;
  /// Extra context, e.g. the variable for a heredity violation.
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;
  /// Axiom labels that were checked, in order.
  std::vector<std::string> checked;

  bool passed() const noexcept { return violations.empty(); }

  bool violates(std::string_view axiom) const;
  const Violation* first(std::string_view axiom) const;
};

/// (T1)-(T7). Requires the C table.
AxiomReport check_t_structure(const FiniteAlgebra& a);

/// (HT1)-(HT7). HT1 is checked as the residuation law together with
/// ~a = a => 0. Requires implication and negation tables.
AxiomReport check_ht_algebra(const FiniteAlgebra& a);

/// Properties that follow from the axioms: (T8)-(T11); that C a complements
/// S1 a; that the fixed points of S1 and S2 are exactly the complemented
/// elements; C = ~S1 when both are present; the Ivo Thomas identity when an
/// implication is present. Needs C or a negation (C is then taken as ~S1).
AxiomReport check_derived_properties(const FiniteAlgebra& a);

/// Re-evaluates the axiom named by `v` on its witness. Returns true when the
/// axiom holds there, i.e. false for every genuine violation.
bool axiom_holds_at(const FiniteAlgebra& a, const Violation& v);

/// Adds a => b = b v /\_k (C S_k a v S_k b) and ~a = a => 0.
/// Throws StructureError unless `t` is a T-structure.
FiniteAlgebra derive_implication(const FiniteAlgebra& t);

/// Adds C a = ~S1 a. Throws StructureError unless `h` is an HT-algebra.
FiniteAlgebra derive_c(const FiniteAlgebra& h);

/// Elements with a lattice complement, in carrier order.
std::vector<Element> complemented_elements(const FiniteAlgebra& a);

struct CongruenceReport {
  /// Violations of compatibility with meet, join, C, S1, S2.
  AxiomReport compatibility;
  /// Equivalence classes of a ~ b iff S1 a = S1 b and S2 a = S2 b.
  std::vector<std::vector<Element>> classes;
  /// Whether the relation is the identity (the Determination Principle).
  bool identity = false;

  bool is_congruence() const noexcept { return compatibility.passed(); }
};

/// Requires C and (T1)-(T5), (T7); throws StructureError otherwise.
CongruenceReport check_perception_congruence(const FiniteAlgebra& a);

// ---------------------------------------------------------------------------
// Formulas in algebras

/// Homomorphic extension of `v`. Throws StructureError for variables missing
/// from `v` or when `a` lacks implication/negation tables.
Element eval(const Formula& f, const Assignment& v, const FiniteAlgebra& a);

/// Evidence that a consequence fails.
struct Witness {
  std::optional<Assignment> assignment;
  /// Frame valuation, as variable -> state indices.
  std::optional<std::map<std::string, std::vector<std::size_t>>> valuation;
  std::optional<std::size_t> state;
};

struct Verdict {
  bool holds = true;
  /// Present iff !holds.
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Default cap on enumerated assignments: 3^12.
inline constexpr std::size_t kDefaultAssignmentCap = 531441;

/// Calls `fn` on every assignment of `vars` into `a`, first variable most
/// significant, until `fn` returns false. Throws ResourceError when
/// |a|^|vars| exceeds `cap`.
void for_each_assignment(const FiniteAlgebra& a, std::span<const std::string> vars,
                         std::size_t cap, const std::function<bool(const Assignment&)>& fn);

/// Whether every assignment sending all of `gamma` to top sends `alpha` to
/// top. The witness is the first counter-assignment in enumeration order.
Verdict algebra_consequence(std::span<const Formula> gamma, const Formula& alpha,
                            const FiniteAlgebra& a,
                            std::size_t cap = kDefaultAssignmentCap);

/// "p=mid, q=top"
std::string render_assignment(const Assignment& v, const FiniteAlgebra& a);

/// Parses "p=mid,q=top" against the carrier names of `a`.
Assignment parse_assignment(std::string_view text, const FiniteAlgebra& a);

}  // namespace htlogic
