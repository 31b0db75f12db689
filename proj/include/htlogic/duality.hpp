#pragma once

// The two passages between algebras and frames:
//
//  * a frame yields the algebra of its R-closed sets, with S_i X = s_i^{-1}(X)
//    and C X = W \ S_1 X;
//  * an HT-algebra yields the frame of its prime filters, ordered by
//    inclusion, with s_i(P) = {x : S_i x in P}.

#include <optional>
#include <utility>
#include <vector>

#include "htlogic/algebra.hpp"
#include "htlogic/frame.hpp"

namespace htlogic {

struct RClosedFamily {
  HTFrame frame;
  /// Every R-closed subset, by size then lexicographically.
  std::vector<StateSet> sets;
};

RClosedFamily r_closed_sets(const HTFrame& k, std::size_t cap = std::size_t{1} << 20);

/// a => b on R-closed sets, computed as Y u /\_k s_k^{-1}((W \ X) u Y).
StateSet closed_set_implication(const HTFrame& k, StateSet x, StateSet y);

/// The T-structure of R-closed sets with implication and negation added.
/// Elements are named by rendering the set, e.g. "{t2}".
FiniteAlgebra complex_algebra(const HTFrame& k);

struct PrimeFilter {
  /// Members in carrier order.
  std::vector<Element> members;

  bool contains(Element e) const;
  friend bool operator==(const PrimeFilter&, const PrimeFilter&) = default;
};

/// Whether `members` is a proper, upward closed, meet-closed, prime subset.
bool is_prime_filter(const FiniteAlgebra& a, const std::vector<bool>& members);

/// All prime filters by exhaustive subset search, ordered by size then
/// lexicographically. Throws ResourceError when 2^|A| exceeds `cap`.
std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a,
                                       std::size_t cap = std::size_t{1} << 20);

/// Prime-filter frame of an HT-algebra. States are named by rendering the
/// filter, e.g. "{mid,top}". Throws StructureError unless `a` passes
/// check_ht_algebra.
HTFrame canonical_frame(const FiniteAlgebra& a);

/// The complex algebra of the model's frame and the assignment p -> m(p).
std::pair<FiniteAlgebra, Assignment> model_to_algebraic(const HTModel& m);

/// The model on canonical_frame(a) with m(p) = {P : v(p) in P}.
HTModel algebraic_to_model(const FiniteAlgebra& a, const Assignment& v);

/// Default bound on carrier size for isomorphism search.
inline constexpr std::size_t kDefaultIsoBound = 8;

/// First bijection, in lexicographic order, preserving the order and every
/// operator table; entry e is the image of element e. Algebras that carry
/// different sets of optional tables are never isomorphic. Throws
/// ResourceError when the carriers are larger than `bound`.
std::optional<std::vector<Element>> check_isomorphic(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b,
                                                     std::size_t bound = kDefaultIsoBound);

}  // namespace htlogic
