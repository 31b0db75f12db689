#pragma once

// HT-frames (W, R, s1, s2), models over them, and the satisfaction relation.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "htlogic/algebra.hpp"
#include "htlogic/formula.hpp"

namespace htlogic {

using State = std::size_t;

/// Upper bound on frame size; state sets are 64-bit masks.
inline constexpr std::size_t kMaxStates = 64;

/// A set of states of one frame.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}
  static StateSet of(std::initializer_list<State> states) {
    StateSet s;
    for (State w : states) s.insert(w);
    return s;
  }
  static constexpr StateSet all(std::size_t n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(State w) const { return (bits_ >> w) & 1U; }
  constexpr void insert(State w) { bits_ |= std::uint64_t{1} << w; }
  constexpr void erase(State w) { bits_ &= ~(std::uint64_t{1} << w); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(StateSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  std::vector<State> members() const;

  constexpr StateSet operator&(StateSet o) const { return StateSet(bits_ & o.bits_); }
  constexpr StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  constexpr bool operator==(const StateSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Raw frame description by state index.
struct FrameTables {
  std::vector<std::string> states;
  std::vector<std::pair<State, State>> r;
  std::vector<State> s1;
  std::vector<State> s2;
};

class HTFrame {
 public:
  /// Validates only that the data is well formed (nonempty, unique names,
  /// total in-range maps). The frame conditions are checked by check_frame.
  explicit HTFrame(FrameTables tables);

  std::size_t size() const noexcept { return t_.states.size(); }
  const std::string& name(State w) const { return t_.states.at(w); }
  const std::vector<std::string>& names() const noexcept { return t_.states; }
  std::optional<State> find(std::string_view name) const;
  State state(std::string_view name) const;

  bool related(State w, State v) const { return succ_[w].contains(v); }
  StateSet successors(State w) const { return succ_[w]; }
  State s1(State w) const { return t_.s1[w]; }
  State s2(State w) const { return t_.s2[w]; }
  State s(int i, State w) const { return i == 1 ? s1(w) : s2(w); }
  StateSet all_states() const { return StateSet::all(size()); }

  const FrameTables& tables() const noexcept { return t_; }

  /// Same frame with R replaced by its reflexive-transitive closure.
  HTFrame closed() const;

  /// Preimage s_i^{-1}(x).
  StateSet preimage(int i, StateSet x) const;
  /// Whether x is upward closed under R.
  bool is_r_closed(StateSet x) const;

  /// "{t1,t2}"
  std::string render(StateSet x) const;

  friend bool operator==(const HTFrame& a, const HTFrame& b) {
    return a.t_.states == b.t_.states && a.succ_ == b.succ_ && a.t_.s1 == b.t_.s1 &&
           a.t_.s2 == b.t_.s2;
  }

 private:
  FrameTables t_;
  std::vector<StateSet> succ_;
};

/// Checks (K1)-(K6) exhaustively, plus the fixed-point form of (K6): every
/// state is fixed by s1 or by s2 (label "K6-fixpoint").
AxiomReport check_frame(const HTFrame& k);

/// The two-state frame on t1 <= t2 with s1 constantly t1 and s2 constantly t2.
HTFrame make_k0();

/// All R-closed subsets, ordered by size then lexicographically by members.
/// Throws ResourceError when 2^|W| exceeds `cap`.
std::vector<StateSet> closed_subsets(const HTFrame& k, std::size_t cap = std::size_t{1} << 20);

/// Variable -> set of states; variables not listed denote the empty set.
using Valuation = std::map<std::string, StateSet>;

class HTModel {
 public:
  /// Throws StructureError when a valued set mentions states outside the
  /// frame. Atomic heredity is checked by check_model.
  HTModel(HTFrame frame, Valuation m);

  const HTFrame& frame() const noexcept { return frame_; }
  const Valuation& valuation() const noexcept { return m_; }
  StateSet value(const std::string& var) const;

 private:
  HTFrame frame_;
  Valuation m_;
};

/// Each valued set must be R-closed; violations are ("her-at", (w, w'), p).
AxiomReport check_model(const HTModel& m);

bool sat(const HTModel& m, State w, const Formula& f);

/// {w : sat(m, w, f)}, evaluated state by state through sat.
StateSet truth_set(const HTModel& m, const Formula& f);

/// Holds iff f is satisfied at every state; witness is the first failing state.
Verdict model_truth(const HTModel& m, const Formula& f);

/// Holds iff every gamma being true in m implies alpha is true in m.
Verdict model_consequence(std::span<const Formula> gamma, const Formula& alpha,
                          const HTModel& m);

/// Default cap on enumerated valuations.
inline constexpr std::size_t kDefaultValuationCap = 531441;

/// Calls `fn` on every valuation of `vars` into closed_subsets(k), first
/// variable most significant, until `fn` returns false.
void for_each_closed_valuation(const HTFrame& k, std::span<const std::string> vars,
                               std::size_t cap, const std::function<bool(const Valuation&)>& fn);

/// Truth of f in every model on k with an R-closed valuation. The witness is
/// the first failing (valuation, state).
Verdict frame_valid(const HTFrame& k, const Formula& f, std::size_t cap = kDefaultValuationCap);

/// Default bound on frame enumeration.
inline constexpr std::size_t kDefaultMaxFrameStates = 3;

/// Every frame with 1..max_states states (named w1, w2, ...) that passes
/// check_frame, in a fixed order: by size, then R as a bit pattern, then s1,
/// then s2. With `mod_iso`, frames isomorphic to an earlier one are skipped.
std::vector<HTFrame> enumerate_frames(std::size_t max_states, bool mod_iso = false,
                                      std::size_t bound = kDefaultMaxFrameStates);

/// First bijection (in lexicographic order) that preserves R, s1 and s2,
/// as image indices; nullopt when none exists.
std::optional<std::vector<State>> frame_isomorphism(const HTFrame& a, const HTFrame& b,
                                                    std::size_t bound = 8);

Witness to_witness(const Valuation& m, std::optional<State> state);
std::string render_valuation(const Valuation& m, const HTFrame& k);

}  // namespace htlogic
