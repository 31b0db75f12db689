#include "htlogic/frame.hpp"

#include <algorithm>
#include <numeric>

namespace htlogic {

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<State>(std::countr_zero(b)));
  return out;
}

HTFrame::HTFrame(FrameTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.states.size();
  if (n == 0) throw StructureError("frame has no states");
  if (n > kMaxStates) throw ResourceError("frames are limited to 64 states");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t_.states[i] == t_.states[j])
        throw StructureError("duplicate state name '" + t_.states[i] + "'");
  if (t_.s1.size() != n || t_.s2.size() != n)
    throw StructureError("s1 and s2 must be total on the states");
  for (std::size_t w = 0; w < n; ++w)
    if (t_.s1[w] >= n || t_.s2[w] >= n) throw StructureError("s1/s2 map to an unknown state");
  succ_.assign(n, StateSet{});
  for (auto [w, v] : t_.r) {
    if (w >= n || v >= n) throw StructureError("R mentions an unknown state");
    succ_[w].insert(v);
  }
}

std::optional<State> HTFrame::find(std::string_view name) const {
  for (State w = 0; w < size(); ++w)
    if (t_.states[w] == name) return w;
  return std::nullopt;
}

State HTFrame::state(std::string_view name) const {
  if (auto w = find(name)) return *w;
  throw StructureError("unknown state '" + std::string(name) + "'");
}

HTFrame HTFrame::closed() const {
  const std::size_t n = size();
  std::vector<StateSet> reach = succ_;
  for (State w = 0; w < n; ++w) reach[w].insert(w);
  // Warshall
  for (State k = 0; k < n; ++k)
    for (State w = 0; w < n; ++w)
      if (reach[w].contains(k)) reach[w] = reach[w] | reach[k];
  FrameTables t = t_;
  t.r.clear();
  for (State w = 0; w < n; ++w)
    for (State v : reach[w].members()) t.r.emplace_back(w, v);
  return HTFrame(std::move(t));
}

StateSet HTFrame::preimage(int i, StateSet x) const {
  StateSet out;
  for (State w = 0; w < size(); ++w)
    if (x.contains(s(i, w))) out.insert(w);
  return out;
}

bool HTFrame::is_r_closed(StateSet x) const {
  for (State w : x.members())
    if (!succ_[w].subset_of(x)) return false;
  return true;
}

std::string HTFrame::render(StateSet x) const {
  std::string out = "{";
  bool first = true;
  for (State w : x.members()) {
    if (!first) out += ',';
    out += name(w);
    first = false;
  }
  return out + "}";
}

AxiomReport check_frame(const HTFrame& k) {
  AxiomReport r;
  const std::size_t n = k.size();
  auto fail = [&r](const char* label, std::vector<std::size_t> witness) {
    r.violations.push_back({label, std::move(witness), {}});
  };
  r.checked = {"K0", "K1-reflexive", "K1-transitive", "K2", "K3", "K4", "K5", "K6", "K6-fixpoint"};

  // K0 holds by construction: W is nonempty and s1, s2 are total.
  for (State w = 0; w < n; ++w)
    if (!k.related(w, w)) fail("K1-reflexive", {w});
  for (State w = 0; w < n; ++w)
    for (State v = 0; v < n; ++v)
      for (State u = 0; u < n; ++u)
        if (k.related(w, v) && k.related(v, u) && !k.related(w, u)) fail("K1-transitive", {w, v, u});
  for (State w = 0; w < n; ++w) {
    bool ok = true;
    for (int i : {1, 2})
      for (int j : {1, 2})
        if (k.s(j, k.s(i, w)) != k.s(j, w)) ok = false;
    if (!ok) fail("K2", {w});
  }
  for (State w = 0; w < n; ++w)
    if (!k.related(k.s1(w), w)) fail("K3", {w});
  for (State w = 0; w < n; ++w)
    if (!k.related(w, k.s2(w))) fail("K4", {w});
  for (State w = 0; w < n; ++w) {
    for (State v = 0; v < n; ++v) {
      if (!k.related(w, v)) continue;
      bool ok = true;
      for (int i : {1, 2})
        if (!k.related(k.s(i, w), k.s(i, v)) || !k.related(k.s(i, v), k.s(i, w))) ok = false;
      if (!ok) fail("K5", {w, v});
    }
  }
  StateSet images;
  for (State w = 0; w < n; ++w) {
    images.insert(k.s1(w));
    images.insert(k.s2(w));
  }
  for (State w = 0; w < n; ++w)
    if (!images.contains(w)) fail("K6", {w});
  for (State w = 0; w < n; ++w)
    if (k.s1(w) != w && k.s2(w) != w) fail("K6-fixpoint", {w});
  return r;
}

HTFrame make_k0() {
  FrameTables t;
  t.states = {"t1", "t2"};
  t.r = {{0, 0}, {0, 1}, {1, 1}};
  t.s1 = {0, 0};
  t.s2 = {1, 1};
  return HTFrame(std::move(t));
}

std::vector<StateSet> closed_subsets(const HTFrame& k, std::size_t cap) {
  const std::size_t n = k.size();
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    throw ResourceError("2^" + std::to_string(n) + " subsets exceed the cap of " +
                        std::to_string(cap));
  }
  std::vector<StateSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    StateSet x(bits);
    if (k.is_r_closed(x)) out.push_back(x);
  }
  std::stable_sort(out.begin(), out.end(), [](StateSet a, StateSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  });
  return out;
}

HTModel::HTModel(HTFrame frame, Valuation m) : frame_(std::move(frame)), m_(std::move(m)) {
  for (const auto& [var, set] : m_) {
    if (!is_identifier(var)) throw StructureError("invalid variable name '" + var + "'");
    if (!set.subset_of(frame_.all_states()))
      throw StructureError("valuation of '" + var + "' mentions unknown states");
  }
}

StateSet HTModel::value(const std::string& var) const {
  auto it = m_.find(var);
  return it == m_.end() ? StateSet{} : it->second;
}

AxiomReport check_model(const HTModel& m) {
  AxiomReport r;
  r.checked = {"her-at"};
  const HTFrame& k = m.frame();
  for (const auto& [var, set] : m.valuation())
    for (State w : set.members())
      for (State v : k.successors(w).members())
        if (!set.contains(v)) r.violations.push_back({"her-at", {w, v}, var});
  return r;
}

bool sat(const HTModel& m, State w, const Formula& f) {
  const HTFrame& k = m.frame();
  switch (f.kind()) {
    case Connective::Var: return m.value(f.name()).contains(w);
    case Connective::And: return sat(m, w, f.lhs()) && sat(m, w, f.rhs());
    case Connective::Or: return sat(m, w, f.lhs()) || sat(m, w, f.rhs());
    case Connective::Implies:
      for (State v : k.successors(w).members())
        if (sat(m, v, f.lhs()) && !sat(m, v, f.rhs())) return false;
      return true;
    case Connective::Not:
      for (State v : k.successors(w).members())
        if (sat(m, v, f.operand())) return false;
      return true;
    case Connective::S1: return sat(m, k.s1(w), f.operand());
    case Connective::S2: return sat(m, k.s2(w), f.operand());
  }
  return false;
}

StateSet truth_set(const HTModel& m, const Formula& f) {
  StateSet out;
  for (State w = 0; w < m.frame().size(); ++w)
    if (sat(m, w, f)) out.insert(w);
  return out;
}

Witness to_witness(const Valuation& m, std::optional<State> state) {
  std::map<std::string, std::vector<std::size_t>> val;
  for (const auto& [var, set] : m) val[var] = set.members();
  return Witness{std::nullopt, std::move(val), state};
}

Verdict model_truth(const HTModel& m, const Formula& f) {
  for (State w = 0; w < m.frame().size(); ++w) {
    if (!sat(m, w, f)) return Verdict{false, Witness{std::nullopt, std::nullopt, w}};
  }
  return Verdict{};
}

Verdict model_consequence(std::span<const Formula> gamma, const Formula& alpha,
                          const HTModel& m) {
  for (const auto& g : gamma)
    if (!model_truth(m, g)) return Verdict{};
  return model_truth(m, alpha);
}

void for_each_closed_valuation(const HTFrame& k, std::span<const std::string> vars,
                               std::size_t cap, const std::function<bool(const Valuation&)>& fn) {
  const auto sets = closed_subsets(k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > cap / sets.size())
      throw ResourceError("valuation count exceeds the cap of " + std::to_string(cap));
    total *= sets.size();
  }
  Valuation m;
  for (const auto& v : vars) m[v] = sets[0];
  std::vector<std::size_t> digits(vars.size(), 0);
  for (;;) {
    if (!fn(m)) return;
    std::size_t i = digits.size();
    while (i > 0) {
      if (++digits[i - 1] < sets.size()) {
        m[vars[i - 1]] = sets[digits[i - 1]];
        break;
      }
      digits[i - 1] = 0;
      m[vars[i - 1]] = sets[0];
      --i;
    }
    if (i == 0) return;
  }
}

Verdict frame_valid(const HTFrame& k, const Formula& f, std::size_t cap) {
  const auto vars = variables(f);
  Verdict verdict;
  for_each_closed_valuation(k, vars, cap, [&](const Valuation& m) {
    HTModel model(k, m);
    Verdict t = model_truth(model, f);
    if (t) return true;
    verdict.holds = false;
    verdict.witness = to_witness(m, t.witness->state);
    return false;
  });
  return verdict;
}

std::optional<std::vector<State>> frame_isomorphism(const HTFrame& a, const HTFrame& b,
                                                    std::size_t bound) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > bound)
    throw ResourceError("isomorphism search is limited to " + std::to_string(bound) + " states");
  const std::size_t n = a.size();
  std::vector<State> pi(n);
  std::iota(pi.begin(), pi.end(), State{0});
  do {
    bool ok = true;
    for (State w = 0; w < n && ok; ++w) {
      if (pi[a.s1(w)] != b.s1(pi[w]) || pi[a.s2(w)] != b.s2(pi[w])) ok = false;
      for (State v = 0; v < n && ok; ++v)
        if (a.related(w, v) != b.related(pi[w], pi[v])) ok = false;
    }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

std::vector<HTFrame> enumerate_frames(std::size_t max_states, bool mod_iso, std::size_t bound) {
  if (max_states > bound) {
    throw ResourceError("frame enumeration is limited to " + std::to_string(bound) +
                        " states; " + std::to_string(max_states) + " requested");
  }
  std::vector<HTFrame> out;
  for (std::size_t n = 1; n <= max_states; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
    const std::size_t first_of_size = out.size();

    // Total maps W -> W, as base-n digit strings.
    std::vector<std::vector<State>> maps;
    std::vector<State> f(n, 0);
    for (;;) {
      maps.push_back(f);
      std::size_t i = n;
      while (i > 0 && ++f[i - 1] == n) f[--i] = 0;
      if (i == 0) break;
    }

    for (std::uint64_t rbits = 0; rbits < (std::uint64_t{1} << (n * n)); ++rbits) {
      std::vector<std::pair<State, State>> r;
      for (State w = 0; w < n; ++w)
        for (State v = 0; v < n; ++v)
          if ((rbits >> (w * n + v)) & 1U) r.emplace_back(w, v);
      // Cheap preorder filter before trying maps.
      HTFrame shape(FrameTables{names, r, std::vector<State>(n, 0), std::vector<State>(n, 0)});
      bool preorder = true;
      for (State w = 0; w < n && preorder; ++w) {
        if (!shape.related(w, w)) preorder = false;
        for (State v : shape.successors(w).members())
          if (!shape.successors(v).subset_of(shape.successors(w))) preorder = false;
      }
      if (!preorder) continue;

      for (const auto& s1 : maps) {
        for (const auto& s2 : maps) {
          HTFrame k(FrameTables{names, r, s1, s2});
          if (!check_frame(k).passed()) continue;
          if (mod_iso) {
            bool seen = false;
            for (std::size_t i = first_of_size; i < out.size() && !seen; ++i)
              seen = frame_isomorphism(out[i], k, bound).has_value();
            if (seen) continue;
          }
          out.push_back(std::move(k));
        }
      }
    }
  }
  return out;
}

std::string render_valuation(const Valuation& m, const HTFrame& k) {
  std::string out;
  for (const auto& [var, set] : m) {
    if (!out.empty()) out += ", ";
    out += var + "=" + k.render(set);
  }
  return out;
}

}  // namespace htlogic
