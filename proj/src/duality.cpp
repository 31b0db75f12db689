#include "htlogic/duality.hpp"

#include <algorithm>
#include <numeric>

namespace htlogic {

RClosedFamily r_closed_sets(const HTFrame& k, std::size_t cap) {
  return RClosedFamily{k, closed_subsets(k, cap)};
}

StateSet closed_set_implication(const HTFrame& k, StateSet x, StateSet y) {
  StateSet outside_or_y = StateSet(k.all_states().bits() & ~x.bits()) | y;
  return y | (k.preimage(1, outside_or_y) & k.preimage(2, outside_or_y));
}

FiniteAlgebra complex_algebra(const HTFrame& k) {
  const auto sets = closed_subsets(k);
  const std::size_t n = sets.size();
  auto index_of = [&](StateSet x) -> Element {
    auto it = std::find(sets.begin(), sets.end(), x);
    if (it == sets.end()) throw StructureError("operation leaves the R-closed sets; is the frame valid?");
    return static_cast<Element>(it - sets.begin());
  };

  AlgebraTables t;
  for (StateSet x : sets) t.elements.push_back(k.render(x));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (sets[a].subset_of(sets[b])) t.le.emplace_back(a, b);
  t.bot = index_of(StateSet{});
  t.top = index_of(k.all_states());
  std::vector<Element> s1(n), s2(n), c(n), neg(n), imp(n * n);
  for (Element a = 0; a < n; ++a) {
    StateSet pre1 = k.preimage(1, sets[a]);
    s1[a] = index_of(pre1);
    s2[a] = index_of(k.preimage(2, sets[a]));
    c[a] = index_of(StateSet(k.all_states().bits() & ~pre1.bits()));
    for (Element b = 0; b < n; ++b) imp[a * n + b] = index_of(closed_set_implication(k, sets[a], sets[b]));
  }
  for (Element a = 0; a < n; ++a) neg[a] = imp[a * n + t.bot];
  t.s1 = std::move(s1);
  t.s2 = std::move(s2);
  t.c = std::move(c);
  t.imp = std::move(imp);
  t.neg = std::move(neg);
  return FiniteAlgebra(std::move(t));
}

bool PrimeFilter::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

bool is_prime_filter(const FiniteAlgebra& a, const std::vector<bool>& in) {
  if (in.size() != a.size() || in[a.bot()] || !in[a.top()]) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (in[x] && a.le(x, y) && !in[y]) return false;
      if (in[x] && in[y] && !in[a.meet(x, y)]) return false;
      if (in[a.join(x, y)] && !in[x] && !in[y]) return false;
    }
  }
  return true;
}

std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a, std::size_t cap) {
  const std::size_t n = a.size();
  if (n >= 63 || (std::size_t{1} << n) > cap)
    throw ResourceError("2^" + std::to_string(n) + " subsets exceed the cap of " + std::to_string(cap));
  std::vector<PrimeFilter> out;
  std::vector<bool> in(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (Element e = 0; e < n; ++e) in[e] = (bits >> e) & 1U;
    if (!is_prime_filter(a, in)) continue;
    PrimeFilter p;
    for (Element e = 0; e < n; ++e)
      if (in[e]) p.members.push_back(e);
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeFilter& x, const PrimeFilter& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

HTFrame canonical_frame(const FiniteAlgebra& a) {
  AxiomReport r = check_ht_algebra(a);
  if (!r.passed()) throw StructureError("canonical frame needs an HT-algebra; " + r.violations.front().axiom + " fails");
  const auto filters = prime_filters(a);
  if (filters.size() > kMaxStates) throw ResourceError("too many prime filters for a frame");

  FrameTables t;
  for (const auto& p : filters) {
    std::string name = "{";
    for (std::size_t i = 0; i < p.members.size(); ++i) name += (i ? "," : "") + a.name(p.members[i]);
    t.states.push_back(name + "}");
  }
  for (State w = 0; w < filters.size(); ++w)
    for (State v = 0; v < filters.size(); ++v)
      if (std::includes(filters[v].members.begin(), filters[v].members.end(),
                        filters[w].members.begin(), filters[w].members.end()))
        t.r.emplace_back(w, v);
  for (int i : {1, 2}) {
    std::vector<State> map(filters.size());
    for (State w = 0; w < filters.size(); ++w) {
      PrimeFilter image;
      for (Element x = 0; x < a.size(); ++x)
        if (filters[w].contains(a.s(i, x))) image.members.push_back(x);
      auto it = std::find(filters.begin(), filters.end(), image);
      if (it == filters.end()) throw StructureError("s_i(P) is not a prime filter");
      map[w] = static_cast<State>(it - filters.begin());
    }
    (i == 1 ? t.s1 : t.s2) = std::move(map);
  }
  return HTFrame(std::move(t));
}

std::pair<FiniteAlgebra, Assignment> model_to_algebraic(const HTModel& m) {
  const HTFrame& k = m.frame();
  FiniteAlgebra algebra = complex_algebra(k);
  const auto sets = closed_subsets(k);
  Assignment v;
  for (const auto& [var, set] : m.valuation()) {
    auto it = std::find(sets.begin(), sets.end(), set);
    if (it == sets.end()) throw StructureError("valuation of '" + var + "' is not R-closed");
    v[var] = static_cast<Element>(it - sets.begin());
  }
  return {std::move(algebra), std::move(v)};
}

HTModel algebraic_to_model(const FiniteAlgebra& a, const Assignment& v) {
  HTFrame k = canonical_frame(a);
  const auto filters = prime_filters(a);
  Valuation m;
  for (const auto& [var, e] : v) {
    StateSet set;
    for (State w = 0; w < filters.size(); ++w)
      if (filters[w].contains(e)) set.insert(w);
    m[var] = set;
  }
  return HTModel(std::move(k), std::move(m));
}

std::optional<std::vector<Element>> check_isomorphic(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b,
                                                     std::size_t bound) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > bound)
    throw ResourceError("isomorphism search is limited to carriers of " + std::to_string(bound) +
                        " elements");
  if (a.has_c() != b.has_c() || a.has_imp() != b.has_imp() || a.has_neg() != b.has_neg())
    return std::nullopt;
  const std::size_t n = a.size();
  std::vector<Element> pi(n);
  std::iota(pi.begin(), pi.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = pi[a.s1(x)] == b.s1(pi[x]) && pi[a.s2(x)] == b.s2(pi[x]);
      if (ok && a.has_c()) ok = pi[a.c(x)] == b.c(pi[x]);
      if (ok && a.has_neg()) ok = pi[a.neg(x)] == b.neg(pi[x]);
      for (Element y = 0; y < n && ok; ++y) {
        ok = a.le(x, y) == b.le(pi[x], pi[y]);
        if (ok && a.has_imp()) ok = pi[a.imp(x, y)] == b.imp(pi[x], pi[y]);
      }
    }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

}  // namespace htlogic
