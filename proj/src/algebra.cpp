#include "htlogic/algebra.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace htlogic {

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

void check_unary_table(const std::vector<Element>& t, std::size_t n, const char* what) {
  if (t.size() != n) throw StructureError(std::string(what) + " table is not total on the carrier");
  for (Element e : t)
    if (e >= n) throw StructureError(std::string(what) + " table maps outside the carrier");
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(AlgebraTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.elements.size();
  if (n == 0) throw StructureError("carrier is empty");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t_.elements[i] == t_.elements[j])
        throw StructureError("duplicate element name '" + t_.elements[i] + "'");
  if (t_.bot >= n || t_.top >= n) throw StructureError("bot/top outside the carrier");

  order_.assign(n * n, false);
  for (auto [a, b] : t_.le) {
    if (a >= n || b >= n) throw StructureError("order relation mentions an unknown element");
    order_[a * n + b] = true;
  }
  for (Element a = 0; a < n; ++a) {
    if (!le(a, a)) throw StructureError("order is not reflexive at '" + name(a) + "'");
    if (!le(t_.bot, a)) throw StructureError("bot is not below '" + name(a) + "'");
    if (!le(a, t_.top)) throw StructureError("top is not above '" + name(a) + "'");
    for (Element b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw StructureError("order is not antisymmetric on '" + name(a) + "', '" + name(b) + "'");
      for (Element c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw StructureError("order is not transitive on '" + name(a) + "', '" + name(b) +
                               "', '" + name(c) + "'");
    }
  }

  // Meets and joins: the greatest lower / least upper bound, if one exists.
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> glb, lub;
      for (Element x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b)) {
          bool greatest = true;
          for (Element y = 0; y < n && greatest; ++y)
            if (le(y, a) && le(y, b) && !le(y, x)) greatest = false;
          if (greatest) glb = x;
        }
        if (le(a, x) && le(b, x)) {
          bool least = true;
          for (Element y = 0; y < n && least; ++y)
            if (le(a, y) && le(b, y) && !le(x, y)) least = false;
          if (least) lub = x;
        }
      }
      if (!glb) throw StructureError("no meet of '" + name(a) + "' and '" + name(b) + "'");
      if (!lub) throw StructureError("no join of '" + name(a) + "' and '" + name(b) + "'");
      meet_[a * n + b] = *glb;
      join_[a * n + b] = *lub;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          throw StructureError("lattice is not distributive at '" + name(a) + "', '" + name(b) +
                               "', '" + name(c) + "'");

  check_unary_table(t_.s1, n, "s1");
  check_unary_table(t_.s2, n, "s2");
  if (t_.c) check_unary_table(*t_.c, n, "c");
  if (t_.neg) check_unary_table(*t_.neg, n, "neg");
  if (t_.imp) {
    if (t_.imp->size() != n * n) throw StructureError("imp table is not total on the carrier");
    for (Element e : *t_.imp)
      if (e >= n) throw StructureError("imp table maps outside the carrier");
  }
}

std::optional<Element> FiniteAlgebra::find(std::string_view name) const {
  for (Element e = 0; e < size(); ++e)
    if (t_.elements[e] == name) return e;
  return std::nullopt;
}

Element FiniteAlgebra::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw StructureError("unknown element '" + std::string(name) + "'; carrier is {" +
                       join_names(t_.elements) + "}");
}

FiniteAlgebra FiniteAlgebra::with_c(std::vector<Element> c) const {
  AlgebraTables t = t_;
  t.c = std::move(c);
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra FiniteAlgebra::with_implication(std::vector<Element> imp,
                                              std::vector<Element> neg) const {
  AlgebraTables t = t_;
  t.imp = std::move(imp);
  t.neg = std::move(neg);
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra FiniteAlgebra::without_c() const {
  AlgebraTables t = t_;
  t.c.reset();
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra FiniteAlgebra::without_implication() const {
  AlgebraTables t = t_;
  t.imp.reset();
  t.neg.reset();
  return FiniteAlgebra(std::move(t));
}

// bot < mid < top stands for the increasing subsets {} < {t2} < {t1, t2} of
// the two-agent chain t1 <= t2; S_t X is everything when t is in X, else {}.
FiniteAlgebra make_bt() {
  constexpr Element bot = 0, mid = 1, top = 2;
  AlgebraTables t;
  t.elements = {"bot", "mid", "top"};
  t.le = {{bot, bot}, {bot, mid}, {bot, top}, {mid, mid}, {mid, top}, {top, top}};
  t.bot = bot;
  t.top = top;
  t.s1 = {bot, bot, top};
  t.s2 = {bot, top, top};
  t.c = std::vector<Element>{top, top, bot};
  t.imp = std::vector<Element>{
      top, top, top,  // bot => x
      bot, top, top,  // mid => x
      bot, mid, top,  // top => x
  };
  t.neg = std::vector<Element>{top, bot, bot};
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra make_b() {
  AlgebraTables t;
  t.elements = {"bot", "top"};
  t.le = {{0, 0}, {0, 1}, {1, 1}};
  t.bot = 0;
  t.top = 1;
  t.s1 = {0, 1};
  t.s2 = {0, 1};
  t.c = std::vector<Element>{1, 0};
  t.imp = std::vector<Element>{1, 1, 0, 1};
  t.neg = std::vector<Element>{1, 0};
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto idx = [nb](Element x, Element y) { return x * nb + y; };
  AlgebraTables t;
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) t.elements.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (a.le(u / nb, v / nb) && b.le(u % nb, v % nb)) t.le.emplace_back(u, v);
  t.bot = idx(a.bot(), b.bot());
  t.top = idx(a.top(), b.top());
  auto lift = [&](auto fa, auto fb) {
    std::vector<Element> out(n);
    for (Element u = 0; u < n; ++u) out[u] = idx(fa(u / nb), fb(u % nb));
    return out;
  };
  t.s1 = lift([&](Element x) { return a.s1(x); }, [&](Element y) { return b.s1(y); });
  t.s2 = lift([&](Element x) { return a.s2(x); }, [&](Element y) { return b.s2(y); });
  if (a.has_c() && b.has_c())
    t.c = lift([&](Element x) { return a.c(x); }, [&](Element y) { return b.c(y); });
  if (a.has_neg() && b.has_neg())
    t.neg = lift([&](Element x) { return a.neg(x); }, [&](Element y) { return b.neg(y); });
  if (a.has_imp() && b.has_imp()) {
    std::vector<Element> imp(n * n);
    for (Element u = 0; u < n; ++u)
      for (Element v = 0; v < n; ++v)
        imp[u * n + v] = idx(a.imp(u / nb, v / nb), b.imp(u % nb, v % nb));
    t.imp = std::move(imp);
  }
  return FiniteAlgebra(std::move(t));
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

using Tuple = std::span<const Element>;

struct AxiomDef {
  const char* label;
  int arity;
  bool (*holds)(const FiniteAlgebra&, Tuple);
};

// C, falling back to ~S1 when only a negation is present.
Element c_of(const FiniteAlgebra& a, Element x) { return a.has_c() ? a.c(x) : a.neg(a.s1(x)); }

bool complemented(const FiniteAlgebra& a, Element x) {
  for (Element y = 0; y < a.size(); ++y)
    if (a.meet(x, y) == a.bot() && a.join(x, y) == a.top()) return true;
  return false;
}

bool perceived_equal(const FiniteAlgebra& a, Element x, Element y) {
  return a.s1(x) == a.s1(y) && a.s2(x) == a.s2(y);
}

bool preserves_lattice(const FiniteAlgebra& a, Tuple t) {
  for (int i : {1, 2}) {
    if (a.s(i, a.meet(t[0], t[1])) != a.meet(a.s(i, t[0]), a.s(i, t[1]))) return false;
    if (a.s(i, a.join(t[0], t[1])) != a.join(a.s(i, t[0]), a.s(i, t[1]))) return false;
  }
  return true;
}

bool absorbs_perception(const FiniteAlgebra& a, Tuple t) {
  for (int i : {1, 2})
    for (int j : {1, 2})
      if (a.s(i, a.s(j, t[0])) != a.s(j, t[0])) return false;
  return true;
}

const std::array<AxiomDef, 28> kAxioms{{
    // T-structure
    {"T1", 3,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.le(a.bot(), t[0]) && a.le(t[0], a.top()) &&
              a.meet(t[0], a.join(t[1], t[2])) ==
                  a.join(a.meet(t[0], t[1]), a.meet(t[0], t[2]));
     }},
    {"T2", 2, preserves_lattice},
    {"T3", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.meet(a.s1(t[0]), a.c(t[0])) == a.bot() &&
              a.join(a.s1(t[0]), a.c(t[0])) == a.top();
     }},
    {"T4", 1, absorbs_perception},
    {"T5", 0,
     [](const FiniteAlgebra& a, Tuple) {
       return a.s1(a.bot()) == a.bot() && a.s1(a.top()) == a.top();
     }},
    {"T6", 2,
     [](const FiniteAlgebra& a, Tuple t) { return !perceived_equal(a, t[0], t[1]) || t[0] == t[1]; }},
    {"T7", 1, [](const FiniteAlgebra& a, Tuple t) { return a.le(a.s1(t[0]), a.s2(t[0])); }},
    // HT-algebra
    {"HT1-residuation", 3,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.le(a.meet(t[0], t[2]), t[1]) == a.le(t[2], a.imp(t[0], t[1]));
     }},
    {"HT1-negation", 1,
     [](const FiniteAlgebra& a, Tuple t) { return a.neg(t[0]) == a.imp(t[0], a.bot()); }},
    {"HT2", 2, preserves_lattice},
    {"HT3", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.s2(a.imp(t[0], t[1])) == a.imp(a.s2(t[0]), a.s2(t[1]));
     }},
    {"HT4", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.s1(a.imp(t[0], t[1])) ==
              a.meet(a.imp(a.s1(t[0]), a.s1(t[1])), a.imp(a.s2(t[0]), a.s2(t[1])));
     }},
    {"HT5", 1, absorbs_perception},
    {"HT6", 1, [](const FiniteAlgebra& a, Tuple t) { return a.join(a.s1(t[0]), t[0]) == t[0]; }},
    {"HT7", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.join(a.s1(t[0]), a.neg(a.s1(t[0]))) == a.top();
     }},
    // Derived properties
    {"T8", 0,
     [](const FiniteAlgebra& a, Tuple) {
       return a.s2(a.bot()) == a.bot() && a.s2(a.top()) == a.top();
     }},
    {"T9", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       bool images = a.le(a.s1(t[0]), a.s1(t[1])) && a.le(a.s2(t[0]), a.s2(t[1]));
       return a.le(t[0], t[1]) == images;
     }},
    {"T10", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       return a.le(a.s1(t[0]), t[0]) && a.le(t[0], a.s2(t[0]));
     }},
    {"T11", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       for (int i : {1, 2}) {
         Element si = a.s(i, t[0]);
         if (a.meet(si, c_of(a, si)) != a.bot() || a.join(si, c_of(a, si)) != a.top())
           return false;
       }
       return true;
     }},
    {"T11-C", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       Element s1 = a.s1(t[0]);
       return a.meet(s1, c_of(a, t[0])) == a.bot() && a.join(s1, c_of(a, t[0])) == a.top();
     }},
    {"fixpoints=complemented", 1,
     [](const FiniteAlgebra& a, Tuple t) {
       bool comp = complemented(a, t[0]);
       return comp == (a.s1(t[0]) == t[0]) && comp == (a.s2(t[0]) == t[0]);
     }},
    {"C=~S1", 1, [](const FiniteAlgebra& a, Tuple t) { return a.c(t[0]) == a.neg(a.s1(t[0])); }},
    {"IvoThomas", 3,
     [](const FiniteAlgebra& a, Tuple t) {
       auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
       Element lhs = a.imp(a.imp(x, z), y);
       Element rhs = a.imp(a.imp(a.imp(y, x), y), y);
       return a.imp(lhs, rhs) == a.top();
     }},
    // Perception congruence a ~ b iff S1 a = S1 b and S2 a = S2 b
    {"cong-meet", 3,
     [](const FiniteAlgebra& a, Tuple t) {
       return !perceived_equal(a, t[0], t[1]) ||
              perceived_equal(a, a.meet(t[0], t[2]), a.meet(t[1], t[2]));
     }},
    {"cong-join", 3,
     [](const FiniteAlgebra& a, Tuple t) {
       return !perceived_equal(a, t[0], t[1]) ||
              perceived_equal(a, a.join(t[0], t[2]), a.join(t[1], t[2]));
     }},
    {"cong-C", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       return !perceived_equal(a, t[0], t[1]) || perceived_equal(a, a.c(t[0]), a.c(t[1]));
     }},
    {"cong-S1", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       return !perceived_equal(a, t[0], t[1]) || perceived_equal(a, a.s1(t[0]), a.s1(t[1]));
     }},
    {"cong-S2", 2,
     [](const FiniteAlgebra& a, Tuple t) {
       return !perceived_equal(a, t[0], t[1]) || perceived_equal(a, a.s2(t[0]), a.s2(t[1]));
     }},
}};

const AxiomDef& axiom(std::string_view label) {
  for (const auto& def : kAxioms)
    if (label == def.label) return def;
  throw StructureError("unknown axiom '" + std::string(label) + "'");
}

// Exhaustive check of each axiom over all tuples, lexicographic with the last
// component varying fastest.
AxiomReport run_axioms(const FiniteAlgebra& a, std::initializer_list<std::string_view> labels) {
  AxiomReport report;
  const std::size_t n = a.size();
  for (auto label : labels) {
    const AxiomDef& def = axiom(label);
    report.checked.emplace_back(def.label);
    std::vector<Element> tuple(static_cast<std::size_t>(def.arity), 0);
    for (;;) {
      if (!def.holds(a, tuple)) report.violations.push_back({def.label, tuple, {}});
      std::size_t k = tuple.size();
      while (k > 0 && ++tuple[k - 1] == n) tuple[--k] = 0;
      if (k == 0) break;
    }
  }
  return report;
}

void require(bool ok, const char* what) {
  if (!ok) throw StructureError(what);
}

std::string summarize(const AxiomReport& r, const FiniteAlgebra& a) {
  std::ostringstream out;
  const auto& v = r.violations.front();
  out << v.axiom << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? ", " : "") << a.name(v.witness[i]);
  out << ")";
  return out.str();
}

}  // namespace

bool AxiomReport::violates(std::string_view label) const { return first(label) != nullptr; }

const Violation* AxiomReport::first(std::string_view label) const {
  for (const auto& v : violations)
    if (v.axiom == label) return &v;
  return nullptr;
}

AxiomReport check_t_structure(const FiniteAlgebra& a) {
  require(a.has_c(), "T-structure check needs a C table");
  return run_axioms(a, {"T1", "T2", "T3", "T4", "T5", "T6", "T7"});
}

AxiomReport check_ht_algebra(const FiniteAlgebra& a) {
  require(a.has_imp() && a.has_neg(), "HT-algebra check needs imp and neg tables");
  return run_axioms(a, {"HT1-residuation", "HT1-negation", "HT2", "HT3", "HT4", "HT5", "HT6",
                        "HT7"});
}

AxiomReport check_derived_properties(const FiniteAlgebra& a) {
  require(a.has_c() || a.has_neg(), "derived properties need a C or a neg table");
  AxiomReport r = run_axioms(a, {"T8", "T9", "T10", "T11", "T11-C", "fixpoints=complemented"});
  auto append = [&r](AxiomReport more) {
    r.checked.insert(r.checked.end(), more.checked.begin(), more.checked.end());
    r.violations.insert(r.violations.end(), more.violations.begin(), more.violations.end());
  };
  if (a.has_c() && a.has_neg()) append(run_axioms(a, {"C=~S1"}));
  if (a.has_imp()) append(run_axioms(a, {"IvoThomas"}));
  return r;
}

bool axiom_holds_at(const FiniteAlgebra& a, const Violation& v) {
  const AxiomDef& def = axiom(v.axiom);
  if (v.witness.size() != static_cast<std::size_t>(def.arity))
    throw StructureError("witness arity does not match axiom '" + v.axiom + "'");
  for (auto e : v.witness)
    if (e >= a.size()) throw StructureError("witness outside the carrier");
  return def.holds(a, v.witness);
}

FiniteAlgebra derive_implication(const FiniteAlgebra& t) {
  AxiomReport r = check_t_structure(t);
  if (!r.passed()) throw StructureError("not a T-structure: " + summarize(r, t));
  const std::size_t n = t.size();
  std::vector<Element> imp(n * n), neg(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element k1 = t.join(t.c(t.s1(a)), t.s1(b));
      Element k2 = t.join(t.c(t.s2(a)), t.s2(b));
      imp[a * n + b] = t.join(b, t.meet(k1, k2));
    }
  }
  for (Element a = 0; a < n; ++a) neg[a] = imp[a * n + t.bot()];
  return t.with_implication(std::move(imp), std::move(neg));
}

FiniteAlgebra derive_c(const FiniteAlgebra& h) {
  AxiomReport r = check_ht_algebra(h);
  if (!r.passed()) throw StructureError("not an HT-algebra: " + summarize(r, h));
  std::vector<Element> c(h.size());
  for (Element a = 0; a < h.size(); ++a) c[a] = h.neg(h.s1(a));
  return h.with_c(std::move(c));
}

std::vector<Element> complemented_elements(const FiniteAlgebra& a) {
  std::vector<Element> out;
  for (Element x = 0; x < a.size(); ++x)
    if (complemented(a, x)) out.push_back(x);
  return out;
}

CongruenceReport check_perception_congruence(const FiniteAlgebra& a) {
  require(a.has_c(), "congruence check needs a C table");
  AxiomReport pre = run_axioms(a, {"T1", "T2", "T3", "T4", "T5", "T7"});
  if (!pre.passed()) throw StructureError("congruence check precondition: " + summarize(pre, a));

  CongruenceReport out;
  out.compatibility = run_axioms(a, {"cong-meet", "cong-join", "cong-C", "cong-S1", "cong-S2"});
  std::vector<bool> placed(a.size(), false);
  for (Element x = 0; x < a.size(); ++x) {
    if (placed[x]) continue;
    std::vector<Element> cls;
    for (Element y = x; y < a.size(); ++y) {
      if (!placed[y] && perceived_equal(a, x, y)) {
        cls.push_back(y);
        placed[y] = true;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  out.identity = out.classes.size() == a.size();
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Element eval(const Formula& f, const Assignment& v, const FiniteAlgebra& a) {
  switch (f.kind()) {
    case Connective::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw StructureError("variable '" + f.name() + "' is not assigned");
      if (it->second >= a.size())
        throw StructureError("variable '" + f.name() + "' is assigned outside the carrier");
      return it->second;
    }
    case Connective::And: return a.meet(eval(f.lhs(), v, a), eval(f.rhs(), v, a));
    case Connective::Or: return a.join(eval(f.lhs(), v, a), eval(f.rhs(), v, a));
    case Connective::Implies:
      require(a.has_imp(), "algebra has no implication table");
      return a.imp(eval(f.lhs(), v, a), eval(f.rhs(), v, a));
    case Connective::Not:
      require(a.has_neg(), "algebra has no negation table");
      return a.neg(eval(f.operand(), v, a));
    case Connective::S1: return a.s1(eval(f.operand(), v, a));
    case Connective::S2: return a.s2(eval(f.operand(), v, a));
  }
  return a.bot();
}

void for_each_assignment(const FiniteAlgebra& a, std::span<const std::string> vars,
                         std::size_t cap, const std::function<bool(const Assignment&)>& fn) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > cap / a.size()) {
      throw ResourceError(std::to_string(a.size()) + "^" + std::to_string(vars.size()) +
                          " assignments exceed the cap of " + std::to_string(cap));
    }
    total *= a.size();
  }
  if (total > cap)
    throw ResourceError("assignment count exceeds the cap of " + std::to_string(cap));

  Assignment v;
  for (const auto& name : vars) v[name] = 0;
  std::vector<Element> digits(vars.size(), 0);
  for (;;) {
    if (!fn(v)) return;
    std::size_t k = digits.size();
    while (k > 0) {
      if (++digits[k - 1] < a.size()) {
        v[vars[k - 1]] = digits[k - 1];
        break;
      }
      digits[k - 1] = 0;
      v[vars[k - 1]] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

Verdict algebra_consequence(std::span<const Formula> gamma, const Formula& alpha,
                            const FiniteAlgebra& a, std::size_t cap) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(alpha);
  const auto vars = variables(all);
  Verdict verdict;
  for_each_assignment(a, vars, cap, [&](const Assignment& v) {
    for (const auto& g : gamma)
      if (eval(g, v, a) != a.top()) return true;
    if (eval(alpha, v, a) == a.top()) return true;
    verdict.holds = false;
    verdict.witness = Witness{v, std::nullopt, std::nullopt};
    return false;
  });
  return verdict;
}

std::string render_assignment(const Assignment& v, const FiniteAlgebra& a) {
  std::string out;
  for (const auto& [name, e] : v) {
    if (!out.empty()) out += ", ";
    out += name + "=" + a.name(e);
  }
  return out;
}

Assignment parse_assignment(std::string_view text, const FiniteAlgebra& a) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  Assignment v;
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw StructureError("assignment item '" + std::string(item) + "' lacks '='");
    std::string var(trim(item.substr(0, eq)));
    if (!is_identifier(var)) throw StructureError("invalid variable name '" + var + "'");
    if (v.count(var)) throw StructureError("variable '" + var + "' assigned twice");
    v[var] = a.element(trim(item.substr(eq + 1)));
  }
  return v;
}

}  // namespace htlogic
