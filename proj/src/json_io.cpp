#include "htlogic/json_io.hpp"

#include <fstream>
#include <set>

namespace htlogic {

namespace {

void only_fields(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw SchemaError(std::string("unknown field '") + key + "' in " + what);
}

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(what) + " lacks required field '" + key + "'");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

template <typename Lookup>
std::vector<std::pair<std::size_t, std::size_t>> as_pairs(const Json& j, const char* what,
                                                          Lookup lookup) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw SchemaError(std::string(what) + " entries must be pairs");
    out.emplace_back(lookup(as_string(p[0], what)), lookup(as_string(p[1], what)));
  }
  return out;
}

template <typename Lookup>
std::vector<std::size_t> as_map(const Json& j, std::size_t n, const char* what, Lookup lookup) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object");
  std::vector<std::size_t> out(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : j.items()) {
    std::size_t from = lookup(key);
    out[from] = lookup(as_string(value, what));
    seen[from] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw SchemaError(std::string(what) + " is not total");
  return out;
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& a) {
  Json j;
  j["elements"] = a.names();
  Json le = Json::array();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.le(x, y)) le.push_back({a.name(x), a.name(y)});
  j["le"] = le;
  j["bot"] = a.name(a.bot());
  j["top"] = a.name(a.top());
  auto unary = [&a](auto op) {
    Json m = Json::object();
    for (Element x = 0; x < a.size(); ++x) m[a.name(x)] = a.name(op(x));
    return m;
  };
  j["s1"] = unary([&](Element x) { return a.s1(x); });
  j["s2"] = unary([&](Element x) { return a.s2(x); });
  if (a.has_c()) j["c"] = unary([&](Element x) { return a.c(x); });
  if (a.has_imp()) {
    Json imp = Json::object();
    for (Element x = 0; x < a.size(); ++x) imp[a.name(x)] = unary([&](Element y) { return a.imp(x, y); });
    j["imp"] = imp;
  }
  if (a.has_neg()) j["neg"] = unary([&](Element x) { return a.neg(x); });
  return j;
}

FiniteAlgebra algebra_from_json(const Json& j) {
  only_fields(j, {"elements", "le", "bot", "top", "s1", "s2", "c", "imp", "neg"}, "algebra");
  AlgebraTables t;
  t.elements = as_string_list(field(j, "elements", "algebra"), "elements");
  const std::size_t n = t.elements.size();
  auto lookup = [&t](const std::string& name) -> Element {
    for (Element e = 0; e < t.elements.size(); ++e)
      if (t.elements[e] == name) return e;
    throw SchemaError("unknown element '" + name + "'");
  };
  t.le = as_pairs(field(j, "le", "algebra"), "le", lookup);
  t.bot = lookup(as_string(field(j, "bot", "algebra"), "bot"));
  t.top = lookup(as_string(field(j, "top", "algebra"), "top"));
  t.s1 = as_map(field(j, "s1", "algebra"), n, "s1", lookup);
  t.s2 = as_map(field(j, "s2", "algebra"), n, "s2", lookup);
  if (j.contains("c")) t.c = as_map(j["c"], n, "c", lookup);
  if (j.contains("neg")) t.neg = as_map(j["neg"], n, "neg", lookup);
  if (j.contains("imp")) {
    const Json& imp = j["imp"];
    if (!imp.is_object()) throw SchemaError("imp must be an object of objects");
    std::vector<Element> table(n * n, 0);
    std::vector<bool> seen(n, false);
    for (const auto& [key, row] : imp.items()) {
      Element a = lookup(key);
      auto values = as_map(row, n, "imp row", lookup);
      for (Element b = 0; b < n; ++b) table[a * n + b] = values[b];
      seen[a] = true;
    }
    for (Element a = 0; a < n; ++a)
      if (!seen[a]) throw SchemaError("imp is not total");
    t.imp = std::move(table);
  }
  return FiniteAlgebra(std::move(t));
}

Json frame_to_json(const HTFrame& k) {
  Json j;
  j["states"] = k.names();
  Json r = Json::array();
  for (State w = 0; w < k.size(); ++w)
    for (State v : k.successors(w).members()) r.push_back({k.name(w), k.name(v)});
  j["R"] = r;
  Json s1 = Json::object(), s2 = Json::object();
  for (State w = 0; w < k.size(); ++w) {
    s1[k.name(w)] = k.name(k.s1(w));
    s2[k.name(w)] = k.name(k.s2(w));
  }
  j["s1"] = s1;
  j["s2"] = s2;
  return j;
}

HTFrame frame_from_json(const Json& j) {
  only_fields(j, {"states", "R", "s1", "s2"}, "frame");
  FrameTables t;
  t.states = as_string_list(field(j, "states", "frame"), "states");
  auto lookup = [&t](const std::string& name) -> State {
    for (State w = 0; w < t.states.size(); ++w)
      if (t.states[w] == name) return w;
    throw StructureError("unknown state '" + name + "'");
  };
  t.r = as_pairs(field(j, "R", "frame"), "R", lookup);
  t.s1 = as_map(field(j, "s1", "frame"), t.states.size(), "s1", lookup);
  t.s2 = as_map(field(j, "s2", "frame"), t.states.size(), "s2", lookup);
  return HTFrame(std::move(t));
}

Json valuation_to_json(const Valuation& m, const HTFrame& k) {
  Json out = Json::object();
  for (const auto& [var, set] : m) {
    Json states = Json::array();
    for (State w : set.members()) states.push_back(k.name(w));
    out[var] = states;
  }
  return out;
}

Json model_to_json(const HTModel& m) {
  Json j;
  j["frame"] = frame_to_json(m.frame());
  j["m"] = valuation_to_json(m.valuation(), m.frame());
  return j;
}

HTModel model_from_json(const Json& j, const FrameLoader& load_frame) {
  only_fields(j, {"frame", "m"}, "model");
  const Json& fj = field(j, "frame", "model");
  HTFrame frame = [&] {
    if (fj.is_string()) {
      if (!load_frame) throw SchemaError("model refers to a frame file but no loader is available");
      return load_frame(fj.get<std::string>());
    }
    return frame_from_json(fj);
  }();
  Valuation m;
  const Json& mj = j.contains("m") ? j["m"] : Json::object();
  if (!mj.is_object()) throw SchemaError("m must be an object");
  for (const auto& [var, states] : mj.items()) {
    StateSet set;
    for (const auto& name : as_string_list(states, "valuation"))
      set.insert(frame.state(name));
    m[var] = set;
  }
  return HTModel(std::move(frame), std::move(m));
}

Json assignment_to_json(const Assignment& v, const FiniteAlgebra& a) {
  Json out = Json::object();
  for (const auto& [var, e] : v) out[var] = a.name(e);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace htlogic
