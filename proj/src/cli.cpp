#include "htlogic/cli.hpp"

#include <filesystem>
#include <ostream>

#include "CLI11.hpp"

#include "htlogic/decide.hpp"
#include "htlogic/duality.hpp"
#include "htlogic/json_io.hpp"

namespace htlogic::cli {

namespace {

struct Config {
  std::string format = "text";
  std::size_t max_vars = kDefaultMaxVars;
  std::size_t max_frame_size = kDefaultMaxFrameStates;
  bool close = false;
  bool mod_iso = false;

  bool json() const { return format == "json"; }
};

FiniteAlgebra load_algebra(const std::string& spec) {
  if (spec == "bt") return make_bt();
  if (spec == "b") return make_b();
  return algebra_from_json(read_json_file(spec));
}

HTFrame load_frame(const std::string& spec, bool close) {
  HTFrame k = spec == "k0" ? make_k0() : frame_from_json(read_json_file(spec));
  return close ? k.closed() : k;
}

HTModel load_model(const std::string& path, bool close) {
  const auto base = std::filesystem::path(path).parent_path();
  HTModel m = model_from_json(read_json_file(path), [&](const std::string& ref) {
    auto p = std::filesystem::path(ref);
    return load_frame((p.is_relative() ? base / p : p).string(), false);
  });
  return close ? HTModel(m.frame().closed(), m.valuation()) : m;
}

template <typename NameOf>
Json report_to_json(const AxiomReport& r, NameOf name_of) {
  Json j;
  j["passed"] = r.passed();
  j["checked"] = r.checked;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json w = Json::array();
    for (auto e : v.witness) w.push_back(name_of(e));
    Json item{{"axiom", v.axiom}, {"witness", w}};
    if (!v.note.empty()) item["note"] = v.note;
    vs.push_back(item);
  }
  j["violations"] = vs;
  return j;
}

template <typename NameOf>
void print_report(std::ostream& out, const std::string& title, const AxiomReport& r,
                  NameOf name_of) {
  if (r.passed()) {
    out << title << ": passed (" << r.checked.size() << " conditions)\n";
    return;
  }
  out << title << ": " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) {
    out << "  " << v.axiom;
    if (!v.note.empty()) out << " [" << v.note << "]";
    out << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? ", " : "") << name_of(v.witness[i]);
    out << ")\n";
  }
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse_formula(t));
  return out;
}

int cmd_decide(const Config& cfg, const std::string& text, const std::vector<std::string>& assume,
               std::ostream& out) {
  const auto gamma = parse_all(assume);
  const Formula alpha = parse_formula(text);
  DecisionResult d = decide_consequence(gamma, alpha, cfg.max_vars);
  const FiniteAlgebra bt = make_bt();
  const char* positive = gamma.empty() ? "valid" : "holds";
  if (cfg.json()) {
    Json j;
    j["verdict"] = d.holds ? positive : "refuted";
    Json g = Json::array();
    for (const auto& f : gamma) g.push_back(render_formula(f));
    j["gamma"] = g;
    j["alpha"] = render_formula(alpha);
    if (!d.holds) {
      j["counter_assignment"] = assignment_to_json(*d.counter_assignment, bt);
      j["countermodel"] = model_to_json(*d.countermodel);
      j["failing_state"] = d.countermodel->frame().name(*d.failing_state);
    }
    out << j.dump(2) << '\n';
  } else if (d.holds) {
    out << positive << '\n';
  } else {
    out << "refuted\n";
    out << "counter-assignment: " << render_assignment(*d.counter_assignment, bt) << '\n';
    out << "countermodel on K0 (fails at " << d.countermodel->frame().name(*d.failing_state)
        << "):\n"
        << model_to_json(*d.countermodel).dump(2) << '\n';
  }
  return d.holds ? kHolds : kRefuted;
}

int cmd_check_algebra(const Config& cfg, const std::string& path, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(path);
  auto name_of = [&a](std::size_t e) { return a.name(e); };
  std::vector<std::pair<std::string, AxiomReport>> reports;
  if (a.has_c()) reports.emplace_back("t_structure", check_t_structure(a));
  if (a.has_imp() && a.has_neg()) reports.emplace_back("ht_algebra", check_ht_algebra(a));
  if (reports.empty())
    throw StructureError("algebra has neither a C table nor imp/neg tables; nothing to check");
  reports.emplace_back("derived", check_derived_properties(a));

  std::optional<CongruenceReport> cong;
  if (a.has_c()) {
    try {
      cong = check_perception_congruence(a);
    } catch (const StructureError&) {
      // Precondition unmet; the structure report already says why.
    }
  }
  const auto comp = complemented_elements(a);

  bool passed = true;
  for (const auto& [key, r] : reports) passed = passed && r.passed();

  if (cfg.json()) {
    Json j;
    for (const auto& [key, r] : reports) j[key] = report_to_json(r, name_of);
    Json c = Json::array();
    for (Element e : comp) c.push_back(a.name(e));
    j["complemented"] = c;
    if (cong) {
      Json classes = Json::array();
      for (const auto& cls : cong->classes) {
        Json names = Json::array();
        for (Element e : cls) names.push_back(a.name(e));
        classes.push_back(names);
      }
      j["congruence"] = {{"compatible", cong->is_congruence()},
                         {"identity", cong->identity},
                         {"classes", classes}};
    }
    j["passed"] = passed;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [key, r] : reports) print_report(out, key, r, name_of);
    out << "complemented:";
    for (Element e : comp) out << ' ' << a.name(e);
    out << '\n';
    if (cong) {
      out << "congruence: " << (cong->is_congruence() ? "compatible" : "not compatible") << ", "
          << (cong->identity ? "identity" : "not identity") << ", classes";
      for (const auto& cls : cong->classes) {
        out << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << a.name(cls[i]);
        out << '}';
      }
      out << '\n';
    }
  }
  return passed ? kHolds : kRefuted;
}

int cmd_check_frame(const Config& cfg, const std::string& path, std::ostream& out) {
  const HTFrame k = load_frame(path, cfg.close);
  const AxiomReport r = check_frame(k);
  auto name_of = [&k](std::size_t w) { return k.name(w); };
  if (cfg.json()) {
    out << report_to_json(r, name_of).dump(2) << '\n';
  } else {
    print_report(out, "frame", r, name_of);
  }
  return r.passed() ? kHolds : kRefuted;
}

int cmd_check_model(const Config& cfg, const std::string& path, std::ostream& out) {
  const HTModel m = load_model(path, cfg.close);
  const AxiomReport fr = check_frame(m.frame());
  const AxiomReport mr = check_model(m);
  auto name_of = [&m](std::size_t w) { return m.frame().name(w); };
  if (cfg.json()) {
    Json j;
    j["frame"] = report_to_json(fr, name_of);
    j["model"] = report_to_json(mr, name_of);
    j["passed"] = fr.passed() && mr.passed();
    out << j.dump(2) << '\n';
  } else {
    print_report(out, "frame", fr, name_of);
    print_report(out, "model", mr, name_of);
  }
  return fr.passed() && mr.passed() ? kHolds : kRefuted;
}

int cmd_eval(const Config& cfg, const std::string& text, const std::string& algebra,
             const std::string& assign, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(algebra);
  const Formula f = parse_formula(text);
  const Assignment v = parse_assignment(assign, a);
  const Element value = eval(f, v, a);
  if (cfg.json()) {
    out << Json{{"formula", render_formula(f)}, {"value", a.name(value)}}.dump(2) << '\n';
  } else {
    out << a.name(value) << '\n';
  }
  return kHolds;
}

int cmd_sat(const Config& cfg, const std::string& text, const std::string& model_path,
            const std::string& state, std::ostream& out) {
  const HTModel m = load_model(model_path, cfg.close);
  const Formula f = parse_formula(text);
  const State w = m.frame().state(state);
  const bool holds = sat(m, w, f);
  if (cfg.json()) {
    out << Json{{"formula", render_formula(f)}, {"state", state}, {"sat", holds}}.dump(2) << '\n';
  } else {
    out << (holds ? "true" : "false") << '\n';
  }
  return holds ? kHolds : kRefuted;
}

int cmd_dualize(const Config& cfg, const std::string& to_frame, const std::string& to_algebra,
                std::ostream& out) {
  if (to_frame.empty() == to_algebra.empty())
    throw SchemaError("dualize needs exactly one of --to-frame and --to-algebra");
  Json j = !to_frame.empty() ? frame_to_json(canonical_frame(load_algebra(to_frame)))
                             : algebra_to_json(complex_algebra(load_frame(to_algebra, cfg.close)));
  out << j.dump(2) << '\n';
  return kHolds;
}

int cmd_gen(const std::string& what, std::ostream& out) {
  if (what == "bt") out << algebra_to_json(make_bt()).dump(2) << '\n';
  else if (what == "b") out << algebra_to_json(make_b()).dump(2) << '\n';
  else if (what == "k0") out << frame_to_json(make_k0()).dump(2) << '\n';
  else throw SchemaError("gen expects one of bt, b, k0");
  return kHolds;
}

int cmd_harness(const Config& cfg, std::size_t depth, std::size_t nvars, std::size_t frames,
                std::ostream& out) {
  if (frames > cfg.max_frame_size) {
    throw ResourceError("--frames " + std::to_string(frames) + " exceeds --max-frame-size " +
                        std::to_string(cfg.max_frame_size));
  }
  if (nvars > cfg.max_vars) throw ResourceError("--vars exceeds --max-vars");
  const auto vars = default_variables(nvars);
  const auto corpus = enumerate_formulas(vars, depth);
  (void)enumerate_frames(frames, false, cfg.max_frame_size);  // bound check
  const HarnessReport r = equivalence_harness(corpus, frames, cfg.mod_iso);
  if (cfg.json()) {
    Json d = Json::array();
    for (const auto& x : r.discrepancies)
      d.push_back({{"formula", render_formula(x.formula)}, {"description", x.description}});
    out << Json{{"formulas", r.formulas},
                {"valid", r.valid},
                {"refuted", r.refuted},
                {"frames", r.frames},
                {"discrepancies", d},
                {"passed", r.passed()}}
               .dump(2)
        << '\n';
  } else {
    out << "formulas: " << r.formulas << ", valid: " << r.valid << ", refuted: " << r.refuted
        << ", frames: " << r.frames << ", discrepancies: " << r.discrepancies.size() << '\n';
    for (const auto& x : r.discrepancies)
      out << "  " << render_formula(x.formula) << ": " << x.description << '\n';
  }
  return r.passed() ? kHolds : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and model checking for the two-agent HT logic", "htl"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-vars", cfg.max_vars, "Variable cap for decisions")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-frame-size", cfg.max_frame_size, "Bound on enumerated frame size")
      ->check(CLI::PositiveNumber);
  app.add_flag("--close", cfg.close, "Apply reflexive-transitive closure to R before use");
  app.add_flag("--mod-iso", cfg.mod_iso, "Skip enumerated frames isomorphic to earlier ones");

  std::string formula, path, algebra_spec, assign, model_path, state, to_frame, to_algebra, what;
  std::vector<std::string> assume;
  std::size_t depth = 2, nvars = 1, frames = 2;

  auto* decide = app.add_subcommand("decide", "Decide validity or consequence");
  decide->add_option("formula", formula)->required();
  decide->add_option("--assume", assume, "Premise (repeatable)");

  auto* check_algebra = app.add_subcommand("check-algebra", "Check T-structure / HT-algebra axioms");
  check_algebra->add_option("file", path, "Algebra JSON, or bt / b")->required();

  auto* check_frame_cmd = app.add_subcommand("check-frame", "Check the HT-frame conditions");
  check_frame_cmd->add_option("file", path, "Frame JSON, or k0")->required();

  auto* check_model_cmd = app.add_subcommand("check-model", "Check a model's frame and heredity");
  check_model_cmd->add_option("file", path)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in an algebra");
  eval_cmd->add_option("formula", formula)->required();
  eval_cmd->add_option("--algebra", algebra_spec, "Algebra JSON, or bt / b")->required();
  eval_cmd->add_option("--assign", assign, "p=mid,q=top");

  auto* sat_cmd = app.add_subcommand("sat", "Satisfaction at a state of a model");
  sat_cmd->add_option("formula", formula)->required();
  sat_cmd->add_option("--model", model_path)->required();
  sat_cmd->add_option("--state", state)->required();

  auto* dualize = app.add_subcommand("dualize", "Prime-filter frame or complex algebra");
  dualize->add_option("--to-frame", to_frame, "Algebra JSON, or bt / b");
  dualize->add_option("--to-algebra", to_algebra, "Frame JSON, or k0");

  auto* gen = app.add_subcommand("gen", "Emit a built-in structure");
  gen->add_option("what", what, "bt, b or k0")->required()->check(CLI::IsMember({"bt", "b", "k0"}));

  auto* harness = app.add_subcommand("harness", "Cross-check algebraic and relational semantics");
  harness->add_option("--depth", depth, "Maximum formula depth");
  harness->add_option("--vars", nvars, "Number of variables")->check(CLI::PositiveNumber);
  harness->add_option("--frames", frames, "Maximum enumerated frame size")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"htl"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsageError;
  }

  try {
    if (decide->parsed()) return cmd_decide(cfg, formula, assume, out);
    if (check_algebra->parsed()) return cmd_check_algebra(cfg, path, out);
    if (check_frame_cmd->parsed()) return cmd_check_frame(cfg, path, out);
    if (check_model_cmd->parsed()) return cmd_check_model(cfg, path, out);
    if (eval_cmd->parsed()) return cmd_eval(cfg, formula, algebra_spec, assign, out);
    if (sat_cmd->parsed()) return cmd_sat(cfg, formula, model_path, state, out);
    if (dualize->parsed()) return cmd_dualize(cfg, to_frame, to_algebra, out);
    if (gen->parsed()) return cmd_gen(what, out);
    if (harness->parsed()) return cmd_harness(cfg, depth, nvars, frames, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace htlogic::cli
