#include "htlogic/decide.hpp"

#include <stdexcept>

namespace htlogic {

namespace {

const FiniteAlgebra& bt() {
  static const FiniteAlgebra instance = make_bt();
  return instance;
}

const HTFrame& k0() {
  static const HTFrame instance = make_k0();
  return instance;
}

std::size_t assignment_cap(std::size_t max_vars) {
  std::size_t cap = 1;
  for (std::size_t i = 0; i < max_vars; ++i) cap *= 3;
  return cap;
}

}  // namespace

StateSet bt_to_k0(Element e) {
  switch (e) {
    case 0: return StateSet{};
    case 1: return StateSet::of({1});
    case 2: return StateSet::of({0, 1});
    default: throw StructureError("not an element of BT");
  }
}

HTModel countermodel_on_k0(const Formula& alpha, const Assignment& v) {
  if (eval(alpha, v, bt()) == bt().top())
    throw StructureError("assignment does not refute '" + render_formula(alpha) + "' in BT");
  Valuation m;
  for (const auto& [var, e] : v) m[var] = bt_to_k0(e);
  return HTModel(k0(), std::move(m));
}

DecisionResult decide_consequence(std::span<const Formula> gamma, const Formula& alpha,
                                  std::size_t max_vars) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(alpha);
  const std::size_t nvars = variables(all).size();
  if (nvars > max_vars) {
    throw ResourceError(std::to_string(nvars) + " variables exceed the cap of " +
                        std::to_string(max_vars));
  }

  DecisionResult result{{gamma.begin(), gamma.end()}, alpha, true, {}, {}, {}};
  Verdict verdict = algebra_consequence(gamma, alpha, bt(), assignment_cap(max_vars));
  if (verdict) return result;

  const Assignment& v = *verdict.witness->assignment;
  HTModel model = countermodel_on_k0(alpha, v);

  // Evidence must re-verify under both semantics.
  for (const auto& g : gamma) {
    if (eval(g, v, bt()) != bt().top() || !model_truth(model, g))
      throw std::logic_error("counter-evidence does not make a premise true");
  }
  Verdict alpha_truth = model_truth(model, alpha);
  if (eval(alpha, v, bt()) == bt().top() || alpha_truth)
    throw std::logic_error("counter-evidence does not refute the conclusion");

  result.holds = false;
  result.counter_assignment = v;
  result.failing_state = alpha_truth.witness->state;
  result.countermodel = std::move(model);
  return result;
}

DecisionResult decide_validity(const Formula& alpha, std::size_t max_vars) {
  return decide_consequence({}, alpha, max_vars);
}

HarnessReport equivalence_harness(std::span<const Formula> corpus, std::size_t max_frame_size,
                                  bool mod_iso) {
  const auto frames = enumerate_frames(max_frame_size, mod_iso);
  HarnessReport report;
  report.frames = frames.size();
  for (const auto& f : corpus) {
    ++report.formulas;
    DecisionResult d = decide_validity(f);
    if (d) {
      ++report.valid;
      for (std::size_t i = 0; i < frames.size(); ++i) {
        if (!frame_valid(frames[i], f)) {
          report.discrepancies.push_back(
              {f, "valid in BT but refuted on enumerated frame #" + std::to_string(i)});
          break;
        }
      }
      continue;
    }
    ++report.refuted;
    if (model_truth(*d.countermodel, f))
      report.discrepancies.push_back({f, "K0 countermodel does not refute the formula"});
    bool refuted_somewhere = false;
    for (const auto& k : frames) {
      if (!frame_valid(k, f)) {
        refuted_somewhere = true;
        break;
      }
    }
    // K0 has two states, so one-state enumerations need not refute.
    if (!refuted_somewhere && max_frame_size >= 2)
      report.discrepancies.push_back({f, "refuted in BT but valid on every enumerated frame"});
  }
  return report;
}

}  // namespace htlogic
