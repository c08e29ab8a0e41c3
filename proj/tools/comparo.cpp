// comparo: parse, evaluate, decide, translate and fuzz comparative
// likelihood formulas.
//
// Exit status: 0 success / SAT / valid / true, 1 for the opposite verdict,
// 2 for usage, parse, file or validation errors, 3 for capacity errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "comparo/decide.hpp"
#include "comparo/errors.hpp"
#include "comparo/kernels.hpp"
#include "comparo/model_io.hpp"
#include "comparo/semantics.hpp"
#include "comparo/transform.hpp"

namespace {

using namespace comparo;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct Options {
  std::string formula;
  std::string model;
  std::string sem;
  std::string state;
  std::string out;
  std::string trace;
  std::string which;
  std::string logic = "IP";
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::size_t max_states = 6;
  bool unicode = false;
  bool single_measure = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Semantics default_semantics(const AnyModel& m) {
  if (std::holds_alternative<PreferentialModel>(m)) return Semantics::Injection;
  if (std::holds_alternative<MultiMeasureModel>(m)) return Semantics::MultiMeasure;
  return Semantics::Cardinality;
}

AnyModel load_valid_model(const std::string& path) {
  if (path.empty()) throw UsageError("--model is required");
  AnyModel m = load_model(path);
  auto report = validate(m);
  if (!report.empty()) {
    std::string msg = path + " is not a valid model:";
    for (const auto& r : report) msg += "\n  " + r;
    throw ModelError(msg);
  }
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path);
  os << text;
}

std::string arrow(bool unicode) { return unicode ? " ↦ " : " -> "; }

int run_parse(const Options& o) {
  const Formula f = parse(o.formula);
  std::cout << render(f, o.unicode) << "\n";
  std::cout << "modal depth: " << modal_depth(f) << "\n";
  std::cout << "length: " << length(f) << "\n";
  if (modal_depth(f) > 1) std::cout << "depth <= 1 form: " << render(flatten_depth(f), o.unicode) << "\n";
  return kYes;
}

int run_eval(const Options& o) {
  const Formula f = parse(o.formula);
  const AnyModel m = load_valid_model(o.model);
  Semantics s = default_semantics(m);
  if (!o.sem.empty()) {
    auto parsed = parse_semantics(o.sem);
    if (!parsed) throw UsageError("unknown semantics '" + o.sem + "'");
    s = *parsed;
  }
  if (!compatible(m, s)) {
    throw UsageError(std::string(to_string(s)) + " semantics does not apply to a " + std::string(model_type(m)) +
                     " model");
  }
  if (o.state.empty()) throw UsageError("--state is required");
  const bool value = eval(m, s, o.state, f);
  std::cout << (value ? "true" : "false") << "\n";
  if (s == Semantics::Injection) {
    const auto& pm = std::get<PreferentialModel>(m);
    for (const Formula& g : comparison_subformulas(f)) {
      auto inj = comparison_witness(pm, g.lhs(), g.rhs());
      std::cout << "  " << render(g, o.unicode) << ": ";
      if (!inj) {
        std::cout << "false, no inflationary injection\n";
        continue;
      }
      std::cout << "true, injection {";
      for (std::size_t i = 0; i < inj->size(); ++i) {
        std::cout << (i ? ", " : "") << pm.space().id((*inj)[i].first) << arrow(o.unicode)
                  << pm.space().id((*inj)[i].second);
      }
      std::cout << "}\n";
    }
  }
  return value ? kYes : kNo;
}

std::string count(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

void report_witness(const SatResult& r, const std::string& path) {
  save_model(path, AnyModel(*r.witness));
  std::cout << "designated state: " << r.designated_state << "\n";
  std::cout << "witness: " << path << " (" << count(r.witness->space().size(), "state") << ", "
            << count(r.witness->measures().size(), "measure") << "; bounds |W| <= " << kWitnessStatesFactor << "*" << r.formula_length
            << "^2, |P| <= " << kWitnessMeasuresFactor << "*" << r.formula_length << ": "
            << (within_witness_bounds(r) ? "ok" : "exceeded") << ")\n";
}

void report_refutation(const SatResult& r, const Options& o) {
  std::cout << describe_trace(r);
  if (!o.trace.empty()) {
    write_text(o.trace, trace_json(r));
    std::cout << "trace: " << o.trace << "\n";
  }
}

SatOptions sat_options(const Options& o) {
  SatOptions so;
  so.single_measure = o.single_measure;
  return so;
}

int run_sat(const Options& o) {
  const Formula f = parse(o.formula);
  const SatResult r = sat_ip(f, sat_options(o));
  std::cout << (r.sat() ? "SAT" : "UNSAT") << "\n";
  if (r.sat()) {
    report_witness(r, o.out.empty() ? "witness.json" : o.out);
    return kYes;
  }
  report_refutation(r, o);
  return kNo;
}

int run_valid(const Options& o) {
  const Formula f = parse(o.formula);
  const ValidResult v = valid_ip(f, sat_options(o));
  std::cout << (v.valid ? "valid" : "not valid") << "\n";
  if (v.valid) {
    report_refutation(v.negation, o);
    return kYes;
  }
  std::cout << "countermodel for the negation:\n";
  report_witness(v.negation, o.out.empty() ? "countermodel.json" : o.out);
  return kNo;
}

int run_translate(const Options& o) {
  const AnyModel m = load_valid_model(o.model);
  const auto* mm = std::get_if<MultiMeasureModel>(&m);
  if (!mm) throw UsageError("translate expects a multimeasure model");
  std::vector<std::string> ls;
  for (const auto& [atom, set] : mm->valuation()) ls.push_back(atom);
  const auto formulas = template_formulas(ls);
  const std::string path = o.out.empty() ? "translated.json" : o.out;

  EquivalenceReport report;
  if (o.which == "lemma4") {
    auto r = lemma4(*mm);
    save_model(path, AnyModel(r.model));
    std::cout << "distinguished-state model: " << r.model.space().size() << " states, |W+| = " << r.model.plus().count()
              << " (scale " << r.scale.get_str() << ")\n";
    report = audit_equivalence(m, Semantics::MultiMeasure, AnyModel(r.model), Semantics::Cardinality,
                               origin_map(r.tags), formulas);
  } else if (o.which == "lemma5") {
    auto r = lemma5(*mm);
    save_model(path, AnyModel(r.model));
    std::cout << "preferential model: " << r.model.space().size() << " states in " << r.layers.size()
              << " layers, field " << r.model.field().count() << ", total preorder: "
              << (r.model.preorder()->is_total() ? "yes" : "no") << "\n";
    report = audit_equivalence(m, Semantics::MultiMeasure, AnyModel(r.model), Semantics::Injection,
                               origin_map(r.tags), formulas);
  } else {
    throw UsageError("translate expects lemma4 or lemma5");
  }
  std::cout << "written: " << path << "\n";
  std::cout << "audit: " << formulas.size() << " formulas, " << report.checks << " checks, "
            << report.disagreements.size() << " disagreements\n";
  for (std::size_t i = 0; i < report.disagreements.size() && i < 10; ++i) {
    const auto& d = report.disagreements[i];
    std::cout << "  " << d.formula << " at " << d.source_state << " (" << d.source_value << ") vs " << d.target_state
              << " (" << d.target_value << ")\n";
  }
  return report.ok() ? kYes : kNo;
}

int run_fuzz(const Options& o) {
  Logic logic;
  if (o.logic == "IP" || o.logic == "ip") logic = Logic::IP;
  else if (o.logic == "IL" || o.logic == "il") logic = Logic::IL;
  else throw UsageError("--logic must be IP or IL");
  SoundnessConfig config;
  config.models = o.budget ? o.budget : 1000;
  config.max_states = o.max_states;
  const auto r = soundness_sweep(logic, o.seed, config, Execution::Parallel);
  std::cout << to_string(logic) << " under " << to_string(audit_semantics(logic)) << " semantics, seed " << o.seed
            << "\n";
  std::cout << "models: " << r.models << "\ninstances: " << r.instances << " (" << r.nonvacuous
            << " with a satisfiable premise)\n";
  if (logic == Logic::IP) {
    std::cout << "cancellation instances: " << r.cancellation << " (" << r.cancellation_nonvacuous
              << " non-vacuous)\n";
  }
  std::cout << "violations: " << r.violations << "\n";
  if (r.first_violation) std::cout << *r.first_violation;
  return r.violations == 0 ? kYes : kNo;
}

int run_oracle(const Options& o) {
  if (!o.formula.empty()) {
    const Formula f = parse(o.formula);
    const OracleCheck c = oracle_check(f);
    std::cout << "sat_ip: " << (c.sat ? "SAT" : "UNSAT") << "\n";
    std::cout << "preferential search (<= " << kOracleMaxStates << " states): "
              << (c.preferential ? "model found" : "none") << "\n";
    if (c.contradiction()) std::cout << "CONTRADICTION\n";
    else if (!c.agree()) std::cout << "inconclusive: a preferential model may need more states\n";
    return c.contradiction() ? kNo : kYes;
  }
  OracleConfig config;
  config.formulas = o.budget ? o.budget : 100;
  const auto r = oracle_sweep(o.seed, config, Execution::Parallel);
  std::cout << "formulas: " << r.formulas << "\nSAT: " << r.sat << "\npreferential models found: " << r.preferential
            << "\nSAT without a small preferential model: " << r.uncertified
            << "\nwitness check failures: " << r.witness_failures << "\ncontradictions: " << r.contradictions << "\n";
  if (r.first_contradiction) std::cout << "first contradiction: " << *r.first_contradiction << "\n";
  return r.contradictions == 0 && r.witness_failures == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparative likelihood reasoning: model checking, satisfiability, model translation"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--unicode", o.unicode, "Render formulas with logical symbols");

  auto formula_arg = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("formula", o.formula, "Formula in ASCII syntax");
    if (required) opt->required();
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and print its rendering and measures");
  formula_arg(parse_cmd, true);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula at a state of a model");
  formula_arg(eval_cmd, true);
  eval_cmd->add_option("--model", o.model, "Model file (JSON)")->required();
  eval_cmd->add_option("--sem", o.sem, "function|injection|multimeasure|cardinality");
  eval_cmd->add_option("--state", o.state, "State identifier")->required();

  auto* sat_cmd = app.add_subcommand("sat", "Decide satisfiability over multi-measure models");
  auto* valid_cmd = app.add_subcommand("valid", "Decide validity over multi-measure models");
  for (auto* sub : {sat_cmd, valid_cmd}) {
    formula_arg(sub, true);
    sub->add_option("--out", o.out, "Where to write the witness model");
    sub->add_option("--trace", o.trace, "Where to write the refutation trace (JSON)");
    sub->add_flag("--single-measure", o.single_measure, "Only consider models with one measure");
  }

  auto* translate_cmd = app.add_subcommand("translate", "Translate a multi-measure model and audit the result");
  translate_cmd->add_option("construction", o.which, "lemma4 or lemma5")->required();
  translate_cmd->add_option("--model", o.model, "Model file (JSON)")->required();
  translate_cmd->add_option("--out", o.out, "Where to write the translated model");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Audit axiom soundness on random preferential models");
  fuzz_cmd->add_option("--logic", o.logic, "IP (injection) or IL (function)");
  fuzz_cmd->add_option("--seed", o.seed, "Random seed");
  fuzz_cmd->add_option("--budget", o.budget, "Number of random models");
  fuzz_cmd->add_option("--max-states", o.max_states, "States per model");

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check sat against exhaustive preferential search");
  formula_arg(oracle_cmd, false);
  oracle_cmd->add_option("--seed", o.seed, "Random seed");
  oracle_cmd->add_option("--budget", o.budget, "Number of random formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse_cmd) return run_parse(o);
    if (*eval_cmd) return run_eval(o);
    if (*sat_cmd) return run_sat(o);
    if (*valid_cmd) return run_valid(o);
    if (*translate_cmd) return run_translate(o);
    if (*fuzz_cmd) return run_fuzz(o);
    if (*oracle_cmd) return run_oracle(o);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
