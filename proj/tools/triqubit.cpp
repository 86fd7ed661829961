// Batch front end: reads state files, emits one report object per state on
// standard output. Exit codes: 0 success, 1 input error, 2 identity
// violations in a sweep.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "triqubit/json_io.hpp"
#include "triqubit/random.hpp"

namespace tq = triqubit;

namespace {

struct GlobalOptions {
  double epsilon = tq::tol::kClassify;
  std::uint64_t seed = 12345;
  int samples = 1000;
  std::string format = "json";
  bool all_parties = false;
  bool all_roots = false;
};

void emit(const tq::Json& report, const GlobalOptions& opt) {
  if (opt.format == "table") {
    std::cout << tq::dump_table(report);
  } else {
    std::cout << tq::dump_fixed(report) << "\n";
  }
}

tq::PureState3 permuted_for_party(const tq::PureState3& s, tq::Party p) {
  std::array<int, 3> perm{0, 1, 2};
  if (p == tq::Party::B) perm = {1, 0, 2};
  if (p == tq::Party::C) perm = {2, 1, 0};
  return tq::permute_parties(s, perm);
}

tq::Json with_all_parties(const tq::PureState3& s, double eps,
                          bool decomposition_only) {
  tq::Json reports = tq::Json::array();
  for (tq::Party p : {tq::Party::A, tq::Party::B, tq::Party::C}) {
    const tq::PureState3 ps = permuted_for_party(s, p);
    tq::Json r = tq::classification_report(ps, eps);
    if (decomposition_only) {
      r = tq::Json{{"type", r["type"]},
                   {"nu", r["nu"]},
                   {"party", r["party"]},
                   {"decomposition", r["decomposition"]}};
    }
    r["singledParty"] = std::string(1, tq::party_letter(p));
    reports.push_back(r);
  }
  return tq::Json{{"allParties", reports}};
}

int run_state_command(const std::string& command,
                      const std::vector<std::string>& inputs,
                      const GlobalOptions& opt) {
  for (const std::string& path : inputs) {
    const tq::Json j = tq::load_json_file(path);
    if (command == "reduce4") {
      const tq::PureState4 s = tq::read_state4(j);
      tq::Json report = tq::to_json(tq::reduce_to_twelve(s));
      if (opt.all_roots) {
        tq::Json all = tq::Json::array();
        for (const auto& f : tq::reduce_all_roots(s)) {
          all.push_back(tq::to_json(f));
        }
        report["allRoots"] = all;
      }
      emit(report, opt);
      continue;
    }

    const tq::PureState3 s = tq::read_state3(j);
    if (command == "canon") {
      emit(tq::to_json(tq::acin_canonical(s)), opt);
    } else if (command == "invariants") {
      emit(tq::invariants_report(tq::invariant_set(s)), opt);
    } else if (command == "classify") {
      emit(opt.all_parties ? with_all_parties(s, opt.epsilon, false)
                           : tq::classification_report(s, opt.epsilon),
           opt);
    } else if (command == "minimal") {
      if (opt.all_parties) {
        emit(with_all_parties(s, opt.epsilon, true), opt);
      } else {
        const tq::EntanglementClass cls = tq::classify(s, opt.epsilon);
        emit(tq::Json{{"type", tq::class_tag_name(cls.tag)},
                      {"nu", cls.nu},
                      {"party", cls.party ? tq::Json(std::string(
                                                1, tq::party_letter(*cls.party)))
                                          : tq::Json()},
                      {"decomposition",
                       tq::to_json(tq::minimal_decomposition(s, cls))}},
             opt);
      }
    } else if (command == "ghz") {
      emit(tq::to_json(tq::ghz_two_term(s)), opt);
    } else if (command == "symmetric") {
      emit(tq::to_json(tq::symmetric_form(s)), opt);
    } else if (command == "real") {
      tq::Json report = tq::to_json(tq::real_basis(s, opt.epsilon));
      report["decomposition"] = tq::to_json(tq::real_six_lbps(s, opt.epsilon));
      emit(report, opt);
    }
  }
  return 0;
}

int run_sweep(const GlobalOptions& opt) {
  struct Tally {
    int violations = 0;
    double max_residual = 0.0;
  };
  std::map<std::string, Tally> tallies;
  int total_violations = 0;
  for (int i = 0; i < opt.samples; ++i) {
    const tq::PureState3 s = tq::haar_random_state3(
        tq::derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
    const auto J = tq::compute_J(tq::compute_I(s));
    const tq::IdentityReport rep = tq::check_identities(J, tq::delta_J(J));
    for (const auto& e : rep.entries) {
      Tally& t = tallies[e.name];
      if (e.applicable) {
        t.max_residual = std::max(t.max_residual, e.residual);
        if (!e.pass) {
          ++t.violations;
          ++total_violations;
        }
      }
    }
  }
  tq::Json identities = tq::Json::object();
  // Keep the report order identical to the ledger order.
  const auto order = tq::check_identities({0, 0, 0, 0, 0}, 0.0);
  for (const auto& e : order.entries) {
    const Tally& t = tallies[e.name];
    identities[e.name] = tq::Json{{"violations", t.violations},
                                  {"maxResidual", t.max_residual}};
  }
  emit(tq::Json{{"samples", opt.samples},
                {"seed", opt.seed},
                {"violations", total_violations},
                {"identities", identities}},
       opt);
  return total_violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Canonical forms, local-unitary invariants and minimal product-state "
      "decompositions of three-qubit pure states, plus the four-qubit "
      "twelve-term reduction"};
  app.require_subcommand(1);

  GlobalOptions opt;
  if (const char* env = std::getenv("TRIQUBIT_EPSILON")) {
    try {
      opt.epsilon = std::stod(env);
    } catch (...) {
      std::cerr << "invalid TRIQUBIT_EPSILON value\n";
      return 1;
    }
  }

  std::vector<std::string> inputs;
  const auto add_common = [&](CLI::App* cmd, bool with_inputs) {
    cmd->add_option("--epsilon", opt.epsilon,
                    "classification tolerance on condition residuals")
        ->check(CLI::Range(1e-300, 1e-2));
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    if (with_inputs) {
      cmd->add_option("inputs", inputs, "state files (JSON)")
          ->required()
          ->expected(-1);
    }
  };

  std::vector<std::string> state_commands{
      "canon", "invariants", "classify", "minimal",
      "ghz",   "symmetric",  "real",     "reduce4"};
  for (const std::string& name : state_commands) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common(cmd, true);
    if (name == "classify" || name == "minimal") {
      cmd->add_flag("--all-parties", opt.all_parties,
                    "rerun with each party singled out");
    }
    if (name == "reduce4") {
      cmd->add_flag("--all-roots", opt.all_roots,
                    "report the form from every pencil root");
    }
  }
  CLI::App* sweep = app.add_subcommand("sweep");
  add_common(sweep, false);
  sweep->add_option("--samples", opt.samples, "ensemble size")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& name : state_commands) {
      if (app.got_subcommand(name)) {
        return run_state_command(name, inputs, opt);
      }
    }
    if (app.got_subcommand("sweep")) return run_sweep(opt);
  } catch (const tq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
