#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "coexkit/json_io.hpp"
#include "coexkit/verify.hpp"

namespace {

using namespace coexkit;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUndecided = 3;

Effect load_effect(const std::string& path) { return effect_from_json(load_json_file(path)); }

struct SolverFlags {
  double accept_tol = SolverConfig{}.accept_tol;
  double reject_gap = SolverConfig{}.reject_gap;
  int max_iter = SolverConfig{}.max_iter;
  int stability_window = SolverConfig{}.stability_window;

  void attach(CLI::App* app) {
    app->add_option("--accept-tol", accept_tol, "feasibility residual accepted as coexistent");
    app->add_option("--reject-gap", reject_gap, "stable iterate gap treated as infeasible");
    app->add_option("--max-iter", max_iter, "Dykstra cycle cap");
    app->add_option("--stability-window", stability_window, "cycles the gap must stay flat");
  }

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.accept_tol = accept_tol;
    cfg.reject_gap = reject_gap;
    cfg.max_iter = max_iter;
    cfg.stability_window = stability_window;
    return cfg;
  }
};

CVector parse_direction(const std::string& text) {
  const Json j = Json::parse(text, nullptr, true);
  if (!j.is_array() || j.empty()) throw CoexError(Errc::BadInput, "direction must be a JSON array");
  CVector x;
  for (const Json& cell : j) {
    if (cell.is_number()) {
      x.push_back(Complex{cell.get<double>(), 0.0});
    } else if (cell.is_array() && cell.size() == 2) {
      x.push_back(Complex{cell.at(0).get<double>(), cell.at(1).get<double>()});
    } else {
      throw CoexError(Errc::BadInput, "direction entries are numbers or [re, im] pairs");
    }
  }
  return x;
}

int cmd_check(const std::string& a_path, const std::string& b_path, const SolverConfig& cfg) {
  const Effect a = load_effect(a_path);
  const Effect b = load_effect(b_path);
  const CoexVerdict v = coexist(a, b, cfg);
  std::cout << verdict_to_json(v).dump(2) << "\n";
  return v.decision == CoexDecision::Undecided ? kExitUndecided : kExitOk;
}

int cmd_strength(const std::string& a_path, const std::string& dir_text, bool have_angle,
                 double angle) {
  const Effect a = load_effect(a_path);
  RankOneProjection p = have_angle ? RankOneProjection::qubit(angle)
                                   : RankOneProjection::from_vector(parse_direction(dir_text));
  if (have_angle && a.dim() != 2) {
    throw CoexError(Errc::DimMismatch, "--angle probes need a qubit effect");
  }
  const StrengthValue sv = strength(a, p);
  const double bisect = strength_bisect(a, p);
  std::cout << format_double(sv.value) << " " << format_double(bisect) << " "
            << format_double(std::abs(sv.value - bisect)) << "\n";
  return kExitOk;
}

int cmd_profile(double l1, double l2, int grid, const std::string& out_path) {
  std::vector<double> alphas;
  alphas.reserve(static_cast<size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    alphas.push_back(1.5707963267948966 * i / (grid - 1));
  }
  const TProfile prof = t_profile(l1, l2, alphas);
  const std::string csv = tprofile_to_csv(prof);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file_atomic(out_path, csv);
    std::cout << "wrote " << out_path << " (" << prof.alphas.size() << " rows)\n";
  }
  return kExitOk;
}

int cmd_bloch(double t, double mu, int grid, const std::string& out_path) {
  std::vector<double> thetas;
  thetas.reserve(static_cast<size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    thetas.push_back(1.5707963267948966 * i / (grid - 1));
  }
  const ConeSection section = export_coex_section(t, mu, thetas);
  const std::string csv = cone_section_to_csv(section);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file_atomic(out_path, csv);
    std::cout << "wrote " << out_path << " (" << section.points.size() << " rows)\n";
  }
  return kExitOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, int samples, uint64_t seed,
                double margin, const std::string& out_path) {
  const Effect a = load_effect(a_path);
  const Effect b = load_effect(b_path);
  const ProbeSet probes = ProbeSet::sample(a.dim(), samples, seed);
  const ProfileComparison cmp = profile_compare(a, b, probes, margin);
  Json j{{"probes", samples}, {"seed", seed}, {"margin", margin}};
  if (const auto* eq = std::get_if<ProfileEqual>(&cmp)) {
    j["result"] = "equal";
    j["compared"] = eq->compared;
    j["excluded"] = eq->excluded;
  } else {
    const auto& diff = std::get<ProfileDiffers>(cmp);
    j["result"] = "differs";
    j["probe_index"] = diff.probe_index;
    j["separating_probe"] = Json{{"t", diff.probe.t},
                                 {"projection", matrix_to_json(diff.probe.projection.matrix())},
                                 {"coexists_with", diff.in_lhs ? "A" : "B"}};
  }
  j["profile_a"] = simprofile_to_json(SimProfile::build(a, probes));
  j["profile_b"] = simprofile_to_json(SimProfile::build(b, probes));
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out_path, text);
    std::cout << (std::get_if<ProfileEqual>(&cmp) ? "equal" : "differs") << ", wrote " << out_path
              << "\n";
  }
  return kExitOk;
}

int cmd_apply_auto(const std::string& spec_path, const std::string& in_path,
                   const std::string& out_path) {
  const AutomorphismSpec spec = automorphism_from_json(load_json_file(spec_path));
  const Effect a = load_effect(in_path);
  const Effect image = apply_automorphism(spec, a);
  write_file_atomic(out_path, effect_to_json(image).dump(2) + "\n");
  std::cout << "wrote " << out_path << " (kind " << kind_name(classify(image).kind) << ")\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else {
    todo.push_back(suite);
  }
  bool all_passed = true;
  for (const std::string& name : todo) {
    const SuiteReport report = run_suite(name, cfg);
    std::cout << render_report(report);
    all_passed = all_passed && report.all_passed();
  }
  std::cout << "seed " << cfg.seed << " samples " << cfg.samples << "\n";
  return all_passed ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effect-algebra coexistence toolkit"};
  app.require_subcommand(1);

  std::string a_path, b_path, out_path, spec_path, dir_text;
  double angle = 0.0, l1 = 0.0, l2 = 0.0, tcoef = 0.5, mu = 0.0, margin = 1e-6;
  int grid = 64, samples = 256;
  uint64_t seed = 42;
  SolverFlags solver;

  auto* check = app.add_subcommand("check", "decide coexistence of two effect files");
  check->add_option("--a", a_path, "effect JSON")->required();
  check->add_option("--b", b_path, "effect JSON")->required();
  solver.attach(check);

  auto* strength_cmd = app.add_subcommand("strength", "strength function along a direction");
  strength_cmd->add_option("--a", a_path, "effect JSON")->required();
  auto* dir_opt = strength_cmd->add_option("--dir", dir_text, "unit vector, e.g. [1,0] or [[0,1],[1,0]]");
  auto* angle_opt = strength_cmd->add_option("--angle", angle, "qubit probe angle (radians)");
  dir_opt->excludes(angle_opt);

  auto* profile = app.add_subcommand("profile", "strength-sum profile of diag(l1, l2)");
  profile->add_option("--l1", l1, "first eigenvalue")->required();
  profile->add_option("--l2", l2, "second eigenvalue")->required();
  profile->add_option("--grid", grid, "alpha sample count");
  profile->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* bloch_cmd = app.add_subcommand("bloch", "coexistence-region cross-section data");
  bloch_cmd->add_option("--t", tcoef, "subject coefficient in (0,1)")->required();
  bloch_cmd->add_option("--mu", mu, "section plane angle");
  bloch_cmd->add_option("--grid", grid, "theta sample count");
  bloch_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* compare = app.add_subcommand("compare", "sampled coexistence-set comparison");
  compare->add_option("--a", a_path, "effect JSON")->required();
  compare->add_option("--b", b_path, "effect JSON")->required();
  compare->add_option("--samples", samples, "probe count");
  compare->add_option("--seed", seed, "probe RNG seed");
  compare->add_option("--margin", margin, "boundary exclusion margin");
  compare->add_option("--out", out_path, "JSON path (stdout if omitted)");

  auto* apply = app.add_subcommand("apply-auto", "apply a coexistence automorphism");
  apply->add_option("--spec", spec_path, "automorphism JSON")->required();
  apply->add_option("--in", a_path, "input effect JSON")->required();
  apply->add_option("--out", out_path, "output effect JSON")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite = "all";
  RunConfig run_cfg;
  verify->add_option("--suite", suite, "strength|coexistence|simsets|symmetry|bloch|all");
  verify->add_option("--seed", run_cfg.seed, "RNG seed");
  verify->add_option("--samples", run_cfg.samples, "sample budget per property");
  verify->add_option("--dims", run_cfg.dims, "dimensions to exercise");
  verify->add_flag("--inject-broken-map", run_cfg.inject_broken_map,
                   "test hook: sabotage the symmetry suite");
  SolverFlags verify_solver;
  verify_solver.attach(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(a_path, b_path, solver.config());
    if (strength_cmd->parsed()) {
      if (dir_opt->count() == 0 && angle_opt->count() == 0) {
        throw CoexError(Errc::BadInput, "need --dir or --angle");
      }
      return cmd_strength(a_path, dir_text, angle_opt->count() > 0, angle);
    }
    if (profile->parsed()) {
      if (grid < 2) throw CoexError(Errc::BadInput, "--grid must be at least 2");
      return cmd_profile(l1, l2, grid, out_path);
    }
    if (bloch_cmd->parsed()) {
      if (grid < 2) throw CoexError(Errc::BadInput, "--grid must be at least 2");
      return cmd_bloch(tcoef, mu, grid, out_path);
    }
    if (compare->parsed()) return cmd_compare(a_path, b_path, samples, seed, margin, out_path);
    if (apply->parsed()) return cmd_apply_auto(spec_path, a_path, out_path);
    if (verify->parsed()) {
      run_cfg.solver = verify_solver.config();
      return cmd_verify(suite, run_cfg);
    }
  } catch (const CoexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
