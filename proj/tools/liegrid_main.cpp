#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "liegrid/verify.hpp"

using namespace liegrid;

namespace {

Tolerance tol_from_env() {
  Tolerance tol;
  if (const char* s = std::getenv("LIEGRID_TOL")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0))
      throw std::invalid_argument("LIEGRID_TOL must be a positive number");
    tol.algebraic = v;
  }
  return tol;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << "\n";
  }
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return Json::parse(f);
}

RVector parse_components(const std::vector<double>& values, int expected,
                         const char* what) {
  if (values.empty()) return RVector::Zero(expected);
  if (static_cast<int>(values.size()) != expected)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(expected) + " components, got " +
                                std::to_string(values.size()));
  RVector v(expected);
  for (int i = 0; i < expected; ++i) v(i) = values[i];
  return v;
}

int run_verify_command(int n, const std::vector<std::string>& suites,
                       const std::string& basis_path, const std::string& tensors_path,
                       std::uint64_t seed, int trials, const std::string& json_path) {
  VerifyOptions opt;
  opt.n = n;
  if (!suites.empty()) opt.suites = suites;
  opt.tol = tol_from_env();
  opt.seed = seed;
  opt.trials = trials;
  if (!basis_path.empty()) opt.basis = basis_from_json(load_json(basis_path));
  if (!tensors_path.empty())
    opt.tensors = tensors_from_json(load_json(tensors_path), opt.tol);

  VerifyReport rep = run_verify(opt);
  for (const CheckResult& c : rep.checks) {
    const char* tag = c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
    std::cout << "[" << tag << "] " << std::left << std::setw(34) << c.name
              << " value=" << std::scientific << std::setprecision(3) << c.value
              << " threshold=" << c.threshold << std::defaultfloat;
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << (rep.all_pass() ? "verify: all checks passed"
                               : "verify: at least one check failed")
            << "\n";
  if (!json_path.empty()) emit(verify_to_json(rep), json_path);
  return rep.all_pass() ? 0 : 1;
}

int run_transform_command(int n, int epsilon, const std::vector<double>& theta,
                          const std::vector<double>& phi, const std::vector<double>& x,
                          const std::string& json_path) {
  Tolerance tol = tol_from_env();
  StructureTensors t = compute_tensors(canonical_basis(n), tol);
  SpacetimeGenerators g = spacetime_generators(t);
  int m = n * n - 1;
  LorentzParams params;
  params.theta = parse_components(theta, m, "--theta");
  params.phi = parse_components(phi, m, "--phi");
  params.epsilon = epsilon;
  RVector xv = parse_components(x, n * n, "--x");
  RVector y = apply_transform(lorentz_transform(g, params), xv, tol);

  std::cout << "x' =";
  for (int i = 0; i < y.size(); ++i) std::cout << " " << y(i);
  std::cout << "\nspatial norm^2: " << xv.head(m).squaredNorm() << " -> "
            << y.head(m).squaredNorm() << "\ninterval: " << interval(xv) << " -> "
            << interval(y) << "\n";
  if (!json_path.empty()) {
    Json out{{"version", kVersion},
             {"n", n},
             {"epsilon", epsilon},
             {"index_map", index_map_description()},
             {"x", std::vector<double>(xv.data(), xv.data() + xv.size())},
             {"x_out", std::vector<double>(y.data(), y.data() + y.size())},
             {"interval_in", interval(xv)},
             {"interval_out", interval(y)}};
    emit(out, json_path);
  }
  return 0;
}

int run_momentum_command(int n, int epsilon, const std::string& a, const std::string& b,
                         const std::string& c, const std::string& d,
                         const std::string& block, const std::string& json_path) {
  Tolerance tol = tol_from_env();
  StructureTensors t = compute_tensors(canonical_basis(n), tol);
  Rep ra = realize(RepSpec::parse(a), t);
  Rep rb = realize(RepSpec::parse(b), t);
  Rep rc = realize(RepSpec::parse(c), t);
  Rep rd = realize(RepSpec::parse(d), t);
  SimilarityMap sm = similarity_S(canonical_basis(n), tol);
  MomentumSolution sol = solve_intertwiners(ra, rb, rc, rd, epsilon, sm, tol);

  auto describe = [](const char* name, const MomentumBlock& blk) {
    std::cout << name << " block: dim " << blk.dim() << ", shape " << blk.out_rows
              << "x" << blk.in_cols << ", residual " << std::scientific
              << std::setprecision(3) << blk.residual << std::defaultfloat << "\n";
  };
  std::cout << "families for A=" << ra.spec.str() << " B=" << rb.spec.str()
            << " C=" << rc.spec.str() << " D=" << rd.spec.str()
            << " epsilon=" << (epsilon > 0 ? "+1" : "-1") << "\n";
  if (block != "minus") describe("plus", sol.plus);
  if (block != "plus") describe("minus", sol.minus);
  if (!json_path.empty()) emit(momentum_to_json(sol), json_path);

  int available = 0;
  if (block != "minus") available += sol.plus.dim();
  if (block != "plus") available += sol.minus.dim();
  if (available == 0) {
    std::cerr << "momentum: no families exist for the requested block(s)\n";
    return 1;
  }
  return 0;
}

int run_export_command(int n, const std::string& out) {
  Tolerance tol = tol_from_env();
  GeneratorBasis b = canonical_basis(n);
  StructureTensors t = compute_tensors(b, tol);
  Json bundle{{"version", kVersion},
              {"n", n},
              {"index_map", index_map_description()},
              {"basis", basis_to_json(b)},
              {"tensors", tensors_to_json(t)},
              {"spacetime", spacetime_to_json(spacetime_generators(t))},
              {"similarity", similarity_to_json(similarity_S(b, tol))}};
  emit(bundle, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(n) generator algebra, structure tensors, and spacetime checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int n = 2, epsilon = 1, trials = 100;
  std::uint64_t seed = 777;
  std::string out, json_path, basis_path, tensors_path, block = "both";
  std::string rep_a = "F", rep_b = "A", rep_c = "F", rep_d = "A";
  std::vector<std::string> suites;
  std::vector<double> theta, phi, x;

  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "group size n")->check(CLI::Range(2, 16));
  };
  auto add_eps = [&epsilon](CLI::App* cmd) {
    cmd->add_option("--epsilon", epsilon, "boost sign")->check(CLI::IsMember({1, -1}));
  };

  CLI::App* basis_cmd = app.add_subcommand("basis", "canonical generator basis as JSON");
  add_n(basis_cmd);
  basis_cmd->add_option("--out", out, "output file (stdout when omitted)");

  CLI::App* tensors_cmd =
      app.add_subcommand("tensors", "structure tensors f and d as JSON");
  add_n(tensors_cmd);
  tensors_cmd->add_option("--out", out, "output file (stdout when omitted)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run identity check suites");
  add_n(verify_cmd);
  verify_cmd->add_option("--suite", suites, "suites to run")
      ->check(CLI::IsMember(
          {"tensors", "lorentz", "similarity", "transforms", "poincare", "all"}));
  verify_cmd->add_option("--basis", basis_path, "generator basis JSON to audit");
  verify_cmd->add_option("--tensors", tensors_path, "structure tensor JSON to audit");
  verify_cmd->add_option("--seed", seed, "random sweep seed");
  verify_cmd->add_option("--trials", trials, "random sweep trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--json", json_path, "write the full report as JSON");

  CLI::App* transform_cmd =
      app.add_subcommand("transform", "apply a finite rotation/boost to a vector");
  add_n(transform_cmd);
  add_eps(transform_cmd);
  transform_cmd->add_option("--theta", theta, "rotation angles (n^2-1 values)");
  transform_cmd->add_option("--phi", phi, "boost rapidities (n^2-1 values)");
  transform_cmd->add_option("--x", x, "spacetime vector (n^2 values)")->required();
  transform_cmd->add_option("--json", json_path, "write the result as JSON");

  CLI::App* momentum_cmd =
      app.add_subcommand("momentum", "solve momentum intertwiner families");
  add_n(momentum_cmd);
  add_eps(momentum_cmd);
  momentum_cmd->add_option("--a", rep_a, "outer row representation");
  momentum_cmd->add_option("--b", rep_b, "outer column representation");
  momentum_cmd->add_option("--c", rep_c, "inner row representation");
  momentum_cmd->add_option("--d", rep_d, "inner column representation");
  momentum_cmd->add_option("--block", block, "which block must be populated")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  momentum_cmd->add_option("--json", json_path, "write the solution as JSON");

  CLI::App* export_cmd =
      app.add_subcommand("export", "bundle basis/tensors/spacetime/similarity as JSON");
  add_n(export_cmd);
  export_cmd->add_option("--out", out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(basis_cmd)) {
      emit(basis_to_json(canonical_basis(n)), out);
      return 0;
    }
    if (app.got_subcommand(tensors_cmd)) {
      emit(tensors_to_json(compute_tensors(canonical_basis(n), tol_from_env())), out);
      return 0;
    }
    if (app.got_subcommand(verify_cmd))
      return run_verify_command(n, suites, basis_path, tensors_path, seed, trials,
                                json_path);
    if (app.got_subcommand(transform_cmd))
      return run_transform_command(n, epsilon, theta, phi, x, json_path);
    if (app.got_subcommand(momentum_cmd))
      return run_momentum_command(n, epsilon, rep_a, rep_b, rep_c, rep_d, block,
                                  json_path);
    if (app.got_subcommand(export_cmd)) return run_export_command(n, out);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
