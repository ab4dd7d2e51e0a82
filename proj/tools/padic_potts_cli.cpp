// Command-line front end: every analysis as a scriptable, reproducible
// command with JSON/CSV output. Exit codes: 0 success, 1 usage error,
// 2 mathematical nonexistence (no square root, undefined measure, ...).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "padic/json_io.hpp"

namespace {

using namespace padic;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonexistent = 2;

struct Options {
  long p = 3;
  int q = 1;
  int N = 1;
  int k = 2;
  int precision = 0;  // 0: take PADIC_PRECISION or the default 64
  std::string format = "json";
  std::size_t enum_cap = tree::kDefaultEnumerationCap;
  std::uint64_t seed = 20120917;  // default sweep seed
};

int resolve_precision(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("PADIC_PRECISION")) {
    int v = std::atoi(env);
    if (v >= 8) return v;
  }
  return 64;
}

potts::ModelParams make_params(const Options& opt, bool need_coupling = true) {
  mpz_class pz(opt.p);
  if (mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0)
    throw Error("p = " + std::to_string(opt.p) + " is not prime");
  if (need_coupling && opt.N == 0) throw Error("coupling N must be nonzero");
  potts::ModelParams params{opt.p, opt.q, need_coupling ? opt.N : 1, opt.k,
                            PrecisionConfig{resolve_precision(opt.precision)}};
  params.validate();
  return params;
}

PadicNumber parse_rational(const std::string& text, long p, const PrecisionConfig& cfg) {
  auto slash = text.find('/');
  mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
  mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
  return PadicNumber::from_rational(num, den, p, cfg);
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    // text: flat key/value walk, deterministic order
    std::function<void(const Json&, std::string)> walk = [&](const Json& node,
                                                             std::string prefix) {
      if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
          walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
      } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& item : node) walk(item, prefix + "[" + std::to_string(i++) + "]");
      } else {
        std::cout << prefix << " = " << node.dump() << "\n";
      }
    };
    walk(j, "");
  }
}

potts::BoundaryField field_from_arg(const std::string& arg,
                                     const potts::ModelParams& params) {
  if (arg.rfind("fixed:", 0) == 0) {
    int i = std::stoi(arg.substr(6));
    auto fps = dynamics::fixed_points(params);
    if (i == 0)
      return potts::BoundaryField::invariant_line(params.constant(1), params);
    if (!fps.roots_exist)
      throw MeasureUndefined("fixed point x" + std::to_string(i) +
                             " does not exist: " + fps.existence_detail);
    return potts::BoundaryField::invariant_line(
        i == 1 ? fps.x1->value : fps.x2->value, params);
  }
  if (arg.rfind("file:", 0) == 0) {
    std::ifstream in(arg.substr(5));
    if (!in) throw Error("cannot open field file " + arg.substr(5));
    Json j = Json::parse(in);
    return io::field_from_json(j, params);
  }
  throw Error("--field expects fixed:<i> or file:<path>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic Potts model analysis on the order-2 Cayley tree"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("-p,--prime", opt.p, "prime p");
  app.add_option("-q,--states", opt.q, "q (spins 0..q)");
  app.add_option("-N,--coupling", opt.N, "coupling exponent N (theta = p^N)");
  app.add_option("-k,--branching", opt.k, "tree branching (k = 2 for dynamics)");
  app.add_option("--precision", opt.precision,
                 "relative precision cap K (overrides PADIC_PRECISION)");
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--enum-cap", opt.enum_cap, "configuration enumeration cap");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");

  // sqrt
  auto* sqrt_cmd = app.add_subcommand("sqrt", "square roots in Q_p with the existence trace");
  std::string sqrt_arg;
  sqrt_cmd->add_option("value", sqrt_arg, "rational num/den")->required();

  // fixed-points
  auto* fp_cmd = app.add_subcommand("fixed-points", "fixed points of the invariant-line system");

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "classify a fixed point by |f'|_p");
  std::string cls_target = "all";
  cls_cmd->add_option("--target", cls_target, "x0|x1|x2|all or --value");
  std::string cls_value;
  cls_cmd->add_option("--value", cls_value, "rational num/den to classify");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "iterate f and report the verdict");
  std::string orbit_start = "1/1";
  int orbit_max = 64;
  orbit_cmd->add_option("--start", orbit_start, "rational num/den")->required();
  orbit_cmd->add_option("--max-iter", orbit_max, "iteration budget");

  // compat-check
  auto* compat_cmd = app.add_subcommand("compat-check", "Kolmogorov compatibility certificate");
  int compat_depth = 2;
  std::string compat_field = "fixed:0";
  long compat_tol = 0;
  compat_cmd->add_option("--depth", compat_depth, "volume depth n")->required();
  compat_cmd->add_option("--field", compat_field, "fixed:<i> or file:<path>");
  compat_cmd->add_option("--tol-exponent", compat_tol, "violation tolerance (default K-8)");

  // measure-norms
  auto* norms_cmd = app.add_subcommand("measure-norms", "closed-form |mu_i| vs brute force");
  int norms_depth = 2, norms_measure = 0;
  norms_cmd->add_option("--depth", norms_depth, "volume depth n (1..3)")->required();
  norms_cmd->add_option("--measure", norms_measure, "measure index 0|1|2")->required();

  // phase
  auto* phase_cmd = app.add_subcommand("phase", "phase-transition diagnosis");
  int phase_nmax = 6;
  phase_cmd->add_option("--n-max", phase_nmax, "witness depth range");

  // phase-diagram
  auto* grid_cmd = app.add_subcommand("phase-diagram", "CSV verdict grid over (p, q, N)");
  std::string grid_plist = "3,5,7";
  std::string grid_qrange = "1:5", grid_nrange = "-3:3";
  grid_cmd->add_option("--p-list", grid_plist, "comma-separated primes");
  grid_cmd->add_option("--q-range", grid_qrange, "lo:hi");
  grid_cmd->add_option("--n-range", grid_nrange, "lo:hi");

  // self-test
  auto* self_cmd = app.add_subcommand("self-test", "run every property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sqrt_cmd->parsed()) {
      auto params = make_params(opt, false);
      PadicNumber a = parse_rational(sqrt_arg, opt.p, params.prec);
      SqrtResult r = padic_sqrt(a);
      emit(io::to_json(r, a), opt.format);
      return r.exists ? kExitOk : kExitNonexistent;
    }

    if (fp_cmd->parsed()) {
      auto params = make_params(opt);
      auto report = dynamics::fixed_points(params);
      Json j;
      j["params"] = io::to_json(params);
      j["report"] = io::to_json(report);
      emit(j, opt.format);
      return kExitOk;
    }

    if (cls_cmd->parsed()) {
      auto params = make_params(opt);
      auto fps = dynamics::fixed_points(params);
      Json points = Json::array();
      auto classify_one = [&](const std::string& name, const PadicNumber& x) {
        auto c = dynamics::classify_fixed_point(x, params);
        Json j;
        j["name"] = name;
        j["class"] = dynamics::to_string(c.cls);
        j["multiplier_norm_exponent"] = c.multiplier_exponent;
        points.push_back(j);
      };
      if (!cls_value.empty()) {
        classify_one("input", parse_rational(cls_value, opt.p, params.prec));
      } else {
        if (cls_target == "x0" || cls_target == "all") classify_one("x0", fps.x0.value);
        if ((cls_target == "x1" || cls_target == "all") && fps.x1)
          classify_one("x1", fps.x1->value);
        if ((cls_target == "x2" || cls_target == "all") && fps.x2)
          classify_one("x2", fps.x2->value);
        if (cls_target != "x0" && cls_target != "all" && !fps.roots_exist)
          throw MeasureUndefined("requested fixed point does not exist: " +
                                 fps.existence_detail);
      }
      Json j;
      j["params"] = io::to_json(params);
      j["classification"] = points;
      emit(j, opt.format);
      return kExitOk;
    }

    if (orbit_cmd->parsed()) {
      auto params = make_params(opt);
      PadicNumber start = parse_rational(orbit_start, opt.p, params.prec);
      auto r = dynamics::iterate_orbit(start, params, orbit_max);
      Json j;
      j["params"] = io::to_json(params);
      j["orbit"] = io::to_json(r);
      emit(j, opt.format);
      return kExitOk;
    }

    if (compat_cmd->parsed()) {
      auto params = make_params(opt);
      long tol = compat_tol > 0 ? compat_tol : params.prec.digits - 8;
      auto field = field_from_arg(compat_field, params);
      auto report = potts::compatibility_check(compat_depth, field, params, tol,
                                               8, opt.enum_cap);
      Json j;
      j["params"] = io::to_json(params);
      j["compatibility"] = io::to_json(report);
      emit(j, opt.format);
      return kExitOk;
    }

    if (norms_cmd->parsed()) {
      auto params = make_params(opt);
      auto report = phase::brute_force_cross_check(norms_measure, norms_depth, params);
      auto formula = phase::measure_norm_formula(norms_measure, params);
      Json j;
      j["params"] = io::to_json(params);
      Json jf;
      jf["constant"] = formula.constant;
      jf["coeff_volume_prev"] = formula.coeff_volume;
      jf["coeff_boundary_count"] = formula.coeff_count;
      jf["coeff_hamiltonian"] = -1;
      jf["coeff_h0_valuation"] = formula.coeff_h0;
      j["formula"] = jf;
      j["cross_check"] = io::to_json(report);
      emit(j, opt.format);
      return kExitOk;
    }

    if (phase_cmd->parsed()) {
      auto params = make_params(opt);
      auto report = phase::phase_diagnosis(params, phase_nmax);
      emit(io::to_json(report), opt.format);
      return kExitOk;
    }

    if (grid_cmd->parsed()) {
      auto parse_range = [](const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw Error("range must be lo:hi");
        return std::pair<int, int>{std::stoi(s.substr(0, colon)),
                                   std::stoi(s.substr(colon + 1))};
      };
      std::vector<long> primes;
      std::stringstream ss(grid_plist);
      std::string tok;
      while (std::getline(ss, tok, ',')) primes.push_back(std::stol(tok));
      auto [qlo, qhi] = parse_range(grid_qrange);
      auto [nlo, nhi] = parse_range(grid_nrange);
      std::cout << "p,q,N,verdict\n";
      for (long p : primes) {
        for (int q = qlo; q <= qhi; ++q) {
          for (int N = nlo; N <= nhi; ++N) {
            if (N == 0) continue;
            Options cell = opt;
            cell.p = p;
            cell.q = q;
            cell.N = N;
            auto params = make_params(cell);
            auto report = phase::phase_diagnosis(params);
            std::cout << p << "," << q << "," << N << ","
                      << phase::to_string(report.verdict) << "\n";
          }
        }
      }
      return kExitOk;
    }

    if (self_cmd->parsed()) {
      auto results = selftest::run_all(opt.seed);
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.detail << ")\n";
        all = all && r.pass;
      }
      std::cout << (all ? "self-test: all suites passed"
                        : "self-test: FAILURES PRESENT")
                << "\n";
      return all ? kExitOk : kExitUsage;
    }
  } catch (const MeasureUndefined& e) {
    std::cerr << "nonexistent: " << e.what() << "\n";
    return kExitNonexistent;
  } catch (const NotAFixedPoint& e) {
    std::cerr << "nonexistent: " << e.what() << "\n";
    return kExitNonexistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
