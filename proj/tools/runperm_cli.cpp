// runperm: exact run-pattern permutation counts, extrema-spacing law, and
// the spacing-based i.i.d. test.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "runperm/classical.hpp"
#include "runperm/convolution.hpp"
#include "runperm/exact.hpp"
#include "runperm/extrema.hpp"
#include "runperm/omega.hpp"
#include "runperm/oracle.hpp"
#include "runperm/pattern.hpp"
#include "runperm/routes.hpp"
#include "runperm/series.hpp"
#include "runperm/simulation.hpp"

using nlohmann::json;
using namespace runperm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitReject = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBudget = 65;

struct Output {
  bool as_json = false;
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::ostringstream text;
};

void emit(Output& out, std::chrono::steady_clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (out.as_json) {
    json doc = {{"command", out.command}, {"inputs", out.inputs}, {"outputs", out.outputs}, {"elapsed_ms", ms}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::vector<std::uint32_t> parse_spacings(const std::string& text) {
  std::vector<std::uint32_t> ks;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad spacing '" + field + "'");
    }
    if (used != field.size() || v == 0 || v > 100000) throw std::invalid_argument("bad spacing '" + field + "'");
    ks.push_back(static_cast<std::uint32_t>(v));
  }
  if (ks.empty()) throw std::invalid_argument("no spacings given");
  return ks;
}

json moment_json(const MomentEstimate& m) {
  return {{"value", m.value},
          {"partial_sum", to_string(m.partial_sum)},
          {"cutoff", m.cutoff},
          {"tail_bound", m.tail_bound},
          {"closed_form", m.closed_form},
          {"difference", m.value - m.closed_form}};
}

json stats_json(const SpacingStats& st) {
  json hist = json::object();
  for (const auto& [k, c] : st.histogram) hist[std::to_string(k)] = c;
  return {{"spacings", st.count},
          {"mean", st.mean},
          {"variance", st.variance},
          {"lag1_autocorrelation", st.lag1_autocorrelation},
          {"fraction_1", st.fraction(1)},
          {"histogram", hist}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of permutations with prescribed monotone runs, and the law of spacings between local "
               "extrema of i.i.d. sequences"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "Emit the stable JSON schema instead of a table");

  std::function<int()> action;
  OmegaEngine engine;

  // omega
  std::string pattern_text;
  std::string route_name = "recurrence";
  std::uint32_t max_elements = OracleBudget::kDefaultMaxElements;
  auto* omega_cmd = app.add_subcommand("omega", "Exact Omega count of a run pattern");
  omega_cmd->add_option("pattern", pattern_text, "Run pattern, e.g. \"+2,-1,+3\" or \"2,1,3\"")->required();
  omega_cmd->add_option("--route", route_name, "recurrence|max|min|bilateral|oracle|all")
      ->check(CLI::IsMember({"recurrence", "max", "min", "bilateral", "oracle", "all"}));
  omega_cmd->add_option("--max-elements", max_elements, "Brute-force oracle budget (N + 1 <= 11)");
  omega_cmd->callback([&] {
    action = [&]() -> int {
      const RunPattern p = parse_pattern(pattern_text);
      const OracleBudget budget(max_elements);
      out.inputs = {{"pattern", format_pattern(p)}, {"route", route_name}};
      if (route_name != "all") {
        const BigCount v = omega_by(parse_route(route_name), p, engine, budget);
        out.outputs = {{"omega", to_string(v)}};
        out.text << to_string(v) << "\n";
        return kExitOk;
      }
      const CrossCheck check = cross_check(p, engine, budget);
      json routes = json::object();
      for (const RouteValue& rv : check.values) {
        routes[to_string(rv.route)] = to_string(rv.value);
        out.text << std::left << std::setw(12) << to_string(rv.route) << to_string(rv.value) << "\n";
      }
      out.outputs = {{"routes", routes}, {"agree", check.agree}};
      if (check.oracle_skipped) {
        out.outputs["oracle_skipped"] = *check.oracle_skipped;
        out.text << "oracle      skipped (" << *check.oracle_skipped << ")\n";
      }
      out.text << (check.agree ? "all routes agree\n" : "ROUTES DISAGREE\n");
      return check.agree ? kExitOk : kExitFailure;
    };
  });

  // omega-prime
  auto* prime_cmd = app.add_subcommand("omega-prime", "Omega / (N+1)! as a reduced fraction");
  prime_cmd->add_option("pattern", pattern_text, "Run pattern")->required();
  prime_cmd->callback([&] {
    action = [&]() -> int {
      const RunPattern p = parse_pattern(pattern_text);
      const ExactRational q = engine.omega_prime(p);
      out.inputs = {{"pattern", format_pattern(p)}};
      out.outputs = {{"omega_prime", to_string(q)}, {"approx", q.get_d()}};
      out.text << to_string(q) << "\n";
      return kExitOk;
    };
  });

  // pmf
  std::uint32_t k_max = 0;
  auto* pmf_cmd = app.add_subcommand("pmf", "Marginal law of the extremum spacing up to K");
  pmf_cmd->add_option("K", k_max, "Largest spacing")->required()->check(CLI::Range(1u, 1000u));
  pmf_cmd->callback([&] {
    action = [&]() -> int {
      const SpacingPmf pmf = spacing_pmf(k_max);
      out.inputs = {{"K", k_max}};
      json rows = json::array();
      out.text << std::left << std::setw(6) << "k" << std::setw(28) << "P{mu=k}" << "approx\n";
      for (std::uint32_t k = 1; k <= k_max; ++k) {
        const ExactRational& p = pmf.values[k - 1];
        rows.push_back({{"k", k}, {"p", to_string(p)}, {"approx", p.get_d()}});
        out.text << std::left << std::setw(6) << k << std::setw(28) << to_string(p) << fixed(p.get_d()) << "\n";
      }
      out.outputs = {{"pmf", rows}, {"tail_bound", pmf.tail_bound}};
      out.text << "tail P{mu>" << k_max << "} <= " << fixed(pmf.tail_bound, 6) << "\n";
      return kExitOk;
    };
  });

  // joint
  std::string joint_text;
  auto* joint_cmd = app.add_subcommand("joint", "Exact joint probability P{mu_0 = k0, mu_1 = k1, ...}");
  joint_cmd->add_option("spacings", joint_text, "Comma-separated spacings, e.g. 1,1")->required();
  joint_cmd->callback([&] {
    action = [&]() -> int {
      const auto ks = parse_spacings(joint_text);
      const ExactRational p = mu_joint(ks, engine);
      out.inputs = {{"spacings", ks}};
      out.outputs = {{"probability", to_string(p)}, {"approx", p.get_d()}};
      out.text << to_string(p) << "\n";
      return kExitOk;
    };
  });

  // moments
  double tolerance = 1e-12;
  auto* moments_cmd = app.add_subcommand("moments", "Mean, variance and lag-1 correlation of the spacing law");
  moments_cmd->add_option("--tol", tolerance, "Certified truncation tolerance")->check(CLI::PositiveNumber);
  moments_cmd->callback([&] {
    action = [&]() -> int {
      const MomentEstimate mean = mu_mean(tolerance);
      const MomentEstimate var = mu_variance(tolerance);
      const MomentEstimate corr = mu_lag1_correlation(tolerance, engine);
      out.inputs = {{"tol", tolerance}};
      out.outputs = {{"mean", moment_json(mean)}, {"variance", moment_json(var)}, {"lag1_correlation", moment_json(corr)}};
      out.text << std::left << std::setw(18) << "quantity" << std::setw(22) << "series" << std::setw(22)
               << "closed form" << "cutoff\n";
      for (const auto& [name, m] : {std::pair{"mean", mean}, std::pair{"variance", var}, std::pair{"lag1_corr", corr}}) {
        out.text << std::left << std::setw(18) << name << std::setw(22) << fixed(m.value, 15) << std::setw(22)
                 << fixed(m.closed_form, 15) << m.cutoff << "\n";
      }
      return kExitOk;
    };
  });

  // series-check
  std::uint32_t series_n = 0;
  std::uint32_t series_d = 8;
  auto* series_cmd = app.add_subcommand("series-check", "Compare generating-function coefficients with Omega");
  series_cmd->add_option("N", series_n, "Number of variables (1..4)")->required()->check(CLI::Range(1u, 4u));
  series_cmd->add_option("D", series_d, "Total degree")->check(CLI::Range(0u, 24u));
  series_cmd->callback([&] {
    action = [&]() -> int {
      const auto mismatches = verify_generating_function(series_n, series_d, engine);
      const std::size_t checked = monomials_up_to(series_n, series_d).size();
      json bad = json::array();
      for (const SeriesMismatch& m : mismatches) {
        bad.push_back({{"exponents", m.exponents}, {"coefficient", to_string(m.coefficient)}, {"omega", to_string(m.omega)}});
        out.text << "mismatch at " << json(m.exponents).dump() << ": coefficient " << to_string(m.coefficient)
                 << ", omega " << to_string(m.omega) << "\n";
      }
      out.inputs = {{"N", series_n}, {"D", series_d}};
      out.outputs = {{"coefficients_checked", checked}, {"mismatches", bad}};
      out.text << checked << " coefficients checked, " << mismatches.size() << " mismatches\n";
      return mismatches.empty() ? kExitOk : kExitFailure;
    };
  });

  // classical
  std::uint32_t classical_n = 0;
  auto* classical_cmd = app.add_subcommand("classical", "Zigzag numbers against Euler and Bernoulli numbers");
  classical_cmd->add_option("N", classical_n, "Check identities for n = 1..N")->required()->check(CLI::Range(1u, 14u));
  classical_cmd->callback([&] {
    action = [&]() -> int {
      json zig = json::array();
      out.text << "zigzag b_1..b_" << 2 * classical_n << ":";
      for (std::uint32_t i = 1; i <= 2 * classical_n; ++i) {
        const BigCount b = zigzag(i, engine);
        zig.push_back(to_string(b));
        out.text << " " << to_string(b);
      }
      out.text << "\n";
      json rows = json::array();
      bool all_pass = true;
      for (std::uint32_t n = 1; n <= classical_n; ++n) {
        for (const IdentityReport& r : {verify_euler_identity(n, engine), verify_bernoulli_identity(n, engine)}) {
          all_pass = all_pass && r.pass;
          rows.push_back({{"identity", r.identity}, {"n", r.n}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)},
                          {"pass", r.pass}});
          out.text << (r.pass ? "PASS " : "FAIL ") << r.identity << "  n=" << r.n << "  " << to_string(r.lhs)
                   << " vs " << to_string(r.rhs) << "\n";
        }
      }
      out.inputs = {{"N", classical_n}};
      out.outputs = {{"zigzag", zig}, {"identities", rows}, {"all_pass", all_pass}};
      return all_pass ? kExitOk : kExitFailure;
    };
  });

  // simulate
  SimulationConfig sim;
  std::string dist_name = "uniform01";
  auto* sim_cmd = app.add_subcommand("simulate", "Empirical extremum-spacing statistics of a seeded i.i.d. run");
  sim_cmd->add_option("--seed", sim.seed, "RNG seed")->required();
  sim_cmd->add_option("--length", sim.length, "Number of samples")->required();
  sim_cmd->add_option("--dist", dist_name, "uniform01|gaussian|exponential");
  sim_cmd->callback([&] {
    action = [&]() -> int {
      sim.distribution = parse_distribution(dist_name);
      const auto xs = generate_sequence(sim);
      const SpacingStats st = empirical_spacing_stats(extract_extrema(xs));
      out.inputs = {{"seed", sim.seed}, {"length", sim.length}, {"dist", to_string(sim.distribution)}};
      out.outputs = stats_json(st);
      out.outputs["theory"] = {{"mean", closed_form_mean()},
                               {"variance", closed_form_variance()},
                               {"lag1_correlation", closed_form_lag1_correlation()},
                               {"fraction_1", 0.625}};
      out.outputs["mean_standard_error"] = spacing_mean_standard_error(st.count);
      out.text << "spacings      " << st.count << "\n"
               << "mean          " << fixed(st.mean) << "  (theory 1.5)\n"
               << "variance      " << fixed(st.variance) << "  (theory " << fixed(closed_form_variance()) << ")\n"
               << "lag1 autocorr " << fixed(st.lag1_autocorrelation) << "  (theory "
               << fixed(closed_form_lag1_correlation()) << ")\n"
               << "P{mu=1}       " << fixed(st.fraction(1)) << "  (theory 0.625)\n";
      return kExitOk;
    };
  });

  // lln
  SimulationConfig lln;
  std::vector<std::uint64_t> checkpoints{1000, 10000, 100000, 1000000};
  std::string lln_dist = "uniform01";
  auto* lln_cmd = app.add_subcommand("lln", "Running spacing means at increasing sequence lengths (empirical only)");
  lln_cmd->add_option("--seed", lln.seed, "RNG seed")->required();
  lln_cmd->add_option("--checkpoints", checkpoints, "Increasing sequence lengths");
  lln_cmd->add_option("--dist", lln_dist, "uniform01|gaussian|exponential");
  lln_cmd->callback([&] {
    action = [&]() -> int {
      lln.distribution = parse_distribution(lln_dist);
      const auto trace = lln_experiment(lln, checkpoints);
      json rows = json::array();
      out.text << "empirical running means; the law of large numbers for spacings is a conjecture\n";
      out.text << std::left << std::setw(12) << "length" << std::setw(12) << "spacings" << std::setw(20) << "mean"
               << "band(3se)\n";
      for (const LlnPoint& pt : trace) {
        rows.push_back({{"length", pt.length}, {"spacings", pt.spacings}, {"running_mean", pt.running_mean},
                        {"band", pt.band}, {"within_band", pt.within_band}});
        out.text << std::left << std::setw(12) << pt.length << std::setw(12) << pt.spacings << std::setw(20)
                 << fixed(pt.running_mean) << fixed(pt.band, 6) << "\n";
      }
      out.inputs = {{"seed", lln.seed}, {"checkpoints", checkpoints}, {"dist", to_string(lln.distribution)}};
      out.outputs = {{"trace", rows}, {"limit", closed_form_mean()}, {"note", "empirical evidence, not a proof"}};
      return kExitOk;
    };
  });

  // test-iid
  std::string data_file;
  double alpha = 0.01;
  auto* test_cmd = app.add_subcommand("test-iid", "Spacing-law test of the i.i.d. hypothesis (exit 0 accept, 2 reject)");
  test_cmd->add_option("file", data_file, "One number per line; '-' reads standard input")->required();
  test_cmd->add_option("--alpha", alpha, "Significance level");
  test_cmd->callback([&] {
    action = [&]() -> int {
      std::vector<double> xs;
      if (data_file == "-") {
        xs = read_series(std::cin);
      } else {
        std::ifstream in(data_file);
        if (!in) throw std::runtime_error("cannot open '" + data_file + "'");
        xs = read_series(in);
      }
      const TestReport r = iid_test(xs, alpha);
      if (out.as_json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else {
        std::cout << std::left << std::setw(10) << "bin" << std::setw(12) << "observed" << "expected\n";
        for (const TestBin& b : r.bins) {
          std::cout << std::left << std::setw(10) << b.label << std::setw(12) << b.observed << fixed(b.expected, 8)
                    << "\n";
        }
        std::cout << "chi-square " << fixed(r.statistic, 8) << " on " << r.df << " df, p-value "
                  << fixed(r.p_value, 8) << "\n"
                  << "spacing mean " << fixed(r.mean, 8) << ", z = " << fixed(r.mean_z, 6)
                  << " (approximate, spacings are weakly dependent)\n"
                  << "decision at alpha " << r.alpha << ": " << r.decision() << "\n";
      }
      return r.reject ? kExitReject : kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool is_test = test_cmd->parsed();
  out.command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const int code = action();
    if (!is_test) emit(out, start);
    return code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_test ? kExitFailure : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
