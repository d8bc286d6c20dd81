// seqsamp: solve budgeted sampling LPs and run forced-selection policy experiments.
//
// Exit codes: 0 success, 2 invalid instance/config/arguments, 3 I/O failure.

#include "seqsamp/config.hpp"
#include "seqsamp/csv.hpp"
#include "seqsamp/experiment.hpp"
#include "seqsamp/report.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

using namespace seqsamp;

unsigned default_threads() {
  if (const char* env = std::getenv("SEQSAMP_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw ConfigError(fmt::format("SEQSAMP_THREADS='{}' is not a non-negative integer", env));
  }
  return 0;
}

double parse_double(const std::string& text) {
  if (text.find('/') != std::string::npos) return static_cast<double>(parse_rational(text));
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument(fmt::format("not a number: '{}'", text));
  return value;
}

template <typename Scalar>
Vector<Scalar> parse_vector(const std::vector<std::string>& items) {
  Vector<Scalar> v(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      v[static_cast<Eigen::Index>(i)] = parse_double(items[i]);
    } else {
      v[static_cast<Eigen::Index>(i)] = parse_rational(items[i]);
    }
  }
  return v;
}

template <typename Scalar>
void run_solve(const std::vector<std::string>& costs, const std::string& budget, const std::vector<std::string>& means) {
  Scalar c0;
  if constexpr (std::is_same_v<Scalar, double>) {
    c0 = parse_double(budget);
  } else {
    c0 = parse_rational(budget);
  }
  const ProblemInstance<Scalar> instance(parse_vector<Scalar>(costs), c0, parse_vector<Scalar>(means));
  std::cout << format_solve_report(make_solve_report(instance));
}

void print_run(const RunOutput& run) {
  const auto& last = run.summary.rows.back();
  fmt::print("beta={} n={} mean_avg_outcome={} regret={} ci=[{}, {}] mean_avg_cost={} cost_tail_proxy={}{}\n",
             format_number(run.summary.beta), last.n, format_number(last.mean_avg_outcome),
             format_number(last.regret), format_number(last.ci_lo), format_number(last.ci_hi),
             format_number(last.mean_avg_cost), format_number(run.feasibility.tail_proxy),
             run.feasibility.infeasible ? " (exceeds budget)" : "");
  for (const auto& f : run.files) fmt::print("wrote {}\n", f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-constrained sequential sampling: LP solver and policy simulator"};
  app.require_subcommand(1);

  std::vector<std::string> costs, means;
  std::string budget;
  bool float_mode = false;
  auto* solve = app.add_subcommand("solve", "Enumerate the basis set and solve the sampling LP");
  solve->add_option("--costs", costs, "Sampling costs, comma separated")->required()->delimiter(',');
  solve->add_option("--budget", budget, "Per-period cost budget C0")->required();
  solve->add_option("--means", means, "Mean outcomes, comma separated")->required()->delimiter(',');
  solve->add_flag("--float", float_mode, "Use double precision instead of exact rationals");

  std::string config_path, out_dir;
  int threads = -1;
  bool traces = false;
  auto* simulate = app.add_subcommand("simulate", "Replicate the policy and write summary/diagnostics CSVs");
  simulate->add_option("--config", config_path, "Experiment config (JSON)")->required();
  simulate->add_option("--out", out_dir, "Output directory (defaults to the config's output_dir)");
  simulate->add_option("--threads", threads, "Worker threads (default: $SEQSAMP_THREADS or all cores)");
  simulate->add_flag("--traces", traces, "Also write per-scenario trace CSVs");

  std::vector<double> betas{1.2, 1.5, 2.0, 3.0, 5.0};
  auto* sweep = app.add_subcommand("sweep", "Run the experiment for several schedule exponents");
  sweep->add_option("--config", config_path, "Experiment config (JSON)")->required();
  sweep->add_option("--betas", betas, "Schedule exponents, comma separated")->delimiter(',');
  sweep->add_option("--out", out_dir, "Output directory (defaults to the config's output_dir)");
  sweep->add_option("--threads", threads, "Worker threads (default: $SEQSAMP_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*solve) {
      if (float_mode) {
        run_solve<double>(costs, budget, means);
      } else {
        run_solve<Rational>(costs, budget, means);
      }
      return 0;
    }

    const ExperimentConfig config = load_config(config_path);
    const unsigned workers = threads >= 0 ? static_cast<unsigned>(threads) : default_threads();
    const std::string dir = out_dir.empty() ? config.output_dir : out_dir;
    if (*simulate) {
      print_run(simulate_to_directory(config, dir, workers, traces));
    } else {
      for (const auto& run : sweep_to_directory(config, betas, dir, workers)) print_run(run);
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
