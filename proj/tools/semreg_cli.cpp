// semreg command-line front end: fit, cv, grid, gen-newton.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semreg/cross_validation.hpp"
#include "semreg/dataset_io.hpp"
#include "semreg/engine.hpp"
#include "semreg/errors.hpp"
#include "semreg/expression_text.hpp"
#include "semreg/grid.hpp"
#include "semreg/newton.hpp"
#include "semreg/report.hpp"

namespace fs = std::filesystem;
using namespace semreg;

namespace {

constexpr std::size_t kDefaultIterationCap = 10000;

struct DataFlags {
  std::string path;
  std::string delimiter = ",";
  bool header = false;
  std::optional<std::size_t> target_col;
};

struct FitFlags {
  int strategy = 1;
  double min_improvement = 1e-6;
  std::string max_nodes = "unlimited";
  std::string max_iterations = std::to_string(kDefaultIterationCap);
  std::string goal_mse = "0";
};

void add_data_flags(CLI::App& cmd, DataFlags& flags) {
  cmd.add_option("data", flags.path, "Delimited numeric data file")->required();
  cmd.add_option("--delimiter", flags.delimiter, "Cell delimiter: one character or 'tab'")
      ->capture_default_str();
  cmd.add_flag("--header", flags.header, "First line holds column names");
  cmd.add_option("--target-col", flags.target_col, "0-based target column (default: last)");
}

void add_fit_flags(CLI::App& cmd, FitFlags& flags) {
  cmd.add_option("--strategy", flags.strategy, "Search strategy")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  cmd.add_option("--min-improvement", flags.min_improvement,
                 "Minimum relative MSE decrease for a change")
      ->capture_default_str();
  cmd.add_option("--max-nodes", flags.max_nodes, "Node limit or 'unlimited'")
      ->capture_default_str();
  cmd.add_option("--max-iterations", flags.max_iterations, "Iteration limit or 'unlimited'")
      ->capture_default_str();
  cmd.add_option("--goal-mse", flags.goal_mse, "Target training MSE, or 'mean' for mean(target)")
      ->capture_default_str();
}

std::optional<std::size_t> parse_limit(const std::string& text, const char* flag) {
  if (text == "unlimited") return std::nullopt;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidHyperparameters(std::string(flag) + " expects an integer or 'unlimited', got '" +
                                 text + "'");
  }
  return value;
}

double parse_goal(const std::string& text, const Dataset& data) {
  if (text == "mean") return data.target_mean();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidHyperparameters("--goal-mse expects a number or 'mean', got '" + text + "'");
  }
  return value;
}

Dataset load(const DataFlags& flags) {
  CsvOptions options;
  if (flags.delimiter == "tab" || flags.delimiter == "\\t") {
    options.delimiter = '\t';
  } else if (flags.delimiter.size() == 1) {
    options.delimiter = flags.delimiter.front();
  } else {
    throw Error("--delimiter expects a single character or 'tab'");
  }
  options.header = flags.header;
  options.target_column = flags.target_col;
  return load_dataset(flags.path, options);
}

Hyperparameters make_hyperparameters(const FitFlags& flags, const Dataset& data) {
  Hyperparameters hp;
  hp.strategy = flags.strategy;
  hp.min_improvement = flags.min_improvement;
  hp.max_nodes = parse_limit(flags.max_nodes, "--max-nodes");
  hp.max_iterations = parse_limit(flags.max_iterations, "--max-iterations");
  hp.goal_mse = parse_goal(flags.goal_mse, data);
  hp.validate();
  return hp;
}

int run_fit(const DataFlags& data_flags, const FitFlags& fit_flags, const std::string& out) {
  const Dataset data = load(data_flags);
  const Hyperparameters hp = make_hyperparameters(fit_flags, data);
  const FitReport report = fit(data, hp);
  const std::string summary = fit_summary_text(report, hp);
  std::cout << summary;
  if (!out.empty()) {
    write_text_file(fs::path(out) / "fit_summary.txt", summary);
    write_text_file(fs::path(out) / "fit_report.json", fit_json(report, hp));
    write_text_file(fs::path(out) / "trace.tsv", trace_tsv(report));
  }
  return 0;
}

int run_cv(const DataFlags& data_flags, const FitFlags& fit_flags, std::size_t k,
           const std::string& out) {
  const Dataset data = load(data_flags);
  const Hyperparameters hp = make_hyperparameters(fit_flags, data);
  const CvResult result = cross_validate(data, k, hp);
  std::cout << cv_summary_text(result);
  if (!out.empty()) {
    write_text_file(fs::path(out) / "cv_folds.tsv", cv_folds_tsv(result));
    write_text_file(fs::path(out) / "cv_summary.json", cv_json(result, k, hp));
    write_text_file(fs::path(out) / "cv_timing.tsv", cv_timing_tsv(result));
  }
  return 0;
}

struct GridFlags {
  std::vector<int> strategies;
  std::vector<double> min_improvements;
  std::vector<std::size_t> max_nodes;
};

int run_grid_cmd(const DataFlags& data_flags, const FitFlags& fit_flags,
                 const GridFlags& grid_flags, std::size_t k, const std::string& out) {
  const Dataset data = load(data_flags);
  Hyperparameters base = make_hyperparameters(fit_flags, data);
  base.max_nodes.reset();
  GridSpec spec;
  if (!grid_flags.strategies.empty()) spec.strategies = grid_flags.strategies;
  if (!grid_flags.min_improvements.empty()) spec.min_improvements = grid_flags.min_improvements;
  if (!grid_flags.max_nodes.empty()) spec.max_nodes = grid_flags.max_nodes;
  const GridReport report =
      run_grid(data, k, spec, base, [](const GridCell& cell, std::size_t i, std::size_t total) {
        std::cerr << "[" << (i + 1) << "/" << total << "] strategy " << cell.strategy
                  << " min_improvement " << format_real(cell.min_improvement) << " max_nodes "
                  << cell.max_nodes;
        if (cell.result) {
          std::cerr << ": mean train " << format_real(cell.result->summary.mean_train_mse)
                    << "\n";
        } else {
          std::cerr << ": error: " << cell.error << "\n";
        }
      });
  const std::string best = grid_best_tsv(report);
  std::cout << best;
  if (!out.empty()) {
    write_text_file(fs::path(out) / "grid_long.tsv", grid_long_tsv(report));
    write_text_file(fs::path(out) / "grid_best.tsv", best);
    write_text_file(fs::path(out) / "grid_timing.tsv", grid_timing_tsv(report));
    write_text_file(fs::path(out) / "grid_errors.tsv", grid_errors_tsv(report));
  }
  return 0;
}

int run_gen_newton(std::uint64_t seed, std::size_t patterns, const std::string& out) {
  const std::string text = format_dataset(generate_newton_dataset(seed, patterns));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic semantic-space symbolic regression"};
  app.require_subcommand(1);

  DataFlags data_flags;
  FitFlags fit_flags;
  std::string out;
  std::size_t k = 10;

  auto* fit_cmd = app.add_subcommand("fit", "Fit one expression to a dataset");
  add_data_flags(*fit_cmd, data_flags);
  add_fit_flags(*fit_cmd, fit_flags);
  fit_cmd->add_option("--out", out, "Directory for report files");

  auto* cv_cmd = app.add_subcommand("cv", "k-fold cross-validation");
  add_data_flags(*cv_cmd, data_flags);
  add_fit_flags(*cv_cmd, fit_flags);
  cv_cmd->add_option("--k", k, "Number of folds")->capture_default_str();
  cv_cmd->add_option("--out", out, "Directory for report files");

  GridFlags grid_flags;
  auto* grid_cmd = app.add_subcommand("grid", "Cross-validated hyperparameter grid");
  add_data_flags(*grid_cmd, data_flags);
  grid_cmd->add_option("--strategy", grid_flags.strategies, "Strategies (default 1 2 3 4)")
      ->check(CLI::Range(1, 4));
  grid_cmd->add_option("--min-improvement", grid_flags.min_improvements,
                       "min_improvement values (default 1e-1 ... 1e-10)");
  grid_cmd->add_option("--max-nodes", grid_flags.max_nodes,
                       "max_nodes values (default 5 10 ... 200)");
  grid_cmd->add_option("--max-iterations", fit_flags.max_iterations,
                       "Iteration limit or 'unlimited'")
      ->capture_default_str();
  grid_cmd->add_option("--goal-mse", fit_flags.goal_mse, "Target training MSE or 'mean'")
      ->capture_default_str();
  grid_cmd->add_option("--k", k, "Number of folds")->capture_default_str();
  grid_cmd->add_option("--out", out, "Directory for report files");

  std::uint64_t seed = 1;
  std::size_t patterns = 1000;
  auto* gen_cmd = app.add_subcommand("gen-newton", "Write the synthetic gravitation dataset");
  gen_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--patterns", patterns, "Number of patterns")->capture_default_str();
  gen_cmd->add_option("--out", out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit_cmd) return run_fit(data_flags, fit_flags, out);
    if (*cv_cmd) return run_cv(data_flags, fit_flags, k, out);
    if (*grid_cmd) return run_grid_cmd(data_flags, fit_flags, grid_flags, k, out);
    if (*gen_cmd) return run_gen_newton(seed, patterns, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
