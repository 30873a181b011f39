#include "semreg/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "semreg/errors.hpp"
#include "semreg/expression_text.hpp"

namespace semreg {

namespace {

using nlohmann::json;

std::string real_or_undefined(const std::optional<double>& v) {
  return v ? format_real(*v) : "undefined";
}

json real_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json limit_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json("unlimited"); }

json hyperparameters_json(const Hyperparameters& hp) {
  return json{{"strategy", hp.strategy},
              {"min_improvement", hp.min_improvement},
              {"max_nodes", limit_json(hp.max_nodes)},
              {"max_iterations", limit_json(hp.max_iterations)},
              {"goal_mse", hp.goal_mse}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string limit_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "unlimited";
}

}  // namespace

std::string fit_summary_text(const FitReport& report, const Hyperparameters& hp) {
  const TreeMetrics metrics = tree_metrics(report.tree);
  std::ostringstream out;
  out << "expression:  " << report.expression << "\n"
      << "train MSE:   " << format_real(report.train_mse) << "\n"
      << "iterations:  " << report.iterations << "\n"
      << "stop reason: " << to_string(report.stop_reason) << "\n"
      << "nodes:       " << metrics.node_count << " (height " << metrics.height << ")\n"
      << "strategy:    " << hp.strategy << ", min_improvement " << format_real(hp.min_improvement)
      << ", max_nodes " << limit_text(hp.max_nodes) << "\n"
      << "seconds:     " << report.seconds << "\n";
  return out.str();
}

std::string trace_tsv(const FitReport& report) {
  std::string out = "iteration\tstep\tnode_id\tnode_count\theight\tmse\texpression\n";
  for (const auto& e : report.trace) {
    out += std::to_string(e.iteration) + '\t' + std::string(to_string(e.kind)) + '\t' +
           (e.node_id == kNoNode ? std::string("-") : std::to_string(e.node_id)) + '\t' +
           std::to_string(e.node_count) + '\t' + std::to_string(e.height) + '\t' +
           format_real(e.mse) + '\t' + e.expression + '\n';
  }
  return out;
}

std::string fit_json(const FitReport& report, const Hyperparameters& hp) {
  const TreeMetrics metrics = tree_metrics(report.tree);
  json trace = json::array();
  for (const auto& e : report.trace) {
    trace.push_back({{"iteration", e.iteration},
                     {"step", to_string(e.kind)},
                     {"node_id", e.node_id == kNoNode ? json(nullptr) : json(e.node_id)},
                     {"node_count", e.node_count},
                     {"height", e.height},
                     {"mse", e.mse},
                     {"expression", e.expression}});
  }
  return dump(json{{"expression", report.expression},
                   {"train_mse", report.train_mse},
                   {"iterations", report.iterations},
                   {"stop_reason", to_string(report.stop_reason)},
                   {"node_count", metrics.node_count},
                   {"height", metrics.height},
                   {"hyperparameters", hyperparameters_json(hp)},
                   {"trace", trace}});
}

std::string cv_folds_tsv(const CvResult& result) {
  std::string out =
      "fold\ttrain_mse\ttest_mse\tnode_count\theight\titerations\tstop_reason\texpression\n";
  for (const auto& f : result.folds) {
    out += std::to_string(f.fold) + '\t' + format_real(f.train_mse) + '\t' +
           real_or_undefined(f.test_mse) + '\t' + std::to_string(f.node_count) + '\t' +
           std::to_string(f.height) + '\t' + std::to_string(f.iterations) + '\t' +
           std::string(to_string(f.stop_reason)) + '\t' + f.expression + '\n';
  }
  const CvSummary& s = result.summary;
  out += "mean\t" + format_real(s.mean_train_mse) + '\t' + real_or_undefined(s.mean_test_mse) +
         '\t' + format_real(s.mean_node_count) + '\t' + format_real(s.mean_height) + "\t-\t-\t-\n";
  out += "std\t" + format_real(s.std_train_mse) + '\t' + real_or_undefined(s.std_test_mse) +
         "\t-\t-\t-\t-\t-\n";
  out += "median\t-\t" + real_or_undefined(s.median_test_mse) + "\t-\t-\t-\t-\t-\n";
  return out;
}

std::string cv_timing_tsv(const CvResult& result) {
  std::string out = "fold\tseconds\n";
  for (const auto& f : result.folds) {
    out += std::to_string(f.fold) + '\t' + format_real(f.seconds) + '\n';
  }
  out += "total\t" + format_real(result.summary.total_seconds) + '\n';
  return out;
}

std::string cv_summary_text(const CvResult& result) {
  const CvSummary& s = result.summary;
  std::ostringstream out;
  out << "folds:            " << result.folds.size() << "\n"
      << "mean train MSE:   " << format_real(s.mean_train_mse) << " (std "
      << format_real(s.std_train_mse) << ")\n"
      << "mean test MSE:    " << real_or_undefined(s.mean_test_mse) << " (std "
      << real_or_undefined(s.std_test_mse) << ")\n"
      << "median test MSE:  " << real_or_undefined(s.median_test_mse) << "\n"
      << "undefined folds:  " << s.undefined_test_folds << "\n"
      << "mean nodes:       " << s.mean_node_count << "\n"
      << "seconds:          " << s.total_seconds << "\n";
  return out.str();
}

std::string cv_json(const CvResult& result, std::size_t k, const Hyperparameters& hp) {
  json folds = json::array();
  for (const auto& f : result.folds) {
    folds.push_back({{"fold", f.fold},
                     {"train_mse", f.train_mse},
                     {"test_mse", real_or_null(f.test_mse)},
                     {"node_count", f.node_count},
                     {"height", f.height},
                     {"iterations", f.iterations},
                     {"stop_reason", to_string(f.stop_reason)},
                     {"expression", f.expression}});
  }
  const CvSummary& s = result.summary;
  return dump(json{{"k", k},
                   {"hyperparameters", hyperparameters_json(hp)},
                   {"folds", folds},
                   {"summary",
                    {{"mean_train_mse", s.mean_train_mse},
                     {"std_train_mse", s.std_train_mse},
                     {"mean_test_mse", real_or_null(s.mean_test_mse)},
                     {"std_test_mse", real_or_null(s.std_test_mse)},
                     {"median_test_mse", real_or_null(s.median_test_mse)},
                     {"undefined_test_folds", s.undefined_test_folds},
                     {"mean_node_count", s.mean_node_count},
                     {"mean_height", s.mean_height}}}});
}

std::string grid_long_tsv(const GridReport& report) {
  std::string out = "strategy\tmin_improvement\tmax_nodes\tmetric\tvalue\n";
  for (const auto& cell : report.cells) {
    const std::string key = std::to_string(cell.strategy) + '\t' +
                            format_real(cell.min_improvement) + '\t' +
                            std::to_string(cell.max_nodes) + '\t';
    const auto row = [&](const char* metric, const std::string& value) {
      out += key + metric + '\t' + (cell.result ? value : std::string("error")) + '\n';
    };
    CvSummary s;
    if (cell.result) s = cell.result->summary;
    row("mean_train_mse", format_real(s.mean_train_mse));
    row("std_train_mse", format_real(s.std_train_mse));
    row("mean_test_mse", real_or_undefined(s.mean_test_mse));
    row("std_test_mse", real_or_undefined(s.std_test_mse));
    row("median_test_mse", real_or_undefined(s.median_test_mse));
    row("mean_node_count", format_real(s.mean_node_count));
    row("mean_height", format_real(s.mean_height));
    row("undefined_test_folds", std::to_string(s.undefined_test_folds));
  }
  return out;
}

std::string grid_timing_tsv(const GridReport& report) {
  std::string out = "strategy\tmin_improvement\tmax_nodes\tmean_seconds\n";
  for (const auto& cell : report.cells) {
    out += std::to_string(cell.strategy) + '\t' + format_real(cell.min_improvement) + '\t' +
           std::to_string(cell.max_nodes) + '\t' +
           (cell.result ? format_real(cell.result->summary.mean_seconds) : "error") + '\n';
  }
  return out;
}

std::string grid_best_tsv(const GridReport& report) {
  std::string out =
      "strategy\tselection\tmin_improvement\tmax_nodes\tmean_train_mse\tstd_train_mse\t"
      "mean_test_mse\tstd_test_mse\tmedian_test_mse\n";
  const auto row = [&](int strategy, const char* selection, const GridCell* cell) {
    out += std::to_string(strategy) + '\t' + selection + '\t';
    if (!cell) {
      out += "-\t-\t-\t-\t-\t-\t-\n";
      return;
    }
    const CvSummary& s = cell->result->summary;
    out += format_real(cell->min_improvement) + '\t' + std::to_string(cell->max_nodes) + '\t' +
           format_real(s.mean_train_mse) + '\t' + format_real(s.std_train_mse) + '\t' +
           real_or_undefined(s.mean_test_mse) + '\t' + real_or_undefined(s.std_test_mse) + '\t' +
           real_or_undefined(s.median_test_mse) + '\n';
  };
  for (const auto& best : best_cells(report)) {
    row(best.strategy, "best_train", best.best_train);
    row(best.strategy, "best_test", best.best_test);
  }
  return out;
}

std::string grid_errors_tsv(const GridReport& report) {
  std::string out = "strategy\tmin_improvement\tmax_nodes\terror\n";
  for (const auto& cell : report.cells) {
    if (cell.result) continue;
    std::string message = cell.error;
    for (char& ch : message) {
      if (ch == '\t' || ch == '\n') ch = ' ';
    }
    out += std::to_string(cell.strategy) + '\t' + format_real(cell.min_improvement) + '\t' +
           std::to_string(cell.max_nodes) + '\t' + message + '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace semreg
