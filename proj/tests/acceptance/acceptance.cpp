// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semreg/constant_fit.hpp"
#include "semreg/cross_validation.hpp"
#include "semreg/dataset_io.hpp"
#include "semreg/engine.hpp"
#include "semreg/newton.hpp"
#include "semreg/report.hpp"
#include "test_support.hpp"

using namespace semreg;
using namespace semreg::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;

  // Keeps the first reason; later ones only bump the count.
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
    ++failures;
  }
};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1

Verdict figure_one_golden() {
  Verdict v;
  const auto start = Clock::now();
  const Dataset data = figure_one_data();
  const EvaluatedTree tree(figure_one_tree(), data);
  const auto eqs = propagate_equations(tree, data.targets());
  const auto rows = figure_one_table();
  if (eqs.size() != rows.size()) {
    v.fail("node count " + std::to_string(eqs.size()));
    return v;
  }
  for (std::size_t id = 0; id < rows.size(); ++id) {
    const std::string at = "node " + std::to_string(id + 1);
    for (std::size_t i = 0; i < 3; ++i) {
      const double want = rows[id].semantics[i];
      const double got = tree.semantics(id)[i];
      const double tol = rows[id].semantics_tolerance;
      if (!(tol == 0.0 ? near(got, want) : std::abs(got - want) <= tol)) {
        v.fail(at + " semantics");
      }
      if (!term_matches(eqs[id], i, rows[id].terms[i])) v.fail(at + " equation");
    }
    if (!forbidden_matches(eqs[id].forbidden, rows[id].forbidden)) v.fail(at + " forbidden set");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) v.fail("runtime " + fmt("%.3f s", elapsed));
  if (v.pass) v.detail = "11 rows, " + fmt("%.4f s", elapsed);
  return v;
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3

struct RandomCase {
  Dataset data;
  EvaluatedTree tree;
};

std::optional<RandomCase> random_case(std::mt19937_64& rng) {
  const std::size_t vars = 1 + uniform_index(rng, 5);
  const std::size_t n = 2 + uniform_index(rng, 49);
  Dataset data = random_dataset(rng, vars, n);
  auto tree = random_valid_tree(rng, data, 25);
  if (!tree) return std::nullopt;
  return RandomCase{std::move(data), std::move(*tree)};
}

Verdict equation_consistency() {
  Verdict v;
  std::mt19937_64 rng(2001);
  std::size_t trees = 0;
  std::size_t nodes = 0;
  double worst = 0.0;
  while (trees < 1000) {
    auto c = random_case(rng);
    if (!c) continue;
    ++trees;
    const double mse = mean_squared_error(c->tree.root_semantics(), c->data.targets());
    const auto eqs = propagate_equations(c->tree, c->data.targets());
    for (NodeId id = 0; id < eqs.size(); ++id, ++nodes) {
      const auto value = equation_value(eqs[id], c->tree.semantics(id));
      if (!value) {
        v.fail("pole at own semantics, tree " + std::to_string(trees));
        continue;
      }
      const double err = relative_error(*value, mse);
      worst = std::max(worst, err);
      if (err > 1e-9) v.fail("tree " + std::to_string(trees) + " relative error " + fmt("%.3g", err));
    }
  }
  if (v.pass) v.detail = std::to_string(trees) + " trees, " + std::to_string(nodes) +
                         " nodes, worst " + fmt("%.3g", worst);
  return v;
}

Verdict replacement_prediction() {
  Verdict v;
  std::mt19937_64 rng(3001);
  std::size_t triples = 0;
  std::size_t rejected = 0;
  double worst = 0.0;
  while (triples < 1000) {
    auto c = random_case(rng);
    if (!c) continue;
    const NodeId id = uniform_index(rng, c->tree.tree().size());
    const ExprTree candidate = random_tree(rng, 7, c->data.num_variables());
    Semantics sem;
    try {
      sem = evaluate_root(candidate, c->data);
    } catch (const std::exception&) {
      continue;
    }
    const NodeEquation eq = equation_at(c->tree, c->data.targets(), id);
    const auto predicted = equation_mse(eq, sem);
    if (!predicted) {
      ++rejected;
      continue;
    }
    ++triples;
    const double before = mean_squared_error(c->tree.root_semantics(), c->data.targets());
    const auto next = try_replace_subtree(c->tree, id, candidate, c->data);
    if (!next) {
      v.fail("accepted candidate broke the tree, triple " + std::to_string(triples));
      continue;
    }
    const double after = mean_squared_error(next->root_semantics(), c->data.targets());
    const double predicted_reduction = before - *predicted;
    const double actual_reduction = before - after;
    const double err = relative_error(predicted_reduction, actual_reduction, before);
    worst = std::max(worst, err);
    if (err > 1e-9) v.fail("triple " + std::to_string(triples) + " relative error " + fmt("%.3g", err));
  }
  if (v.pass) v.detail = std::to_string(triples) + " triples (" + std::to_string(rejected) +
                         " forbidden candidates skipped), worst " + fmt("%.3g", worst);
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 4

constexpr int kGridPoints = 100000;

// 10^5 points: zero plus +-10^[-6, 6] log-spaced.
const std::vector<double>& oracle_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g{0.0};
    const int half = (kGridPoints - 1) / 2;
    for (int j = 0; j < half; ++j) {
      const double m = std::pow(10.0, -6.0 + 12.0 * j / (half - 1));
      g.push_back(m);
      g.push_back(-m);
    }
    return g;
  }();
  return grid;
}

double value_or_inf(const NodeEquation& eq, double k) {
  return equation_value_constant(eq, k).value_or(INFINITY);
}

double grid_minimum(const NodeEquation& eq) {
  double best = INFINITY;
  for (double k : oracle_grid()) best = std::min(best, value_or_inf(eq, k));
  return best;
}

NodeEquation random_coefficients(std::mt19937_64& rng, std::size_t n) {
  NodeEquation eq;
  for (std::size_t i = 0; i < n; ++i) {
    eq.a.push_back(uniform(rng, -3, 3));
    eq.b.push_back(uniform(rng, -3, 3));
    eq.c.push_back(uniform(rng, -3, 3));
    eq.d.push_back(uniform(rng, -3, 3));
  }
  return eq;
}

NodeEquation case_three(std::mt19937_64& rng, int variant) {
  const std::size_t n = 2 + uniform_index(rng, 29);
  NodeEquation eq = random_coefficients(rng, n);
  const double a0 = uniform(rng, 0.5, 3);
  const double d0 = uniform(rng, 0.5, 3);
  for (std::size_t i = 0; i < n; ++i) {
    eq.c[i] = 0.0;
    if (variant == 0 || variant == 1) eq.a[i] = a0;
    if (variant == 0 || variant == 2) eq.d[i] = d0;
    if (std::abs(eq.d[i]) < 1e-3) eq.d[i] = 1.0;
  }
  return eq;
}

NodeEquation case_five(std::mt19937_64& rng) {
  NodeEquation eq = random_coefficients(rng, 2 + uniform_index(rng, 29));
  for (std::size_t i = 0; i < eq.size(); ++i) {
    eq.d[i] = 0.0;
    if (std::abs(eq.c[i]) < 1e-3) eq.c[i] = 1.0;
  }
  return eq;
}

NodeEquation case_six(std::mt19937_64& rng) {
  NodeEquation eq = random_coefficients(rng, 2 + uniform_index(rng, 29));
  const double c0 = uniform(rng, 0.5, 3) * (uniform(rng, 0, 1) < 0.5 ? -1 : 1);
  const double d0 = uniform(rng, 0.5, 3) * (uniform(rng, 0, 1) < 0.5 ? -1 : 1);
  for (std::size_t i = 0; i < eq.size(); ++i) {
    eq.c[i] = c0;
    eq.d[i] = d0;
  }
  return eq;
}

std::string closed_form_check(const std::function<NodeEquation(std::mt19937_64&, int)>& make,
                              std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  int none = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const NodeEquation eq = make(rng, rep % 4);
    const auto fit = minimize_constant(eq);
    if (!fit) {
      ++none;
      ok = false;
      continue;
    }
    const double h = 1e-4 * (1.0 + std::abs(fit->k));
    if (value_or_inf(eq, fit->k - h) < fit->fitted_mse ||
        value_or_inf(eq, fit->k + h) < fit->fitted_mse) {
      ok = false;
    }
    const double grid = grid_minimum(eq);
    const double excess = fit->fitted_mse / grid - 1.0;
    worst = std::max(worst, excess);
    if (excess > 1e-9) ok = false;
  }
  return "worst excess " + fmt("%.2g", worst) + (none ? ", no fit " + std::to_string(none) : "");
}

Verdict constant_minimizer() {
  Verdict v;
  bool ok3 = true;
  bool ok5 = true;
  bool ok6 = true;
  const std::string d3 = closed_form_check(case_three, 4003, ok3);
  const std::string d5 =
      closed_form_check([](std::mt19937_64& rng, int) { return case_five(rng); }, 4005, ok5);
  const std::string d6 =
      closed_form_check([](std::mt19937_64& rng, int) { return case_six(rng); }, 4006, ok6);

  std::mt19937_64 rng(4007);
  int within = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const NodeEquation eq = random_coefficients(rng, 20);
    const auto fit = minimize_constant(eq);
    if (!fit) continue;
    const double ratio = fit->fitted_mse / grid_minimum(eq);
    worst = std::max(worst, ratio);
    if (ratio <= 1.05) ++within;
  }
  const bool ok7 = within == 500;
  v.detail = "(iii) " + d3 + "; (v) " + d5 + "; (vi) " + d6 + "; (vii) " + std::to_string(within) +
             "/500 within 1.05x, worst ratio " + fmt("%.4f", worst);
  v.pass = ok3 && ok5 && ok6 && ok7;
  return v;
}

// ---------------------------------------------------------------------------
// Criteria 5 to 9

struct RecoveryFit {
  std::string name;
  Dataset data;
  Hyperparameters hp;
  FitReport report;
};

// x1 is symmetric about zero, x2 and x3 positive. With x1 and x2 both
// symmetric the greedy search has no first step towards x1 * x2.
Dataset recovery_data(const std::function<double(double, double, double)>& f) {
  std::mt19937_64 rng(5005);
  std::vector<std::vector<double>> x(3, std::vector<double>(50));
  std::vector<double> t(50);
  for (std::size_t i = 0; i < 50; ++i) {
    x[0][i] = uniform(rng, -5, 5);
    x[1][i] = uniform(rng, 1, 5);
    x[2][i] = uniform(rng, 1, 4);
    t[i] = f(x[0][i], x[1][i], x[2][i]);
  }
  return Dataset(std::move(x), std::move(t));
}

std::vector<RecoveryFit> recovery_problems() {
  Hyperparameters hp;
  hp.strategy = 1;
  hp.max_iterations = 10000;
  std::vector<RecoveryFit> out;
  const auto add = [&](std::string name, std::function<double(double, double, double)> f) {
    out.push_back({std::move(name), recovery_data(f), hp, {}});
  };
  add("7", [](double, double, double) { return 7.0; });
  add("x2", [](double, double x2, double) { return x2; });
  add("3.1*x1+7", [](double x1, double, double) { return 3.1 * x1 + 7.0; });
  add("x1*x2", [](double x1, double x2, double) { return x1 * x2; });
  add("(x1-2)/x3", [](double x1, double, double x3) { return (x1 - 2.0) / x3; });
  return out;
}

Verdict exact_recovery(std::vector<RecoveryFit>& fits) {
  Verdict v;
  std::string detail;
  for (auto& f : fits) {
    const auto start = Clock::now();
    f.report = fit(f.data, f.hp);
    const double elapsed = seconds_since(start);
    if (!(f.report.train_mse < 1e-10)) {
      v.fail(f.name + " train MSE " + fmt("%.3g", f.report.train_mse));
    }
    if (elapsed >= 10.0) v.fail(f.name + " took " + fmt("%.1f s", elapsed));
    if (!detail.empty()) detail += "; ";
    detail += f.name + " -> " + f.report.expression + " (" + fmt("%.3g", f.report.train_mse) +
              ", " + fmt("%.2f s", elapsed) + ")";
  }
  if (v.pass) v.detail = detail;
  return v;
}

struct NewtonRun {
  Dataset data = generate_newton_dataset(2, 1000);
  Hyperparameters hp;
  FitReport report;
};

Verdict newton_reproduction(NewtonRun& run) {
  Verdict v;
  run.hp.strategy = 1;
  run.hp.goal_mse = run.data.target_mean();
  run.hp.max_iterations = 10000;
  const auto start = Clock::now();
  run.report = fit(run.data, run.hp);
  const double elapsed = seconds_since(start);

  // Equivalent to k*x1*x2/x3^2 iff f*x3^2/(x1*x2) is the same constant on
  // fresh points.
  const Dataset fresh = generate_newton_dataset(9001, 200);
  const Semantics out = evaluate_root(run.report.tree, fresh);
  std::vector<double> ratio(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x1 = fresh.variable(0)[i];
    const double x2 = fresh.variable(1)[i];
    const double x3 = fresh.variable(2)[i];
    ratio[i] = out[i] * x3 * x3 / (x1 * x2);
  }
  double spread = 0.0;
  for (double r : ratio) spread = std::max(spread, relative_error(r, ratio.front()));
  const double k = ratio.front();
  const std::size_t modifications = run.report.trace.size() - 1;
  if (spread > 1e-9) v.fail("not of the form k*x1*x2/x3^2 (ratio spread " + fmt("%.3g", spread) + ")");
  if (!(std::abs(k / kGravitationalConstant - 1.0) < 1e-6)) {
    v.fail("k/G - 1 = " + fmt("%.3g", k / kGravitationalConstant - 1.0));
  }
  if (modifications > 10) v.fail(std::to_string(modifications) + " modifications");
  if (elapsed >= 60.0) v.fail("took " + fmt("%.1f s", elapsed));
  if (v.pass) {
    v.detail = run.report.expression + ", k/G - 1 = " + fmt("%.2g", k / kGravitationalConstant - 1.0) +
               ", " + std::to_string(modifications) + " modifications, " + fmt("%.2f s", elapsed);
  }
  return v;
}

Dataset load_housing() {
  CsvOptions opts;
  opts.header = true;
  return load_dataset(SEMREG_DATA_DIR "/housing.csv", opts);
}

struct HousingRun {
  Dataset data = load_housing();
  Hyperparameters hp;
  CvResult cv;
};

Verdict housing_band(HousingRun& run) {
  Verdict v;
  run.hp.strategy = 3;
  run.hp.min_improvement = 1e-6;
  run.hp.max_nodes = 105;
  run.hp.max_iterations = 10000;
  const auto start = Clock::now();
  run.cv = cross_validate(run.data, 10, run.hp, true);
  const double elapsed = seconds_since(start);
  const CvSummary& s = run.cv.summary;
  if (!(s.mean_train_mse < 10.0)) v.fail("mean train MSE " + fmt("%.4g", s.mean_train_mse));
  if (!s.median_test_mse || !(*s.median_test_mse < 25.0)) v.fail("median test MSE out of band");
  if (elapsed >= 600.0) v.fail("took " + fmt("%.1f s", elapsed));
  v.detail = "mean train " + fmt("%.4g", s.mean_train_mse) + ", mean test " +
             (s.mean_test_mse ? fmt("%.4g", *s.mean_test_mse) : "undefined") + ", median test " +
             (s.median_test_mse ? fmt("%.4g", *s.median_test_mse) : "undefined") + ", " +
             std::to_string(s.undefined_test_folds) + " undefined folds, " + fmt("%.1f s", elapsed) +
             (v.pass ? "" : " [" + v.detail + "]");
  return v;
}

void audit_trace(const std::vector<TraceEntry>& trace, const Hyperparameters& hp,
                 const std::string& name, Verdict& v, std::size_t& steps) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (hp.max_nodes && trace[i].node_count > *hp.max_nodes) {
      v.fail(name + " step " + std::to_string(i) + " has " + std::to_string(trace[i].node_count) +
             " nodes");
    }
    if (i == 0) continue;
    ++steps;
    const double prev = trace[i - 1].mse;
    if (!(trace[i].mse < prev)) v.fail(name + " step " + std::to_string(i) + " did not decrease");
    if (!((prev - trace[i].mse) > hp.min_improvement * prev)) {
      v.fail(name + " step " + std::to_string(i) + " below min_improvement");
    }
  }
}

Verdict monotonicity_audit(const std::vector<RecoveryFit>& fits, const NewtonRun& newton,
                           const HousingRun& housing) {
  Verdict v;
  std::size_t steps = 0;
  std::size_t traces = 0;
  for (const auto& f : fits) {
    audit_trace(f.report.trace, f.hp, "recovery " + f.name, v, steps);
    ++traces;
  }
  audit_trace(newton.report.trace, newton.hp, "newton", v, steps);
  ++traces;
  for (const auto& fold : housing.cv.folds) {
    if (fold.trace.empty()) v.fail("housing fold " + std::to_string(fold.fold) + " has no trace");
    audit_trace(fold.trace, housing.hp, "housing fold " + std::to_string(fold.fold), v, steps);
    ++traces;
  }
  if (v.pass) v.detail = std::to_string(traces) + " traces, " + std::to_string(steps) + " steps";
  return v;
}

Verdict determinism(const std::vector<RecoveryFit>& fits, const NewtonRun& newton,
                    const HousingRun& housing) {
  Verdict v;
  for (const auto& f : fits) {
    const FitReport again = fit(f.data, f.hp);
    if (fit_json(again, f.hp) != fit_json(f.report, f.hp) ||
        trace_tsv(again) != trace_tsv(f.report)) {
      v.fail("recovery " + f.name + " differs");
    }
  }
  const FitReport newton_again = fit(newton.data, newton.hp);
  if (fit_json(newton_again, newton.hp) != fit_json(newton.report, newton.hp) ||
      trace_tsv(newton_again) != trace_tsv(newton.report)) {
    v.fail("newton differs");
  }
  const CvResult cv_again = cross_validate(housing.data, 10, housing.hp, true);
  if (cv_folds_tsv(cv_again) != cv_folds_tsv(housing.cv) ||
      cv_json(cv_again, 10, housing.hp) != cv_json(housing.cv, 10, housing.hp)) {
    v.fail("housing cross-validation differs");
  }
  for (std::size_t f = 0; f < cv_again.folds.size() && f < housing.cv.folds.size(); ++f) {
    const auto& a = cv_again.folds[f].trace;
    const auto& b = housing.cv.folds[f].trace;
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].expression == b[i].expression && a[i].mse == b[i].mse;
    }
    if (!same) v.fail("housing fold " + std::to_string(f) + " trace differs");
  }
  if (v.pass) v.detail = "5 recovery fits, newton, 10 housing folds";
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 10

Verdict extended_arithmetic() {
  Verdict v;
  using EV = ExtendedValue;
  const EV any = EV::any_allowed();
  const EV none = EV::none_allowed();
  const auto real = [](double x) { return EV::real(x); };
  int checks = 0;
  const auto expect = [&](EV got, EV want, const char* rule) {
    ++checks;
    if (!(got == want)) v.fail(rule);
  };
  // + and -: real values shift, AnyAllowed stays.
  expect(invert_forbidden_value(real(4), Op::Add, Side::First, 1), real(3), "s - y");
  expect(invert_forbidden_value(real(4), Op::Add, Side::Second, 1), real(3), "s - x");
  expect(invert_forbidden_value(real(4), Op::Sub, Side::First, 1), real(5), "s + y");
  expect(invert_forbidden_value(real(4), Op::Sub, Side::Second, 1), real(-3), "x - s");
  expect(invert_forbidden_value(any, Op::Add, Side::First, 1), any, "Inf - y = Inf");
  expect(invert_forbidden_value(any, Op::Sub, Side::First, 1), any, "Inf + y = Inf");
  expect(invert_forbidden_value(any, Op::Sub, Side::Second, 1), any, "x - Inf = Inf");
  // *: s / sibling.
  expect(invert_forbidden_value(real(6), Op::Mul, Side::First, 2), real(3), "s / y");
  expect(invert_forbidden_value(real(6), Op::Mul, Side::Second, 0), any, "r / 0 = Inf");
  expect(invert_forbidden_value(real(0), Op::Mul, Side::First, 0), none, "0 / 0 = NaN");
  expect(invert_forbidden_value(any, Op::Mul, Side::First, 2), any, "Inf / y = Inf");
  expect(invert_forbidden_value(any, Op::Mul, Side::First, 0), any, "Inf / 0 = Inf");
  // / numerator: s * y.
  expect(invert_forbidden_value(real(2), Op::Div, Side::First, 3), real(6), "s * y");
  expect(invert_forbidden_value(any, Op::Div, Side::First, 3), any, "Inf * y = Inf");
  expect(invert_forbidden_value(any, Op::Div, Side::First, 0), none, "Inf * 0 = NaN");
  // / divisor: x / s.
  expect(invert_forbidden_value(real(2), Op::Div, Side::Second, 6), real(3), "x / s");
  expect(invert_forbidden_value(any, Op::Div, Side::Second, 6), real(0), "x / Inf = 0");
  expect(invert_forbidden_value(real(0), Op::Div, Side::Second, 6), any, "x / 0 = Inf");
  expect(invert_forbidden_value(real(0), Op::Div, Side::Second, 0), none, "0 / 0 = NaN");
  // NaN absorbing.
  for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
    for (Side side : {Side::First, Side::Second}) {
      for (double sibling : {0.0, 1.0}) {
        expect(invert_forbidden_value(none, op, side, sibling), none, "NaN absorbing");
      }
    }
  }
  // Element-wise over a whole semantics, and set-level collapse.
  const ExtendedSemantics s{real(1), any, real(0), any};
  const std::vector<double> y{2, 0, 0, 5};
  const ExtendedSemantics got = invert_forbidden(s, Op::Div, Side::First, y);
  expect(got[0], real(2), "element-wise s * y");
  expect(got[1], none, "element-wise Inf * 0");
  expect(got[2], real(0), "element-wise 0 * 0");
  expect(got[3], any, "element-wise Inf * y");
  ForbiddenSet set;
  set.insert(s);
  ++checks;
  if (!set.for_child(Op::Div, Side::First, std::vector<double>{1, 1, 1, 1}, y).is_all_forbidden()) {
    v.fail("NaN member collapses the set");
  }
  ++checks;
  if (forbidden_allows(ForbiddenSet::all_forbidden(), std::vector<double>{1, 2, 3, 4})) {
    v.fail("all-forbidden set rejects everything");
  }
  ForbiddenSet any_set;
  any_set.insert({any, real(5)});
  ++checks;
  if (!forbidden_allows(any_set, std::vector<double>{123, 4}) ||
      forbidden_allows(any_set, std::vector<double>{123, 5})) {
    v.fail("Inf positions accept every real");
  }
  if (v.pass) v.detail = std::to_string(checks) + " rules";
  return v;
}

int failures = 0;

void report(int id, const char* name, const Verdict& v) {
  if (!v.pass) ++failures;
  const std::string extra =
      v.failures > 1 ? " (+" + std::to_string(v.failures - 1) + " more failures)" : "";
  std::printf("%s criterion %d (%s): %s%s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(),
              extra.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  report(1, "worked example golden", figure_one_golden());
  report(2, "node equation consistency", equation_consistency());
  report(3, "replacement prediction", replacement_prediction());
  report(4, "constant minimizer oracle", constant_minimizer());

  std::vector<RecoveryFit> fits = recovery_problems();
  report(5, "exact recovery", exact_recovery(fits));
  NewtonRun newton;
  report(6, "Newton reproduction", newton_reproduction(newton));
  HousingRun housing;
  report(7, "housing band", housing_band(housing));
  report(8, "monotonicity and node audit", monotonicity_audit(fits, newton, housing));
  report(9, "determinism", determinism(fits, newton, housing));
  report(10, "extended arithmetic", extended_arithmetic());

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
