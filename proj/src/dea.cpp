#include "frontier/dea.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "frontier/error.hpp"

namespace frontier::dea {

const char* to_string(Rts rts) noexcept {
  switch (rts) {
    case Rts::crs: return "CRS";
    case Rts::vrs: return "VRS";
    case Rts::nirs: return "NIRS";
  }
  return "?";
}

const char* to_string(RtsClass cls) noexcept {
  switch (cls) {
    case RtsClass::crs: return "CRS";
    case RtsClass::drs: return "DRS";
    case RtsClass::irs: return "IRS";
    case RtsClass::not_classified: return "-";
  }
  return "?";
}

std::optional<Rts> parse_rts(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "crs") return Rts::crs;
  if (lower == "vrs") return Rts::vrs;
  if (lower == "nirs") return Rts::nirs;
  return std::nullopt;
}

namespace {

struct RowScales {
  std::vector<double> inputs;
  std::vector<double> outputs;
};

// Largest value of each variable over the reference set and the point.
RowScales row_scales(std::span<const DmuRecord* const> reference,
                     std::span<const double> inputs, std::span<const double> outputs) {
  RowScales s{{inputs.begin(), inputs.end()}, {outputs.begin(), outputs.end()}};
  for (const DmuRecord* rec : reference) {
    for (std::size_t i = 0; i < inputs.size(); ++i) s.inputs[i] = std::max(s.inputs[i], rec->inputs[i]);
    for (std::size_t r = 0; r < outputs.size(); ++r) s.outputs[r] = std::max(s.outputs[r], rec->outputs[r]);
  }
  for (double& v : s.outputs) {
    if (v == 0.0) v = 1.0;
  }
  return s;
}

void add_returns_to_scale_row(lp::DenseMatrix& a, std::vector<lp::Relation>& rel,
                              std::vector<double>& rhs, std::size_t row,
                              std::size_t first_lambda, std::size_t num_lambdas,
                              Rts assumption) {
  for (std::size_t j = 0; j < num_lambdas; ++j) a(row, first_lambda + j) = 1.0;
  rel[row] = assumption == Rts::vrs ? lp::Relation::equal : lp::Relation::less_equal;
  rhs[row] = 1.0;
}

struct Problem {
  std::span<const DmuRecord* const> reference;
  std::span<const double> inputs;
  std::span<const double> outputs;
  Rts assumption;
  RowScales scale;
};

Problem make_problem(std::span<const DmuRecord* const> reference,
                     std::span<const double> inputs, std::span<const double> outputs,
                     Rts assumption) {
  if (reference.empty()) throw ValidationError("empty reference set");
  for (double x : inputs) {
    if (!(x > 0.0)) throw DomainError("evaluated unit has a non-positive input");
  }
  if (std::none_of(outputs.begin(), outputs.end(), [](double y) { return y > 0.0; })) {
    throw DomainError("evaluated unit has no positive output");
  }
  return {reference, inputs, outputs, assumption, row_scales(reference, inputs, outputs)};
}

std::size_t num_rows(const Problem& p) {
  return p.inputs.size() + p.outputs.size() + (p.assumption == Rts::crs ? 0 : 1);
}

// Phase 1: variables [theta, lambda_1..lambda_n]; minimize theta.
// Returns false when infeasible.
bool solve_radial(const Problem& p, const Tolerances& tol, PointEvaluation& eval) {
  const std::size_t n = p.reference.size();
  const std::size_t num_in = p.inputs.size();
  const std::size_t num_out = p.outputs.size();
  const std::size_t rows = num_rows(p);
  lp::DenseMatrix a(rows, 1 + n);
  std::vector<lp::Relation> rel(rows);
  std::vector<double> rhs(rows, 0.0);
  std::vector<double> cost(1 + n, 0.0);
  cost[0] = 1.0;
  for (std::size_t r = 0; r < num_out; ++r) {
    for (std::size_t j = 0; j < n; ++j) a(r, 1 + j) = p.reference[j]->outputs[r] / p.scale.outputs[r];
    rel[r] = lp::Relation::greater_equal;
    rhs[r] = p.outputs[r] / p.scale.outputs[r];
  }
  for (std::size_t i = 0; i < num_in; ++i) {
    const std::size_t row = num_out + i;
    a(row, 0) = -p.inputs[i] / p.scale.inputs[i];
    for (std::size_t j = 0; j < n; ++j) a(row, 1 + j) = p.reference[j]->inputs[i] / p.scale.inputs[i];
    rel[row] = lp::Relation::less_equal;
  }
  if (p.assumption != Rts::crs) add_returns_to_scale_row(a, rel, rhs, rows - 1, 1, n, p.assumption);

  const lp::LpSolution sol = lp::solve(
      lp::LinearProgram(lp::Sense::minimize, std::move(cost), std::move(a), std::move(rel),
                        std::move(rhs)),
      tol.solver);
  if (sol.status == lp::Status::infeasible) return false;
  if (sol.status == lp::Status::unbounded) {
    throw InvariantViolation("radial efficiency problem reported unbounded");
  }
  eval.theta = sol.primal_values[0];
  eval.lambdas.assign(sol.primal_values.begin() + 1, sol.primal_values.end());
  if (!(eval.theta > 0.0)) {
    throw DomainError("radial efficiency is zero: the reference set contains a unit "
                      "producing output from zero inputs");
  }

  // Residual slacks of the phase-1 optimum.
  eval.input_slacks.assign(num_in, 0.0);
  eval.output_slacks.assign(num_out, 0.0);
  for (std::size_t i = 0; i < num_in; ++i) {
    double used = 0.0;
    for (std::size_t j = 0; j < n; ++j) used += eval.lambdas[j] * p.reference[j]->inputs[i];
    const double s = eval.theta * p.inputs[i] - used;
    eval.input_slacks[i] = s / p.scale.inputs[i] < tol.solver.zero_clip ? 0.0 : s;
  }
  for (std::size_t r = 0; r < num_out; ++r) {
    double made = 0.0;
    for (std::size_t j = 0; j < n; ++j) made += eval.lambdas[j] * p.reference[j]->outputs[r];
    const double s = made - p.outputs[r];
    eval.output_slacks[r] = s / p.scale.outputs[r] < tol.solver.zero_clip ? 0.0 : s;
  }
  return true;
}

// Phase 2: variables [lambda_1..lambda_n, s_in, s_out]; maximize the sum of
// unit-free slacks with theta fixed.
void solve_slacks(const Problem& p, double theta, const Tolerances& tol, PointEvaluation& eval) {
  const std::size_t n = p.reference.size();
  const std::size_t num_in = p.inputs.size();
  const std::size_t num_out = p.outputs.size();
  const std::size_t rows = num_rows(p);
  const std::size_t width = n + num_in + num_out;
  lp::DenseMatrix a(rows, width);
  std::vector<lp::Relation> rel(rows, lp::Relation::equal);
  std::vector<double> rhs(rows, 0.0);
  std::vector<double> cost(width, 0.0);
  for (std::size_t k = n; k < width; ++k) cost[k] = 1.0;
  for (std::size_t r = 0; r < num_out; ++r) {
    for (std::size_t j = 0; j < n; ++j) a(r, j) = p.reference[j]->outputs[r] / p.scale.outputs[r];
    a(r, n + num_in + r) = -1.0;
    rhs[r] = p.outputs[r] / p.scale.outputs[r];
  }
  for (std::size_t i = 0; i < num_in; ++i) {
    const std::size_t row = num_out + i;
    for (std::size_t j = 0; j < n; ++j) a(row, j) = p.reference[j]->inputs[i] / p.scale.inputs[i];
    a(row, n + i) = 1.0;
    rhs[row] = theta * p.inputs[i] / p.scale.inputs[i];
  }
  if (p.assumption != Rts::crs) add_returns_to_scale_row(a, rel, rhs, rows - 1, 0, n, p.assumption);

  const lp::LpSolution sol = lp::solve(
      lp::LinearProgram(lp::Sense::maximize, std::move(cost), std::move(a), std::move(rel),
                        std::move(rhs)),
      tol.solver);
  if (sol.status != lp::Status::optimal) {
    throw InvariantViolation(std::string("slack maximization is ") + lp::to_string(sol.status) +
                             " at theta = " + std::to_string(theta));
  }
  eval.theta = theta;
  eval.lambdas.assign(sol.primal_values.begin(), sol.primal_values.begin() + n);
  eval.input_slacks.resize(num_in);
  eval.output_slacks.resize(num_out);
  for (std::size_t i = 0; i < num_in; ++i) {
    eval.input_slacks[i] = sol.primal_values[n + i] * p.scale.inputs[i];
  }
  for (std::size_t r = 0; r < num_out; ++r) {
    eval.output_slacks[r] = sol.primal_values[n + num_in + r] * p.scale.outputs[r];
  }
}

}  // namespace

PointEvaluation evaluate_point(std::span<const DmuRecord* const> reference,
                               std::span<const double> inputs,
                               std::span<const double> outputs, Rts assumption,
                               bool maximize_slacks, const Tolerances& tol) {
  const Problem problem = make_problem(reference, inputs, outputs, assumption);
  PointEvaluation eval;
  eval.feasible = solve_radial(problem, tol, eval);
  if (eval.feasible && maximize_slacks) solve_slacks(problem, eval.theta, tol, eval);
  return eval;
}

namespace {

std::vector<PeerWeight> to_peers(std::span<const DmuRecord* const> reference,
                                 const std::vector<double>& lambdas) {
  std::vector<PeerWeight> peers;
  for (std::size_t j = 0; j < reference.size(); ++j) {
    if (lambdas[j] > 0.0) peers.push_back({reference[j]->dmu_id, lambdas[j]});
  }
  return peers;
}

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// An efficient unit with no slack is reported as its own (sole) peer.
void apply_self_peer(EfficiencyResult& res, const Tolerances& tol) {
  if (res.theta >= 1.0 - tol.identity && all_zero(res.input_slacks) &&
      all_zero(res.output_slacks)) {
    res.lambdas = {{res.dmu_id, 1.0}};
  }
}

EfficiencyResult run(const PanelDataset& dataset, std::string_view dmu_id,
                     std::string_view period, Rts assumption, bool maximize_slacks,
                     const Tolerances& tol) {
  const DmuRecord& rec = dataset.at(dmu_id, period);
  const auto reference = dataset.period_records(period);
  const PointEvaluation eval =
      evaluate_point(reference, rec.inputs, rec.outputs, assumption, maximize_slacks, tol);
  if (!eval.feasible) {
    throw InvariantViolation("same-period envelopment problem infeasible for " + rec.dmu_id +
                             "/" + rec.period);
  }
  EfficiencyResult res;
  res.dmu_id = rec.dmu_id;
  res.period = rec.period;
  res.assumption = assumption;
  res.theta = eval.theta;
  res.lambdas = to_peers(reference, eval.lambdas);
  res.input_slacks = eval.input_slacks;
  res.output_slacks = eval.output_slacks;
  apply_self_peer(res, tol);
  return res;
}

}  // namespace

EfficiencyResult radial_efficiency(const PanelDataset& dataset, std::string_view dmu_id,
                                   std::string_view period, Rts assumption,
                                   const Tolerances& tol, Orientation /*orientation*/) {
  return run(dataset, dmu_id, period, assumption, false, tol);
}

SlackResult max_slacks(const PanelDataset& dataset, std::string_view dmu_id,
                       std::string_view period, Rts assumption, double theta,
                       const Tolerances& tol) {
  const DmuRecord& rec = dataset.at(dmu_id, period);
  const auto reference = dataset.period_records(period);
  const Problem problem = make_problem(reference, rec.inputs, rec.outputs, assumption);
  PointEvaluation eval;
  solve_slacks(problem, theta, tol, eval);
  return {eval.input_slacks, eval.output_slacks, to_peers(reference, eval.lambdas)};
}

EfficiencyResult evaluate(const PanelDataset& dataset, std::string_view dmu_id,
                          std::string_view period, Rts assumption, const Tolerances& tol) {
  return run(dataset, dmu_id, period, assumption, true, tol);
}

ScaleResult scale_analysis(const PanelDataset& dataset, std::string_view dmu_id,
                           std::string_view period, const Tolerances& tol) {
  ScaleResult s;
  s.theta_crs = radial_efficiency(dataset, dmu_id, period, Rts::crs, tol).theta;
  s.theta_vrs = radial_efficiency(dataset, dmu_id, period, Rts::vrs, tol).theta;
  s.theta_nirs = radial_efficiency(dataset, dmu_id, period, Rts::nirs, tol).theta;
  const DmuRecord& rec = dataset.at(dmu_id, period);
  s.dmu_id = rec.dmu_id;
  s.period = rec.period;
  s.scale_efficiency = s.theta_crs / s.theta_vrs;
  if (s.scale_efficiency >= 1.0 - tol.efficient) {
    s.rts_class = RtsClass::crs;
  } else if (std::abs(s.theta_nirs - s.theta_vrs) <= tol.efficient) {
    s.rts_class = RtsClass::drs;
  } else {
    s.rts_class = RtsClass::irs;
  }
  return s;
}

EfficiencyTable efficiency_table(const PanelDataset& dataset, std::string_view period,
                                 Rts assumption, const Tolerances& tol) {
  const auto records = dataset.period_records(period);
  if (records.empty()) throw ValidationError("period '" + std::string(period) + "' has no DMUs");
  EfficiencyTable table;
  table.period = std::string(period);
  table.assumption = assumption;
  double sum = 0.0;
  for (const DmuRecord* rec : records) {
    table.results.push_back(evaluate(dataset, rec->dmu_id, period, assumption, tol));
    sum += table.results.back().theta;
    if (table.results.back().theta >= 1.0 - tol.efficient) ++table.efficient_count;
  }
  const double count = static_cast<double>(records.size());
  table.mean_theta = sum / count;
  table.efficient_percent = 100.0 * static_cast<double>(table.efficient_count) / count;
  return table;
}

}  // namespace frontier::dea
