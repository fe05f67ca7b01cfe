#include "frontier/malmquist.hpp"

#include <cmath>

#include "frontier/error.hpp"

namespace frontier::malmquist {

CrossDistance cross_distance(const PanelDataset& dataset, std::string_view dmu_id,
                             std::string_view data_period, std::string_view frontier_period,
                             dea::Rts assumption, const dea::Tolerances& tol) {
  const DmuRecord& rec = dataset.at(dmu_id, data_period);
  const auto reference = dataset.period_records(frontier_period);
  const dea::PointEvaluation eval =
      dea::evaluate_point(reference, rec.inputs, rec.outputs, assumption, false, tol);
  return {std::string(data_period), std::string(frontier_period), assumption,
          eval.feasible ? eval.theta : 0.0, eval.feasible};
}

namespace {

double required(const CrossDistance& d, std::string_view dmu_id) {
  if (!d.feasible) {
    throw DomainError("CRS distance of " + std::string(dmu_id) + " (" + d.evaluated_period +
                      " data, " + d.frontier_period +
                      " frontier) is infeasible; an output is zero for every unit of the "
                      "frontier period");
  }
  return d.value;
}

}  // namespace

MalmquistResult malmquist_index(const PanelDataset& dataset, std::string_view dmu_id,
                                std::string_view base, std::string_view next,
                                const dea::Tolerances& tol) {
  dataset.at(dmu_id, base);
  dataset.at(dmu_id, next);

  MalmquistResult res;
  res.dmu_id = std::string(dmu_id);
  res.base_period = std::string(base);
  res.next_period = std::string(next);

  auto distance = [&](std::string_view data, std::string_view frontier, dea::Rts rts) {
    return cross_distance(dataset, dmu_id, data, frontier, rts, tol);
  };
  res.crs.base_on_base = required(distance(base, base, dea::Rts::crs), dmu_id);
  res.crs.next_on_base = required(distance(next, base, dea::Rts::crs), dmu_id);
  res.crs.base_on_next = required(distance(base, next, dea::Rts::crs), dmu_id);
  res.crs.next_on_next = required(distance(next, next, dea::Rts::crs), dmu_id);

  res.vrs_base_on_base = required(distance(base, base, dea::Rts::vrs), dmu_id);
  res.vrs_next_on_next = required(distance(next, next, dea::Rts::vrs), dmu_id);
  if (const auto d = distance(next, base, dea::Rts::vrs); d.feasible) {
    res.vrs_next_on_base = d.value;
  } else {
    res.diagnostics.push_back("vrs-cross-infeasible: " + res.next_period + " data on " +
                              res.base_period + " frontier");
  }
  if (const auto d = distance(base, next, dea::Rts::vrs); d.feasible) {
    res.vrs_base_on_next = d.value;
  } else {
    res.diagnostics.push_back("vrs-cross-infeasible: " + res.base_period + " data on " +
                              res.next_period + " frontier");
  }

  const DistanceQuad& d = res.crs;
  Components& c = res.index;
  c.tfpch = std::sqrt((d.next_on_base / d.base_on_base) * (d.next_on_next / d.base_on_next));
  c.effch = d.next_on_next / d.base_on_base;
  c.techch = c.tfpch / c.effch;
  c.pech = res.vrs_next_on_next / res.vrs_base_on_base;
  c.sech = c.effch / c.pech;
  return res;
}

PairAggregate aggregate_pair(const std::vector<MalmquistResult>& results,
                             const dea::Tolerances& tol) {
  if (results.empty()) throw ValidationError("no Malmquist results to aggregate");
  PairAggregate agg;
  agg.base_period = results.front().base_period;
  agg.next_period = results.front().next_period;
  agg.dmu_count = results.size();

  Components log_sum{0, 0, 0, 0, 0};
  Components sum{0, 0, 0, 0, 0};
  agg.min_tfpch = {results.front().dmu_id, results.front().index.tfpch};
  agg.max_tfpch = agg.min_tfpch;
  for (const MalmquistResult& r : results) {
    const Components& c = r.index;
    log_sum.effch += std::log(c.effch);
    log_sum.techch += std::log(c.techch);
    log_sum.pech += std::log(c.pech);
    log_sum.sech += std::log(c.sech);
    log_sum.tfpch += std::log(c.tfpch);
    sum.effch += c.effch;
    sum.techch += c.techch;
    sum.pech += c.pech;
    sum.sech += c.sech;
    sum.tfpch += c.tfpch;
    if (c.tfpch > 1.0 + tol.identity) ++agg.improved_count;
    if (c.tfpch < agg.min_tfpch.value) agg.min_tfpch = {r.dmu_id, c.tfpch};
    if (c.tfpch > agg.max_tfpch.value) agg.max_tfpch = {r.dmu_id, c.tfpch};
  }
  const double n = static_cast<double>(results.size());
  agg.geometric_mean = {std::exp(log_sum.effch / n), std::exp(log_sum.techch / n),
                        std::exp(log_sum.pech / n), std::exp(log_sum.sech / n),
                        std::exp(log_sum.tfpch / n)};
  agg.arithmetic_mean = {sum.effch / n, sum.techch / n, sum.pech / n, sum.sech / n,
                         sum.tfpch / n};
  agg.improved_percent = 100.0 * static_cast<double>(agg.improved_count) / n;
  return agg;
}

MalmquistPanel malmquist_panel(const PanelDataset& dataset, const dea::Tolerances& tol) {
  if (dataset.periods().size() < 2) {
    throw ValidationError("the Malmquist index needs at least two periods");
  }
  BalancedPanel balanced = balanced_subpanel(dataset, dataset.periods());
  const PanelDataset& panel = balanced.dataset;

  MalmquistPanel out;
  out.skipped_dmus = std::move(balanced.skipped_dmus);
  const auto ids = panel.dmu_ids();
  const auto& periods = panel.periods();
  for (std::size_t p = 0; p + 1 < periods.size(); ++p) {
    std::vector<MalmquistResult> pair;
    for (const auto& id : ids) {
      pair.push_back(malmquist_index(panel, id, periods[p], periods[p + 1], tol));
    }
    out.pairs.push_back(aggregate_pair(pair, tol));
    for (auto& r : pair) out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace frontier::malmquist
