#include "frontier/benchmarking.hpp"

#include <algorithm>

namespace frontier::benchmarking {

std::vector<double> ProjectionSummary::projected_inputs() const {
  std::vector<double> out;
  for (const auto& row : rows) {
    if (row.kind == VariableKind::input) out.push_back(row.projected);
  }
  return out;
}

std::vector<double> ProjectionSummary::projected_outputs() const {
  std::vector<double> out;
  for (const auto& row : rows) {
    if (row.kind == VariableKind::output) out.push_back(row.projected);
  }
  return out;
}

ProjectionSummary project(const PanelDataset& dataset, std::string_view dmu_id,
                          std::string_view period, dea::Rts assumption,
                          const dea::Tolerances& tol) {
  const DmuRecord& rec = dataset.at(dmu_id, period);
  const dea::EfficiencyResult eff = dea::evaluate(dataset, dmu_id, period, assumption, tol);
  const dea::ScaleResult scale = dea::scale_analysis(dataset, dmu_id, period, tol);

  ProjectionSummary s;
  s.dmu_id = rec.dmu_id;
  s.period = rec.period;
  s.assumption = assumption;
  s.theta = eff.theta;
  s.scale_efficiency = scale.scale_efficiency;
  s.rts_class = scale.rts_class;

  const bool identity = eff.lambdas.size() == 1 && eff.lambdas.front().dmu_id == rec.dmu_id;
  for (std::size_t r = 0; r < dataset.num_outputs(); ++r) {
    const double y = rec.outputs[r];
    const double slack = eff.output_slacks[r];
    s.rows.push_back({dataset.output_names()[r], VariableKind::output, y, 0.0, slack, y + slack});
  }
  for (std::size_t i = 0; i < dataset.num_inputs(); ++i) {
    const double x = rec.inputs[i];
    const double slack = eff.input_slacks[i];
    const double radial = identity ? 0.0 : (eff.theta - 1.0) * x;
    s.rows.push_back({dataset.input_names()[i], VariableKind::input, x, radial, slack,
                      x + radial - slack});
  }

  for (const auto& peer : eff.lambdas) s.peers.push_back({peer.dmu_id, peer.weight});
  std::stable_sort(s.peers.begin(), s.peers.end(),
                   [](const PeerEntry& a, const PeerEntry& b) { return a.weight > b.weight; });
  return s;
}

PeerFrequencyReport peer_frequency(const PanelDataset& dataset, std::string_view period,
                                   dea::Rts assumption, const dea::Tolerances& tol) {
  const auto records = dataset.period_records(period);
  PeerFrequencyReport report;
  report.dmu_count = records.size();
  for (const DmuRecord* rec : records) {
    const dea::EfficiencyResult eff = dea::evaluate(dataset, rec->dmu_id, period, assumption, tol);
    const bool has_other = std::any_of(eff.lambdas.begin(), eff.lambdas.end(),
                                       [&](const auto& p) { return p.dmu_id != rec->dmu_id; });
    if (!has_other) continue;
    ++report.inefficient_count;
    for (const auto& peer : eff.lambdas) {
      if (peer.dmu_id == rec->dmu_id) continue;
      auto it = std::find_if(report.counts.begin(), report.counts.end(),
                             [&](const PeerCount& c) { return c.dmu_id == peer.dmu_id; });
      if (it == report.counts.end()) report.counts.push_back({peer.dmu_id, 1});
      else ++it->count;
    }
  }
  if (report.dmu_count > 0) {
    report.inefficient_percent = 100.0 * static_cast<double>(report.inefficient_count) /
                                 static_cast<double>(report.dmu_count);
  }
  return report;
}

}  // namespace frontier::benchmarking
