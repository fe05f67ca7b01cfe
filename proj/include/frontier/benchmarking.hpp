#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frontier/dataset.hpp"
#include "frontier/dea.hpp"

namespace frontier::benchmarking {

struct PeerEntry {
  std::string dmu_id;
  double weight = 0.0;
};

struct ProjectionRow {
  std::string variable_name;
  VariableKind kind = VariableKind::input;
  double original = 0.0;
  double radial_movement = 0.0;  // (theta - 1) * original for inputs, 0 for outputs
  double slack = 0.0;
  double projected = 0.0;
};

/// Target point on the frontier for one DMU. Rows list outputs first, then
/// inputs; peers are sorted by descending weight.
struct ProjectionSummary {
  std::string dmu_id;
  std::string period;
  dea::Rts assumption = dea::Rts::vrs;
  double theta = 0.0;
  double scale_efficiency = 0.0;
  dea::RtsClass rts_class = dea::RtsClass::not_classified;
  std::vector<ProjectionRow> rows;
  std::vector<PeerEntry> peers;

  std::vector<double> projected_inputs() const;
  std::vector<double> projected_outputs() const;
};

/// Radial contraction plus maximal slacks; the peers are the support of the
/// slack-maximal intensity vector.
ProjectionSummary project(const PanelDataset& dataset, std::string_view dmu_id,
                          std::string_view period, dea::Rts assumption,
                          const dea::Tolerances& tol = {});

struct PeerCount {
  std::string dmu_id;
  std::size_t count = 0;
};

struct PeerFrequencyReport {
  std::vector<PeerCount> counts;  // order in which each DMU is first used as a peer
  std::size_t dmu_count = 0;
  std::size_t inefficient_count = 0;  // DMUs with at least one non-self peer
  double inefficient_percent = 0.0;
};

/// How often each DMU serves as a peer to the other DMUs of a period.
PeerFrequencyReport peer_frequency(const PanelDataset& dataset, std::string_view period,
                                   dea::Rts assumption, const dea::Tolerances& tol = {});

}  // namespace frontier::benchmarking
