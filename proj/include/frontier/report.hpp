#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontier/benchmarking.hpp"
#include "frontier/dataset.hpp"
#include "frontier/dea.hpp"
#include "frontier/malmquist.hpp"

namespace frontier::report {

/// Bumped whenever a JSON field is renamed, removed or changes meaning.
inline constexpr int kSchemaVersion = 1;

/// Text reports round scores and indices to this many decimals.
inline constexpr int kDisplayDecimals = 3;

enum class ModelSet { crs, vrs, nirs, both };

const char* to_string(ModelSet set) noexcept;
std::optional<ModelSet> parse_model_set(std::string_view text);
std::vector<dea::Rts> models_of(ModelSet set);

// ---------------------------------------------------------------------------
// Efficiency

struct DmuEfficiency {
  std::string dmu_id;
  std::vector<dea::EfficiencyResult> models;  // one per model in the set
  std::optional<dea::ScaleResult> scale;      // only for ModelSet::both
};

struct ModelSummary {
  dea::Rts assumption = dea::Rts::crs;
  double mean_theta = 0.0;
  std::size_t efficient_count = 0;
  double efficient_percent = 0.0;
};

struct PeriodEfficiency {
  std::string period;
  std::vector<DmuEfficiency> dmus;
  std::vector<ModelSummary> summaries;
  std::optional<double> mean_scale_efficiency;
};

struct EfficiencyReport {
  ModelSet models = ModelSet::both;
  std::vector<PeriodEfficiency> periods;
};

/// All periods when `period` is empty.
EfficiencyReport compute_efficiency(const PanelDataset& dataset, ModelSet models,
                                    const std::optional<std::string>& period,
                                    const dea::Tolerances& tol = {});

std::string efficiency_text(const EfficiencyReport& report);
std::string efficiency_csv(const EfficiencyReport& report);
std::string efficiency_json(const EfficiencyReport& report, const PanelDataset& dataset);

// ---------------------------------------------------------------------------
// Malmquist

std::string malmquist_text(const malmquist::MalmquistPanel& panel);
std::string malmquist_csv(const malmquist::MalmquistPanel& panel);
std::string malmquist_json(const malmquist::MalmquistPanel& panel);

// ---------------------------------------------------------------------------
// Projections

struct PeriodPeerFrequency {
  std::string period;
  benchmarking::PeerFrequencyReport frequency;
};

struct ProjectionReport {
  dea::Rts assumption = dea::Rts::vrs;
  std::vector<benchmarking::ProjectionSummary> summaries;
  std::vector<PeriodPeerFrequency> frequencies;  // filled when every DMU was projected
};

/// One DMU when `dmu_id` is set, otherwise every DMU of the selected periods.
ProjectionReport compute_projections(const PanelDataset& dataset, dea::Rts assumption,
                                     const std::optional<std::string>& period,
                                     const std::optional<std::string>& dmu_id,
                                     const dea::Tolerances& tol = {});

/// Fixed-width Projection Summary block: two header lines, one row per
/// variable (outputs first) and the peer listing in the rightmost columns.
std::string render_projection_text(const benchmarking::ProjectionSummary& summary);

std::string projection_text(const ProjectionReport& report);
std::string projection_csv(const ProjectionReport& report);
std::string projection_json(const ProjectionReport& report);

// ---------------------------------------------------------------------------
// Descriptive statistics

std::string stats_text(const std::vector<VariableStats>& stats, const std::string& selection);
std::string stats_csv(const std::vector<VariableStats>& stats);
std::string stats_json(const std::vector<VariableStats>& stats, const std::string& selection);

// ---------------------------------------------------------------------------
// Plot-ready aggregates

struct EfficiencyAggregateRow {
  std::string period;
  std::size_t dmu_count = 0;
  double mean_theta_crs = 0.0;
  double mean_theta_vrs = 0.0;
  double mean_scale_efficiency = 0.0;
  double percent_efficient_crs = 0.0;
  double percent_efficient_vrs = 0.0;
};

struct AggregateTable {
  std::vector<EfficiencyAggregateRow> periods;
  std::vector<malmquist::PairAggregate> pairs;  // empty for a single period
  std::vector<std::string> skipped_dmus;
};

AggregateTable emit_aggregates(const PanelDataset& dataset, const dea::Tolerances& tol = {});

enum class AggregateSection { efficiency, malmquist };

std::string aggregates_text(const AggregateTable& table);
std::string aggregates_csv(const AggregateTable& table, AggregateSection section);
std::string aggregates_json(const AggregateTable& table);

}  // namespace frontier::report
