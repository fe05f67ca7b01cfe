#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frontier/dataset.hpp"
#include "frontier/dea.hpp"

namespace frontier::malmquist {

/// Farrell input distance of one period's data against another period's
/// frontier. Cross-period values may exceed 1.
struct CrossDistance {
  std::string evaluated_period;
  std::string frontier_period;
  dea::Rts assumption = dea::Rts::crs;
  double value = 0.0;  // meaningful only when feasible
  bool feasible = false;
};

CrossDistance cross_distance(const PanelDataset& dataset, std::string_view dmu_id,
                             std::string_view data_period, std::string_view frontier_period,
                             dea::Rts assumption, const dea::Tolerances& tol = {});

/// The four distances for a period pair (base, next), named data-on-frontier.
struct DistanceQuad {
  double base_on_base = 0.0;
  double next_on_base = 0.0;
  double base_on_next = 0.0;
  double next_on_next = 0.0;
};

/// Five-way decomposition; tfpch = effch * techch, effch = pech * sech.
struct Components {
  double effch = 1.0;
  double techch = 1.0;
  double pech = 1.0;
  double sech = 1.0;
  double tfpch = 1.0;
};

struct MalmquistResult {
  std::string dmu_id;
  std::string base_period;
  std::string next_period;
  Components index;
  DistanceQuad crs;
  double vrs_base_on_base = 0.0;
  double vrs_next_on_next = 0.0;
  /// Cross-period VRS distances; empty when the VRS problem is infeasible.
  std::optional<double> vrs_next_on_base;
  std::optional<double> vrs_base_on_next;
  std::vector<std::string> diagnostics;
};

/// Input-oriented Malmquist TFP index between `base` and `next` for one DMU.
/// tfpch and its effch/techch split come from CRS distances; pech uses the
/// same-period VRS distances and sech = effch / pech.
MalmquistResult malmquist_index(const PanelDataset& dataset, std::string_view dmu_id,
                                std::string_view base, std::string_view next,
                                const dea::Tolerances& tol = {});

struct Extreme {
  std::string dmu_id;
  double value = 0.0;
};

struct PairAggregate {
  std::string base_period;
  std::string next_period;
  std::size_t dmu_count = 0;
  Components geometric_mean;
  Components arithmetic_mean;
  std::size_t improved_count = 0;  // tfpch strictly above 1
  double improved_percent = 0.0;
  Extreme min_tfpch;
  Extreme max_tfpch;
};

struct MalmquistPanel {
  std::vector<MalmquistResult> results;  // pair-major, dataset order within a pair
  std::vector<PairAggregate> pairs;
  std::vector<std::string> skipped_dmus;
};

/// Every DMU observed in all periods, over every adjacent period pair.
MalmquistPanel malmquist_panel(const PanelDataset& dataset, const dea::Tolerances& tol = {});

/// Aggregates for one pair's results (all sharing the same periods).
PairAggregate aggregate_pair(const std::vector<MalmquistResult>& results,
                             const dea::Tolerances& tol = {});

}  // namespace frontier::malmquist
