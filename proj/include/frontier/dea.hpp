#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frontier/dataset.hpp"
#include "frontier/lp.hpp"

namespace frontier::dea {

/// Only input orientation is implemented.
enum class Orientation { input };

enum class Rts { crs, vrs, nirs };

/// Local returns-to-scale regime; `not_classified` when a single model was run.
enum class RtsClass { crs, drs, irs, not_classified };

const char* to_string(Rts rts) noexcept;       // "CRS", "VRS", "NIRS"
const char* to_string(RtsClass cls) noexcept;  // "CRS", "DRS", "IRS", "-"
std::optional<Rts> parse_rts(std::string_view text);  // case-insensitive

struct Tolerances {
  lp::SolverOptions solver;
  /// theta >= 1 - efficient counts as efficient in aggregates and RTS tests.
  double efficient = 1e-6;
  /// theta this close to 1 with zero slacks reports the DMU as its own peer.
  double identity = 1e-9;
};

struct PeerWeight {
  std::string dmu_id;
  double weight = 0.0;

  friend bool operator==(const PeerWeight&, const PeerWeight&) = default;
};

struct EfficiencyResult {
  std::string dmu_id;
  std::string period;
  Rts assumption = Rts::crs;
  /// Farrell input efficiency in (0, 1].
  double theta = 0.0;
  /// Positive intensity weights in reference-set order.
  std::vector<PeerWeight> lambdas;
  std::vector<double> input_slacks;
  std::vector<double> output_slacks;
  RtsClass rts_class = RtsClass::not_classified;
};

struct SlackResult {
  std::vector<double> input_slacks;
  std::vector<double> output_slacks;
  std::vector<PeerWeight> lambdas;
};

struct ScaleResult {
  std::string dmu_id;
  std::string period;
  double theta_crs = 0.0;
  double theta_vrs = 0.0;
  double theta_nirs = 0.0;
  double scale_efficiency = 0.0;
  RtsClass rts_class = RtsClass::not_classified;
};

/// Outcome of measuring an arbitrary (inputs, outputs) point against a
/// reference technology. Lambdas align with the reference records.
struct PointEvaluation {
  bool feasible = false;
  double theta = 0.0;
  std::vector<double> lambdas;
  std::vector<double> input_slacks;   // raw units
  std::vector<double> output_slacks;  // raw units
};

/// Input-oriented envelopment problem for one point against `reference`.
///
/// Inputs of the point must be strictly positive and at least one output
/// positive (DomainError otherwise). Each constraint row is scaled by the
/// largest magnitude of its variable so the problem is invariant to units.
/// With `maximize_slacks`, a second LP holds theta fixed and maximizes the
/// sum of unit-free slacks; lambdas and slacks then come from that LP.
/// An infeasible first phase yields `feasible = false`.
PointEvaluation evaluate_point(std::span<const DmuRecord* const> reference,
                               std::span<const double> inputs,
                               std::span<const double> outputs, Rts assumption,
                               bool maximize_slacks, const Tolerances& tol = {});

/// Phase-1 radial efficiency against the same-period frontier. Slacks are the
/// constraint residuals at the phase-1 optimum.
EfficiencyResult radial_efficiency(const PanelDataset& dataset, std::string_view dmu_id,
                                   std::string_view period, Rts assumption,
                                   const Tolerances& tol = {},
                                   Orientation orientation = Orientation::input);

/// Phase-2 slack maximization with theta held fixed.
SlackResult max_slacks(const PanelDataset& dataset, std::string_view dmu_id,
                       std::string_view period, Rts assumption, double theta,
                       const Tolerances& tol = {});

/// Both phases: radial theta followed by maximal slacks and their lambdas.
EfficiencyResult evaluate(const PanelDataset& dataset, std::string_view dmu_id,
                          std::string_view period, Rts assumption, const Tolerances& tol = {});

/// CRS, VRS and NIRS radial scores, SE = theta_crs / theta_vrs and the RTS class.
ScaleResult scale_analysis(const PanelDataset& dataset, std::string_view dmu_id,
                           std::string_view period, const Tolerances& tol = {});

struct EfficiencyTable {
  std::string period;
  Rts assumption = Rts::crs;
  std::vector<EfficiencyResult> results;  // dataset order
  double mean_theta = 0.0;
  std::size_t efficient_count = 0;
  double efficient_percent = 0.0;
};

EfficiencyTable efficiency_table(const PanelDataset& dataset, std::string_view period,
                                 Rts assumption, const Tolerances& tol = {});

}  // namespace frontier::dea
