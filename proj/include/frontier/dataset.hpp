#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frontier {

/// One decision-making unit observed in one period.
struct DmuRecord {
  std::string dmu_id;
  std::string period;
  std::vector<double> inputs;
  std::vector<double> outputs;

  friend bool operator==(const DmuRecord&, const DmuRecord&) = default;
};

/// Immutable, validated panel of DMU observations.
///
/// Records keep their insertion order; `periods()` defines the period order
/// used for Malmquist pairs. Construction throws ValidationError when a record
/// does not fit the schema, a value is negative or non-finite, a
/// (dmu, period) key repeats, or a record names an undeclared period.
class PanelDataset {
 public:
  PanelDataset(std::vector<std::string> input_names,
               std::vector<std::string> output_names,
               std::vector<std::string> periods, std::vector<DmuRecord> records);

  const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  const std::vector<std::string>& output_names() const noexcept { return output_names_; }
  const std::vector<std::string>& periods() const noexcept { return periods_; }
  const std::vector<DmuRecord>& records() const noexcept { return records_; }

  std::size_t num_inputs() const noexcept { return input_names_.size(); }
  std::size_t num_outputs() const noexcept { return output_names_.size(); }

  bool has_period(std::string_view period) const;
  const DmuRecord* find(std::string_view dmu_id, std::string_view period) const;
  /// Throws LookupError for an unknown period or DMU.
  const DmuRecord& at(std::string_view dmu_id, std::string_view period) const;
  /// Records of one period in dataset order. Throws LookupError for an unknown period.
  std::vector<const DmuRecord*> period_records(std::string_view period) const;
  /// Distinct DMU ids in order of first appearance.
  std::vector<std::string> dmu_ids() const;

  /// Same records with `order` as the period sequence; it must be a
  /// permutation of the current periods.
  PanelDataset with_period_order(const std::vector<std::string>& order) const;

  friend bool operator==(const PanelDataset& a, const PanelDataset& b) {
    return a.input_names_ == b.input_names_ && a.output_names_ == b.output_names_ &&
           a.periods_ == b.periods_ && a.records_ == b.records_;
  }

 private:
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::vector<std::string> periods_;
  std::vector<DmuRecord> records_;
  std::map<std::pair<std::string, std::string>, std::size_t, std::less<>> index_;
};

/// Reads `dmu,period,in:<name>...,out:<name>...` CSV. Throws ParseError.
PanelDataset parse_panel_csv(std::istream& in);
PanelDataset parse_panel_csv(std::string_view text);
PanelDataset read_panel_csv_file(const std::string& path);

/// Writes the dataset back in schema order (inputs, then outputs), LF endings.
void write_panel_csv(const PanelDataset& dataset, std::ostream& out);

enum class VariableKind { input, output };

const char* to_string(VariableKind kind) noexcept;

struct VariableStats {
  std::string variable_name;
  VariableKind kind = VariableKind::input;
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  std::optional<double> mode;  // absent when no value repeats
  double standard_deviation = 0.0;  // sample (n - 1) denominator; 0 when n = 1
  double minimum = 0.0;
  double maximum = 0.0;
  std::optional<double> coefficient_of_variation;  // absent when mean = 0
};

/// Per-variable statistics over one period, or over every record when
/// `period` is empty. Throws ValidationError on an empty selection.
std::vector<VariableStats> descriptive_stats(const PanelDataset& dataset,
                                             std::optional<std::string> period = {});

struct BalancedPanel {
  PanelDataset dataset;
  std::vector<std::string> skipped_dmus;
};

/// Keeps only DMUs observed in every one of `periods` (at least two).
BalancedPanel balanced_subpanel(const PanelDataset& dataset,
                                const std::vector<std::string>& periods);

}  // namespace frontier
