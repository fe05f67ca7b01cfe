#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frontier/dataset.hpp"

namespace frontier::testing {

/// A(2,2), B(4,5), C(5,3): one input, one output, a single period "t".
inline PanelDataset three_dmu(const std::string& period = "t") {
  return PanelDataset({"x"}, {"y"}, {period},
                      {{"A", period, {2.0}, {2.0}},
                       {"B", period, {4.0}, {5.0}},
                       {"C", period, {5.0}, {3.0}}});
}

inline std::string three_dmu_csv(const std::string& period = "t") {
  return "dmu,period,in:x,out:y\nA," + period + ",2,2\nB," + period + ",4,5\nC," + period +
         ",5,3\n";
}

/// Every DMU observed in every period, values uniform in [lo, hi].
inline PanelDataset random_panel(std::mt19937_64& rng, std::size_t dmus, std::size_t periods,
                                 std::size_t inputs, std::size_t outputs, double lo = 1.0,
                                 double hi = 100.0) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::vector<std::string> in_names, out_names, period_names;
  for (std::size_t i = 0; i < inputs; ++i) in_names.push_back("x" + std::to_string(i + 1));
  for (std::size_t r = 0; r < outputs; ++r) out_names.push_back("y" + std::to_string(r + 1));
  for (std::size_t t = 0; t < periods; ++t) period_names.push_back(std::to_string(2017 + t));
  std::vector<DmuRecord> records;
  for (const auto& p : period_names) {
    for (std::size_t k = 0; k < dmus; ++k) {
      DmuRecord rec{"D" + std::to_string(k + 1), p, {}, {}};
      for (std::size_t i = 0; i < inputs; ++i) rec.inputs.push_back(value(rng));
      for (std::size_t r = 0; r < outputs; ++r) rec.outputs.push_back(value(rng));
      records.push_back(std::move(rec));
    }
  }
  return PanelDataset(in_names, out_names, period_names, std::move(records));
}

/// 77 DMUs x 4 periods x (3 inputs, 4 outputs), the shape of a regional
/// hospital network panel. Outputs loosely track inputs so that efficiency
/// scores spread over (0, 1] instead of collapsing onto a few extremes.
inline PanelDataset hospital_panel(std::uint64_t seed = 20172020) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> size(5.0, 0.8);
  std::uniform_real_distribution<double> noise(0.6, 1.4);
  std::uniform_real_distribution<double> drift(0.9, 1.15);
  const std::vector<std::string> periods{"2017", "2018", "2019", "2020"};
  std::vector<DmuRecord> records;
  std::vector<double> scale(77);
  for (auto& s : scale) s = size(rng);
  for (std::size_t t = 0; t < periods.size(); ++t) {
    const double shift = drift(rng);
    for (std::size_t k = 0; k < scale.size(); ++k) {
      const double s = scale[k];
      DmuRecord rec{"H" + std::to_string(k + 1), periods[t], {}, {}};
      rec.inputs = {std::round(s * 0.8 * noise(rng)), std::round(s * 0.15 * noise(rng)) + 1.0,
                    std::round(s * 0.5 * noise(rng)) + 1.0};
      rec.outputs = {std::round(s * 40.0 * shift * noise(rng)),
                     std::round(s * 3.0 * shift * noise(rng)),
                     std::round(s * 1.2 * shift * noise(rng)),
                     std::round(s * 0.3 * shift * noise(rng)) + 1.0};
      records.push_back(std::move(rec));
    }
  }
  return PanelDataset({"beds", "doctors", "nurses"},
                      {"consultations", "admissions", "surgeries", "births"}, periods,
                      std::move(records));
}

/// Copy of `ds` with input column `i` (or output column when `output` is set) multiplied by c.
inline PanelDataset scale_column(const PanelDataset& ds, bool output, std::size_t col, double c) {
  std::vector<DmuRecord> records = ds.records();
  for (auto& rec : records) (output ? rec.outputs : rec.inputs)[col] *= c;
  return PanelDataset(ds.input_names(), ds.output_names(), ds.periods(), std::move(records));
}

inline std::string to_csv(const PanelDataset& ds) {
  std::ostringstream out;
  write_panel_csv(ds, out);
  return out.str();
}

/// Peer weights as displayed in one rendered Projection Summary block: the
/// last token of every line that reaches the peer-listing column.
inline std::vector<double> displayed_peer_weights(const std::string& block) {
  std::istringstream in(block);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::vector<double> weights;
  if (lines.size() < 3) return weights;
  const auto column = lines[2].find("Listing of peers:");
  if (column == std::string::npos) return weights;
  for (std::size_t i = 3; i < lines.size() && !lines[i].empty(); ++i) {
    if (lines[i].size() <= column) continue;
    weights.push_back(std::stod(lines[i].substr(lines[i].rfind(' ') + 1)));
  }
  return weights;
}

/// Scratch file removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const std::string& suffix = ".csv");
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is appended when `merge_stderr`.
CommandResult run_command(const std::string& command, bool merge_stderr = false);

std::string read_file(const std::string& path);

}  // namespace frontier::testing
