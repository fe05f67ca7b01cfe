#include "frontier/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "frontier/error.hpp"
#include "frontier/format.hpp"

namespace frontier {

const char* to_string(VariableKind kind) noexcept {
  return kind == VariableKind::input ? "input" : "output";
}

PanelDataset::PanelDataset(std::vector<std::string> input_names,
                           std::vector<std::string> output_names,
                           std::vector<std::string> periods,
                           std::vector<DmuRecord> records)
    : input_names_(std::move(input_names)),
      output_names_(std::move(output_names)),
      periods_(std::move(periods)),
      records_(std::move(records)) {
  if (input_names_.empty()) throw ValidationError("dataset needs at least one input");
  if (output_names_.empty()) throw ValidationError("dataset needs at least one output");
  if (periods_.empty()) throw ValidationError("dataset needs at least one period");
  if (records_.empty()) throw ValidationError("dataset needs at least one record");

  const std::set<std::string, std::less<>> declared(periods_.begin(), periods_.end());
  if (declared.size() != periods_.size()) throw ValidationError("duplicate period label");

  for (std::size_t i = 0; i < records_.size(); ++i) {
    const DmuRecord& rec = records_[i];
    const std::string where = "record " + rec.dmu_id + "/" + rec.period;
    if (rec.dmu_id.empty() || rec.period.empty()) {
      throw ValidationError("record " + std::to_string(i) + " has an empty dmu id or period");
    }
    if (!declared.contains(rec.period)) {
      throw ValidationError(where + " uses undeclared period");
    }
    if (rec.inputs.size() != input_names_.size() ||
        rec.outputs.size() != output_names_.size()) {
      throw ValidationError(where + " does not match the schema dimensions");
    }
    for (const auto* values : {&rec.inputs, &rec.outputs}) {
      for (double v : *values) {
        if (!std::isfinite(v)) throw ValidationError(where + " has a non-finite value");
        if (v < 0.0) throw ValidationError(where + " has a negative value");
      }
    }
    if (!index_.emplace(std::make_pair(rec.dmu_id, rec.period), i).second) {
      throw ValidationError("duplicate key " + rec.dmu_id + "/" + rec.period);
    }
  }
}

bool PanelDataset::has_period(std::string_view period) const {
  return std::find(periods_.begin(), periods_.end(), period) != periods_.end();
}

const DmuRecord* PanelDataset::find(std::string_view dmu_id, std::string_view period) const {
  const auto it = index_.find(std::make_pair(std::string(dmu_id), std::string(period)));
  return it == index_.end() ? nullptr : &records_[it->second];
}

const DmuRecord& PanelDataset::at(std::string_view dmu_id, std::string_view period) const {
  if (!has_period(period)) throw LookupError("unknown period '" + std::string(period) + "'");
  const DmuRecord* rec = find(dmu_id, period);
  if (rec == nullptr) {
    throw LookupError("DMU '" + std::string(dmu_id) + "' has no record in period '" +
                      std::string(period) + "'");
  }
  return *rec;
}

std::vector<const DmuRecord*> PanelDataset::period_records(std::string_view period) const {
  if (!has_period(period)) throw LookupError("unknown period '" + std::string(period) + "'");
  std::vector<const DmuRecord*> out;
  for (const DmuRecord& rec : records_) {
    if (rec.period == period) out.push_back(&rec);
  }
  return out;
}

std::vector<std::string> PanelDataset::dmu_ids() const {
  std::vector<std::string> ids;
  std::set<std::string, std::less<>> seen;
  for (const DmuRecord& rec : records_) {
    if (seen.insert(rec.dmu_id).second) ids.push_back(rec.dmu_id);
  }
  return ids;
}

PanelDataset PanelDataset::with_period_order(const std::vector<std::string>& order) const {
  std::vector<std::string> sorted_order = order;
  std::vector<std::string> sorted_current = periods_;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(sorted_current.begin(), sorted_current.end());
  if (sorted_order != sorted_current) {
    throw ValidationError("period order must be a permutation of the dataset periods");
  }
  return PanelDataset(input_names_, output_names_, order, records_);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

struct Column {
  VariableKind kind;
  std::size_t slot;
};

}  // namespace

PanelDataset parse_panel_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  // (1-based line number, content without line terminator), blank lines dropped.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (!trim(line).empty()) lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw ParseError(ParseErrorCode::empty_input, 0, 0, "no header line");

  const auto [header_line, header_text] = lines.front();
  const auto header = split_fields(header_text);
  if (header.size() < 2 || header[0] != "dmu" || header[1] != "period") {
    throw ParseError(ParseErrorCode::bad_header, header_line, 1,
                     "header must start with 'dmu,period'");
  }

  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<Column> columns;
  for (std::size_t c = 2; c < header.size(); ++c) {
    const std::string_view field = header[c];
    VariableKind kind;
    std::string_view name;
    if (field.starts_with("in:")) {
      kind = VariableKind::input;
      name = trim(field.substr(3));
    } else if (field.starts_with("out:")) {
      kind = VariableKind::output;
      name = trim(field.substr(4));
    } else {
      throw ParseError(ParseErrorCode::missing_prefix, header_line, c + 1,
                       "column '" + std::string(field) + "' lacks an 'in:' or 'out:' prefix");
    }
    if (name.empty()) {
      throw ParseError(ParseErrorCode::missing_prefix, header_line, c + 1,
                       "column prefix without a variable name");
    }
    auto& names = kind == VariableKind::input ? input_names : output_names;
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError(ParseErrorCode::duplicate_column, header_line, c + 1,
                       "variable '" + std::string(name) + "' declared twice");
    }
    columns.push_back({kind, names.size()});
    names.emplace_back(name);
  }
  if (input_names.empty() || output_names.empty()) {
    throw ParseError(ParseErrorCode::missing_role, header_line, 0,
                     "header needs at least one 'in:' and one 'out:' column");
  }
  if (lines.size() == 1) throw ParseError(ParseErrorCode::empty_input, 0, 0, "no data rows");

  std::vector<std::string> periods;
  std::vector<DmuRecord> records;
  std::map<std::pair<std::string, std::string>, std::size_t> first_seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [ln, content] = lines[i];
    const auto fields = split_fields(content);
    if (fields.size() != header.size()) {
      throw ParseError(ParseErrorCode::ragged_row, ln, 0,
                       "expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    DmuRecord rec;
    rec.dmu_id = std::string(fields[0]);
    rec.period = std::string(fields[1]);
    if (rec.dmu_id.empty()) throw ParseError(ParseErrorCode::empty_key, ln, 1, "empty dmu id");
    if (rec.period.empty()) throw ParseError(ParseErrorCode::empty_key, ln, 2, "empty period");
    rec.inputs.resize(input_names.size());
    rec.outputs.resize(output_names.size());
    for (std::size_t c = 2; c < fields.size(); ++c) {
      const std::string_view token = fields[c];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(ParseErrorCode::non_numeric, ln, c + 1,
                         "'" + std::string(token) + "' is not a number");
      }
      if (!std::isfinite(value)) {
        throw ParseError(ParseErrorCode::non_finite, ln, c + 1,
                         "'" + std::string(token) + "' is not finite");
      }
      if (value < 0.0) {
        throw ParseError(ParseErrorCode::negative_value, ln, c + 1,
                         "'" + std::string(token) + "' is negative");
      }
      const Column col = columns[c - 2];
      (col.kind == VariableKind::input ? rec.inputs : rec.outputs)[col.slot] = value;
    }
    const auto [it, inserted] = first_seen.emplace(std::make_pair(rec.dmu_id, rec.period), ln);
    if (!inserted) {
      throw ParseError(ParseErrorCode::duplicate_key, ln, 0,
                       "(" + rec.dmu_id + ", " + rec.period + ") already defined at line " +
                           std::to_string(it->second));
    }
    if (std::find(periods.begin(), periods.end(), rec.period) == periods.end()) {
      periods.push_back(rec.period);
    }
    records.push_back(std::move(rec));
  }
  return PanelDataset(std::move(input_names), std::move(output_names), std::move(periods),
                      std::move(records));
}

PanelDataset parse_panel_csv(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_panel_csv(std::string_view(text));
}

PanelDataset read_panel_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  return parse_panel_csv(in);
}

void write_panel_csv(const PanelDataset& dataset, std::ostream& out) {
  out << "dmu,period";
  for (const auto& name : dataset.input_names()) out << ",in:" << name;
  for (const auto& name : dataset.output_names()) out << ",out:" << name;
  out << '\n';
  for (const DmuRecord& rec : dataset.records()) {
    out << rec.dmu_id << ',' << rec.period;
    for (double v : rec.inputs) out << ',' << format_exact(v);
    for (double v : rec.outputs) out << ',' << format_exact(v);
    out << '\n';
  }
}

namespace {

VariableStats summarize(std::string name, VariableKind kind, std::vector<double> values) {
  VariableStats s;
  s.variable_name = std::move(name);
  s.kind = kind;
  s.count = values.size();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.minimum = values.front();
  s.maximum = values.back();
  s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);

  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.standard_deviation = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  if (s.mean != 0.0) s.coefficient_of_variation = s.standard_deviation / s.mean;

  // Most frequent repeated value; the smallest wins a tie.
  std::size_t best_run = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[j] == values[i]) ++j;
    if (j - i > best_run) {
      best_run = j - i;
      s.mode = values[i];
    }
    i = j;
  }
  return s;
}

}  // namespace

std::vector<VariableStats> descriptive_stats(const PanelDataset& dataset,
                                             std::optional<std::string> period) {
  std::vector<const DmuRecord*> selected;
  if (period && !period->empty()) {
    selected = dataset.period_records(*period);
  } else {
    for (const DmuRecord& rec : dataset.records()) selected.push_back(&rec);
  }
  if (selected.empty()) throw ValidationError("descriptive statistics over an empty selection");

  std::vector<VariableStats> out;
  for (std::size_t i = 0; i < dataset.num_inputs(); ++i) {
    std::vector<double> values;
    for (const DmuRecord* rec : selected) values.push_back(rec->inputs[i]);
    out.push_back(summarize(dataset.input_names()[i], VariableKind::input, std::move(values)));
  }
  for (std::size_t r = 0; r < dataset.num_outputs(); ++r) {
    std::vector<double> values;
    for (const DmuRecord* rec : selected) values.push_back(rec->outputs[r]);
    out.push_back(summarize(dataset.output_names()[r], VariableKind::output, std::move(values)));
  }
  return out;
}

BalancedPanel balanced_subpanel(const PanelDataset& dataset,
                                const std::vector<std::string>& periods) {
  if (periods.size() < 2) throw ValidationError("a balanced panel needs at least two periods");
  for (const auto& p : periods) {
    if (!dataset.has_period(p)) throw LookupError("unknown period '" + p + "'");
  }
  BalancedPanel result{dataset, {}};
  std::set<std::string, std::less<>> keep;
  for (const auto& id : dataset.dmu_ids()) {
    const bool complete = std::all_of(periods.begin(), periods.end(), [&](const std::string& p) {
      return dataset.find(id, p) != nullptr;
    });
    if (complete) keep.insert(id);
    else result.skipped_dmus.push_back(id);
  }
  if (keep.empty()) throw ValidationError("no DMU is observed in every requested period");

  std::vector<DmuRecord> records;
  for (const DmuRecord& rec : dataset.records()) {
    if (keep.contains(rec.dmu_id) &&
        std::find(periods.begin(), periods.end(), rec.period) != periods.end()) {
      records.push_back(rec);
    }
  }
  result.dataset = PanelDataset(dataset.input_names(), dataset.output_names(), periods,
                                std::move(records));
  return result;
}

}  // namespace frontier
