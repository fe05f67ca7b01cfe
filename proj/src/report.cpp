#include "frontier/report.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

#include "frontier/error.hpp"
#include "frontier/format.hpp"

namespace frontier::report {

using json = nlohmann::ordered_json;

const char* to_string(ModelSet set) noexcept {
  switch (set) {
    case ModelSet::crs: return "crs";
    case ModelSet::vrs: return "vrs";
    case ModelSet::nirs: return "nirs";
    case ModelSet::both: return "both";
  }
  return "?";
}

std::optional<ModelSet> parse_model_set(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "crs") return ModelSet::crs;
  if (lower == "vrs") return ModelSet::vrs;
  if (lower == "nirs") return ModelSet::nirs;
  if (lower == "both") return ModelSet::both;
  return std::nullopt;
}

std::vector<dea::Rts> models_of(ModelSet set) {
  switch (set) {
    case ModelSet::crs: return {dea::Rts::crs};
    case ModelSet::vrs: return {dea::Rts::vrs};
    case ModelSet::nirs: return {dea::Rts::nirs};
    case ModelSet::both: return {dea::Rts::crs, dea::Rts::vrs};
  }
  return {};
}

namespace {

std::string fx(double v) { return format_fixed(v, kDisplayDecimals); }
std::string pct(double v) { return format_fixed(v, 1) + "%"; }
std::string ex(double v) { return format_exact(v); }

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> selected_periods(const PanelDataset& dataset,
                                          const std::optional<std::string>& period) {
  if (period && !period->empty()) {
    if (!dataset.has_period(*period)) throw LookupError("unknown period '" + *period + "'");
    return {*period};
  }
  return dataset.periods();
}

json named_values(const std::vector<std::string>& names, const std::vector<double>& values) {
  json obj = json::object();
  for (std::size_t k = 0; k < names.size(); ++k) obj[names[k]] = values[k];
  return obj;
}

json peers_json(const std::vector<dea::PeerWeight>& peers) {
  json arr = json::array();
  for (const auto& p : peers) arr.push_back({{"dmu", p.dmu_id}, {"weight", p.weight}});
  return arr;
}

std::string peers_field(const std::vector<dea::PeerWeight>& peers) {
  std::string out;
  for (const auto& p : peers) {
    if (!out.empty()) out += ';';
    out += p.dmu_id + "=" + ex(p.weight);
  }
  return out;
}

std::size_t id_width(const std::vector<std::string>& ids, std::size_t minimum) {
  std::size_t w = minimum;
  for (const auto& id : ids) w = std::max(w, id.size());
  return w + 2;
}

}  // namespace

// ---------------------------------------------------------------------------
// Efficiency

EfficiencyReport compute_efficiency(const PanelDataset& dataset, ModelSet models,
                                    const std::optional<std::string>& period,
                                    const dea::Tolerances& tol) {
  EfficiencyReport report;
  report.models = models;
  const auto model_list = models_of(models);
  for (const auto& p : selected_periods(dataset, period)) {
    const auto records = dataset.period_records(p);
    if (records.empty()) throw ValidationError("period '" + p + "' has no DMUs");
    PeriodEfficiency pe;
    pe.period = p;
    for (const DmuRecord* rec : records) {
      DmuEfficiency d;
      d.dmu_id = rec->dmu_id;
      if (models == ModelSet::both) d.scale = dea::scale_analysis(dataset, rec->dmu_id, p, tol);
      for (dea::Rts m : model_list) {
        d.models.push_back(dea::evaluate(dataset, rec->dmu_id, p, m, tol));
        if (d.scale) d.models.back().rts_class = d.scale->rts_class;
      }
      pe.dmus.push_back(std::move(d));
    }
    const double n = static_cast<double>(pe.dmus.size());
    for (std::size_t k = 0; k < model_list.size(); ++k) {
      ModelSummary s;
      s.assumption = model_list[k];
      double sum = 0.0;
      for (const auto& d : pe.dmus) {
        sum += d.models[k].theta;
        if (d.models[k].theta >= 1.0 - tol.efficient) ++s.efficient_count;
      }
      s.mean_theta = sum / n;
      s.efficient_percent = 100.0 * static_cast<double>(s.efficient_count) / n;
      pe.summaries.push_back(s);
    }
    if (models == ModelSet::both) {
      double sum = 0.0;
      for (const auto& d : pe.dmus) sum += d.scale->scale_efficiency;
      pe.mean_scale_efficiency = sum / n;
    }
    report.periods.push_back(std::move(pe));
  }
  return report;
}

std::string efficiency_text(const EfficiencyReport& report) {
  std::ostringstream out;
  const bool both = report.models == ModelSet::both;
  bool first = true;
  for (const auto& pe : report.periods) {
    if (!first) out << '\n';
    first = false;
    std::vector<std::string> ids;
    for (const auto& d : pe.dmus) ids.push_back(d.dmu_id);
    const std::size_t w = id_width(ids, 10);

    out << "Efficiency scores, period " << pe.period << " (input orientation)\n";
    std::string header = pad_right("DMU", w);
    for (const auto& s : pe.summaries) header += pad_left(std::string(dea::to_string(s.assumption)) + " TE", 9);
    if (both) header += pad_left("Scale", 9) + "  RTS";
    else header += "  Peers";
    out << header << '\n';

    for (const auto& d : pe.dmus) {
      std::string line = pad_right(d.dmu_id, w);
      for (const auto& m : d.models) line += pad_left(fx(m.theta), 9);
      if (both) {
        line += pad_left(fx(d.scale->scale_efficiency), 9) + "  " + dea::to_string(d.scale->rts_class);
      } else {
        line += " ";
        for (const auto& p : d.models.front().lambdas) line += " " + p.dmu_id + " (" + fx(p.weight) + ")";
      }
      out << rstrip(line) << '\n';
    }
    std::string mean = pad_right("Mean", w);
    for (const auto& s : pe.summaries) mean += pad_left(fx(s.mean_theta), 9);
    if (pe.mean_scale_efficiency) mean += pad_left(fx(*pe.mean_scale_efficiency), 9);
    out << mean << '\n';
    for (const auto& s : pe.summaries) {
      out << "Efficient (" << dea::to_string(s.assumption) << "): " << s.efficient_count << " of "
          << pe.dmus.size() << " (" << pct(s.efficient_percent) << ")\n";
    }
  }
  return out.str();
}

std::string efficiency_csv(const EfficiencyReport& report) {
  std::ostringstream out;
  const auto models = models_of(report.models);
  out << "period,dmu";
  for (dea::Rts m : models) {
    const std::string tag = lower(dea::to_string(m));
    out << ",theta_" << tag << ",peers_" << tag;
  }
  if (report.models == ModelSet::both) out << ",theta_nirs,scale_efficiency,rts_class";
  out << '\n';
  for (const auto& pe : report.periods) {
    for (const auto& d : pe.dmus) {
      out << pe.period << ',' << d.dmu_id;
      for (const auto& m : d.models) out << ',' << ex(m.theta) << ',' << peers_field(m.lambdas);
      if (d.scale) {
        out << ',' << ex(d.scale->theta_nirs) << ',' << ex(d.scale->scale_efficiency) << ','
            << dea::to_string(d.scale->rts_class);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string efficiency_json(const EfficiencyReport& report, const PanelDataset& dataset) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "efficiency";
  doc["orientation"] = "input";
  doc["models"] = to_string(report.models);
  json periods = json::array();
  for (const auto& pe : report.periods) {
    json dmus = json::array();
    for (const auto& d : pe.dmus) {
      json results = json::object();
      for (const auto& m : d.models) {
        results[dea::to_string(m.assumption)] = {
            {"theta", m.theta},
            {"lambdas", peers_json(m.lambdas)},
            {"input_slacks", named_values(dataset.input_names(), m.input_slacks)},
            {"output_slacks", named_values(dataset.output_names(), m.output_slacks)},
        };
      }
      json entry = {{"dmu", d.dmu_id}, {"results", results}};
      if (d.scale) {
        entry["scale"] = {{"theta_crs", d.scale->theta_crs},
                          {"theta_vrs", d.scale->theta_vrs},
                          {"theta_nirs", d.scale->theta_nirs},
                          {"scale_efficiency", d.scale->scale_efficiency},
                          {"rts_class", dea::to_string(d.scale->rts_class)}};
      }
      dmus.push_back(std::move(entry));
    }
    json summary = json::object();
    summary["dmu_count"] = pe.dmus.size();
    for (const auto& s : pe.summaries) {
      summary[dea::to_string(s.assumption)] = {{"mean_theta", s.mean_theta},
                                               {"efficient_count", s.efficient_count},
                                               {"efficient_percent", s.efficient_percent}};
    }
    if (pe.mean_scale_efficiency) summary["mean_scale_efficiency"] = *pe.mean_scale_efficiency;
    periods.push_back({{"period", pe.period}, {"dmus", dmus}, {"summary", summary}});
  }
  doc["periods"] = std::move(periods);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Malmquist

namespace {

json components_json(const malmquist::Components& c) {
  return {{"effch", c.effch}, {"techch", c.techch}, {"pech", c.pech},
          {"sech", c.sech},   {"tfpch", c.tfpch}};
}

std::string components_row(const malmquist::Components& c) {
  return pad_left(fx(c.effch), 9) + pad_left(fx(c.techch), 9) + pad_left(fx(c.pech), 9) +
         pad_left(fx(c.sech), 9) + pad_left(fx(c.tfpch), 9);
}

json pair_json(const malmquist::PairAggregate& a) {
  return {{"base_period", a.base_period},
          {"next_period", a.next_period},
          {"dmu_count", a.dmu_count},
          {"geometric_mean", components_json(a.geometric_mean)},
          {"arithmetic_mean", components_json(a.arithmetic_mean)},
          {"tfpch_above_1_count", a.improved_count},
          {"tfpch_above_1_percent", a.improved_percent},
          {"min_tfpch", {{"dmu", a.min_tfpch.dmu_id}, {"value", a.min_tfpch.value}}},
          {"max_tfpch", {{"dmu", a.max_tfpch.dmu_id}, {"value", a.max_tfpch.value}}}};
}

}  // namespace

std::string malmquist_text(const malmquist::MalmquistPanel& panel) {
  std::ostringstream out;
  if (!panel.skipped_dmus.empty()) {
    out << "Skipped (not observed in every period):";
    for (const auto& id : panel.skipped_dmus) out << ' ' << id;
    out << "\n\n";
  }
  std::vector<std::string> ids{"Arithmetic mean"};
  for (const auto& r : panel.results) ids.push_back(r.dmu_id);
  const std::size_t w = id_width(ids, 3);

  for (std::size_t p = 0; p < panel.pairs.size(); ++p) {
    const auto& agg = panel.pairs[p];
    if (p > 0) out << '\n';
    out << "Malmquist index summary, " << agg.base_period << " -> " << agg.next_period
        << " (input orientation)\n";
    out << pad_right("DMU", w) << pad_left("effch", 9) << pad_left("techch", 9)
        << pad_left("pech", 9) << pad_left("sech", 9) << pad_left("tfpch", 9) << '\n';
    std::vector<const malmquist::MalmquistResult*> diagnosed;
    for (const auto& r : panel.results) {
      if (r.base_period != agg.base_period || r.next_period != agg.next_period) continue;
      out << pad_right(r.dmu_id, w) << components_row(r.index) << '\n';
      if (!r.diagnostics.empty()) diagnosed.push_back(&r);
    }
    out << pad_right("Geometric mean", w) << components_row(agg.geometric_mean) << '\n';
    out << pad_right("Arithmetic mean", w) << components_row(agg.arithmetic_mean) << '\n';
    out << "tfpch > 1: " << agg.improved_count << " of " << agg.dmu_count << " ("
        << pct(agg.improved_percent) << ")\n";
    out << "Lowest tfpch: " << agg.min_tfpch.dmu_id << " (" << fx(agg.min_tfpch.value)
        << "); highest tfpch: " << agg.max_tfpch.dmu_id << " (" << fx(agg.max_tfpch.value)
        << ")\n";
    for (const auto* r : diagnosed) {
      for (const auto& d : r->diagnostics) out << "Note: " << r->dmu_id << ": " << d << '\n';
    }
  }
  return out.str();
}

std::string malmquist_csv(const malmquist::MalmquistPanel& panel) {
  std::ostringstream out;
  out << "base_period,next_period,dmu,effch,techch,pech,sech,tfpch,"
         "crs_base_on_base,crs_next_on_base,crs_base_on_next,crs_next_on_next,"
         "vrs_base_on_base,vrs_next_on_next,vrs_next_on_base,vrs_base_on_next,diagnostics\n";
  for (const auto& r : panel.results) {
    const auto& c = r.index;
    out << r.base_period << ',' << r.next_period << ',' << r.dmu_id << ',' << ex(c.effch) << ','
        << ex(c.techch) << ',' << ex(c.pech) << ',' << ex(c.sech) << ',' << ex(c.tfpch) << ','
        << ex(r.crs.base_on_base) << ',' << ex(r.crs.next_on_base) << ','
        << ex(r.crs.base_on_next) << ',' << ex(r.crs.next_on_next) << ','
        << ex(r.vrs_base_on_base) << ',' << ex(r.vrs_next_on_next) << ','
        << (r.vrs_next_on_base ? ex(*r.vrs_next_on_base) : "") << ','
        << (r.vrs_base_on_next ? ex(*r.vrs_base_on_next) : "") << ',';
    for (std::size_t k = 0; k < r.diagnostics.size(); ++k) {
      out << (k ? ";" : "") << r.diagnostics[k];
    }
    out << '\n';
  }
  return out.str();
}

std::string malmquist_json(const malmquist::MalmquistPanel& panel) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "malmquist";
  doc["orientation"] = "input";
  doc["skipped_dmus"] = panel.skipped_dmus;
  json results = json::array();
  for (const auto& r : panel.results) {
    json entry = {{"dmu", r.dmu_id},
                  {"base_period", r.base_period},
                  {"next_period", r.next_period},
                  {"index", components_json(r.index)},
                  {"crs_distances",
                   {{"base_on_base", r.crs.base_on_base},
                    {"next_on_base", r.crs.next_on_base},
                    {"base_on_next", r.crs.base_on_next},
                    {"next_on_next", r.crs.next_on_next}}}};
    json vrs = {{"base_on_base", r.vrs_base_on_base}, {"next_on_next", r.vrs_next_on_next}};
    vrs["next_on_base"] = r.vrs_next_on_base ? json(*r.vrs_next_on_base) : json(nullptr);
    vrs["base_on_next"] = r.vrs_base_on_next ? json(*r.vrs_base_on_next) : json(nullptr);
    entry["vrs_distances"] = std::move(vrs);
    entry["diagnostics"] = r.diagnostics;
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  json pairs = json::array();
  for (const auto& a : panel.pairs) pairs.push_back(pair_json(a));
  doc["pairs"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Projections

ProjectionReport compute_projections(const PanelDataset& dataset, dea::Rts assumption,
                                     const std::optional<std::string>& period,
                                     const std::optional<std::string>& dmu_id,
                                     const dea::Tolerances& tol) {
  ProjectionReport report;
  report.assumption = assumption;
  const bool single = dmu_id && !dmu_id->empty();
  for (const auto& p : selected_periods(dataset, period)) {
    if (single) {
      if (dataset.find(*dmu_id, p) == nullptr && !(period && !period->empty())) continue;
      report.summaries.push_back(benchmarking::project(dataset, *dmu_id, p, assumption, tol));
      continue;
    }
    for (const DmuRecord* rec : dataset.period_records(p)) {
      report.summaries.push_back(benchmarking::project(dataset, rec->dmu_id, p, assumption, tol));
    }
    report.frequencies.push_back({p, benchmarking::peer_frequency(dataset, p, assumption, tol)});
  }
  if (single && report.summaries.empty()) {
    throw LookupError("DMU '" + *dmu_id + "' has no records");
  }
  return report;
}

std::string render_projection_text(const benchmarking::ProjectionSummary& s) {
  constexpr std::size_t kNumber = 17;
  std::size_t var_w = std::string("Variable").size();
  for (const auto& row : s.rows) {
    var_w = std::max(var_w, row.variable_name.size() + (row.kind == VariableKind::input ? 3 : 4));
  }
  var_w += 2;
  std::size_t peer_w = std::string("Listing of peers:").size();
  for (const auto& p : s.peers) peer_w = std::max(peer_w, p.dmu_id.size());
  peer_w += 2;

  std::ostringstream out;
  out << "Projection Summary, Results for DMU: " << s.dmu_id << " (period " << s.period << ", "
      << dea::to_string(s.assumption) << ")\n";
  out << "Technical efficiency = " << fx(s.theta)
      << ", Scale efficiency = " << fx(s.scale_efficiency) << " ("
      << dea::to_string(s.rts_class) << ")\n";
  out << pad_right("Variable", var_w) << pad_left("Original value", kNumber)
      << pad_left("Radial movement", kNumber) << pad_left("Slack", kNumber)
      << pad_left("Projected value", kNumber) << "    " << pad_right("Listing of peers:", peer_w)
      << "Peer weight\n";

  std::vector<double> raw_weights;
  for (const auto& p : s.peers) raw_weights.push_back(p.weight);
  const auto weights = format_shares(raw_weights, kDisplayDecimals);

  const std::size_t lines = std::max(s.rows.size(), s.peers.size());
  for (std::size_t k = 0; k < lines; ++k) {
    std::string line;
    if (k < s.rows.size()) {
      const auto& row = s.rows[k];
      const std::string name = (row.kind == VariableKind::input ? "in:" : "out:") + row.variable_name;
      line = pad_right(name, var_w) + pad_left(fx(row.original), kNumber) +
             pad_left(fx(row.radial_movement), kNumber) + pad_left(fx(row.slack), kNumber) +
             pad_left(fx(row.projected), kNumber);
    } else {
      line = std::string(var_w + 4 * kNumber, ' ');
    }
    if (k < s.peers.size()) {
      line += "    " + pad_right(s.peers[k].dmu_id, peer_w) +
              pad_left(weights[k], std::string("Peer weight").size());
    }
    out << rstrip(line) << '\n';
  }
  return out.str();
}

std::string projection_text(const ProjectionReport& report) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : report.summaries) {
    if (!first) out << '\n';
    first = false;
    out << render_projection_text(s);
  }
  for (const auto& f : report.frequencies) {
    std::vector<std::string> ids{"Peer"};
    for (const auto& c : f.frequency.counts) ids.push_back(c.dmu_id);
    const std::size_t w = id_width(ids, 4);
    out << "\nPeer frequency, period " << f.period << " (" << dea::to_string(report.assumption)
        << ")\n";
    out << pad_right("Peer", w) << pad_left("Count", 7) << '\n';
    for (const auto& c : f.frequency.counts) {
      out << pad_right(c.dmu_id, w) << pad_left(std::to_string(c.count), 7) << '\n';
    }
    out << "DMUs emulating peers: " << f.frequency.inefficient_count << " of "
        << f.frequency.dmu_count << " (" << pct(f.frequency.inefficient_percent) << ")\n";
  }
  return out.str();
}

std::string projection_csv(const ProjectionReport& report) {
  std::ostringstream out;
  out << "period,dmu,assumption,theta,scale_efficiency,rts_class,record,name,kind,"
         "original,radial_movement,slack,projected,weight\n";
  for (const auto& s : report.summaries) {
    const std::string prefix = s.period + ',' + s.dmu_id + ',' + dea::to_string(s.assumption) +
                               ',' + ex(s.theta) + ',' + ex(s.scale_efficiency) + ',' +
                               dea::to_string(s.rts_class) + ',';
    for (const auto& row : s.rows) {
      out << prefix << "variable," << row.variable_name << ',' << to_string(row.kind) << ','
          << ex(row.original) << ',' << ex(row.radial_movement) << ',' << ex(row.slack) << ','
          << ex(row.projected) << ",\n";
    }
    for (const auto& p : s.peers) {
      out << prefix << "peer," << p.dmu_id << ",,,,,," << ex(p.weight) << '\n';
    }
  }
  return out.str();
}

std::string projection_json(const ProjectionReport& report) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "project";
  doc["orientation"] = "input";
  doc["assumption"] = dea::to_string(report.assumption);
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    json rows = json::array();
    for (const auto& row : s.rows) {
      rows.push_back({{"variable", row.variable_name},
                      {"kind", to_string(row.kind)},
                      {"original", row.original},
                      {"radial_movement", row.radial_movement},
                      {"slack", row.slack},
                      {"projected", row.projected}});
    }
    json peers = json::array();
    for (const auto& p : s.peers) peers.push_back({{"dmu", p.dmu_id}, {"weight", p.weight}});
    summaries.push_back({{"dmu", s.dmu_id},
                         {"period", s.period},
                         {"theta", s.theta},
                         {"scale_efficiency", s.scale_efficiency},
                         {"rts_class", dea::to_string(s.rts_class)},
                         {"rows", rows},
                         {"peers", peers}});
  }
  doc["summaries"] = std::move(summaries);
  json freq = json::array();
  for (const auto& f : report.frequencies) {
    json counts = json::array();
    for (const auto& c : f.frequency.counts) counts.push_back({{"dmu", c.dmu_id}, {"count", c.count}});
    freq.push_back({{"period", f.period},
                    {"counts", counts},
                    {"dmu_count", f.frequency.dmu_count},
                    {"emulating_count", f.frequency.inefficient_count},
                    {"emulating_percent", f.frequency.inefficient_percent}});
  }
  doc["peer_frequency"] = std::move(freq);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Descriptive statistics

std::string stats_text(const std::vector<VariableStats>& stats, const std::string& selection) {
  std::size_t label_w = std::string("Coefficient of Variation").size() + 2;
  std::vector<std::size_t> widths;
  std::vector<std::string> names;
  for (const auto& s : stats) {
    names.push_back((s.kind == VariableKind::input ? "in:" : "out:") + s.variable_name);
    widths.push_back(std::max<std::size_t>(names.back().size(), 12) + 2);
  }
  std::ostringstream out;
  out << "Descriptive statistics (" << selection << ")\n";
  std::string header = pad_right("", label_w);
  for (std::size_t k = 0; k < stats.size(); ++k) header += pad_left(names[k], widths[k]);
  out << rstrip(header) << '\n';

  auto row = [&](const char* label, auto value) {
    std::string line = pad_right(label, label_w);
    for (std::size_t k = 0; k < stats.size(); ++k) line += pad_left(value(stats[k]), widths[k]);
    out << line << '\n';
  };
  auto opt = [](const std::optional<double>& v) { return v ? fx(*v) : std::string("#N/A"); };
  row("Observations", [](const VariableStats& s) { return std::to_string(s.count); });
  row("Mode", [&](const VariableStats& s) { return opt(s.mode); });
  row("Median", [](const VariableStats& s) { return fx(s.median); });
  row("Standard Deviation", [](const VariableStats& s) { return fx(s.standard_deviation); });
  row("Maximum", [](const VariableStats& s) { return fx(s.maximum); });
  row("Minimum", [](const VariableStats& s) { return fx(s.minimum); });
  row("Mean", [](const VariableStats& s) { return fx(s.mean); });
  row("Coefficient of Variation", [&](const VariableStats& s) { return opt(s.coefficient_of_variation); });
  out << "Standard deviation uses the sample (n - 1) denominator.\n";
  return out.str();
}

std::string stats_csv(const std::vector<VariableStats>& stats) {
  std::ostringstream out;
  out << "variable,kind,count,mean,median,mode,standard_deviation,minimum,maximum,"
         "coefficient_of_variation\n";
  for (const auto& s : stats) {
    out << s.variable_name << ',' << to_string(s.kind) << ',' << s.count << ',' << ex(s.mean)
        << ',' << ex(s.median) << ',' << (s.mode ? ex(*s.mode) : "") << ','
        << ex(s.standard_deviation) << ',' << ex(s.minimum) << ',' << ex(s.maximum) << ','
        << (s.coefficient_of_variation ? ex(*s.coefficient_of_variation) : "") << '\n';
  }
  return out.str();
}

std::string stats_json(const std::vector<VariableStats>& stats, const std::string& selection) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "stats";
  doc["selection"] = selection;
  doc["standard_deviation"] = "sample";
  json vars = json::array();
  for (const auto& s : stats) {
    vars.push_back({{"variable", s.variable_name},
                    {"kind", to_string(s.kind)},
                    {"count", s.count},
                    {"mean", s.mean},
                    {"median", s.median},
                    {"mode", s.mode ? json(*s.mode) : json(nullptr)},
                    {"standard_deviation", s.standard_deviation},
                    {"minimum", s.minimum},
                    {"maximum", s.maximum},
                    {"coefficient_of_variation",
                     s.coefficient_of_variation ? json(*s.coefficient_of_variation) : json(nullptr)}});
  }
  doc["variables"] = std::move(vars);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Aggregates

AggregateTable emit_aggregates(const PanelDataset& dataset, const dea::Tolerances& tol) {
  AggregateTable table;
  for (const auto& p : dataset.periods()) {
    const auto records = dataset.period_records(p);
    EfficiencyAggregateRow row;
    row.period = p;
    row.dmu_count = records.size();
    std::size_t eff_crs = 0;
    std::size_t eff_vrs = 0;
    for (const DmuRecord* rec : records) {
      const dea::ScaleResult s = dea::scale_analysis(dataset, rec->dmu_id, p, tol);
      row.mean_theta_crs += s.theta_crs;
      row.mean_theta_vrs += s.theta_vrs;
      row.mean_scale_efficiency += s.scale_efficiency;
      if (s.theta_crs >= 1.0 - tol.efficient) ++eff_crs;
      if (s.theta_vrs >= 1.0 - tol.efficient) ++eff_vrs;
    }
    const double n = static_cast<double>(records.size());
    row.mean_theta_crs /= n;
    row.mean_theta_vrs /= n;
    row.mean_scale_efficiency /= n;
    row.percent_efficient_crs = 100.0 * static_cast<double>(eff_crs) / n;
    row.percent_efficient_vrs = 100.0 * static_cast<double>(eff_vrs) / n;
    table.periods.push_back(row);
  }
  if (dataset.periods().size() >= 2) {
    malmquist::MalmquistPanel panel = malmquist::malmquist_panel(dataset, tol);
    table.pairs = std::move(panel.pairs);
    table.skipped_dmus = std::move(panel.skipped_dmus);
  }
  return table;
}

std::string aggregates_text(const AggregateTable& table) {
  std::ostringstream out;
  std::vector<std::string> periods{"Period"};
  for (const auto& r : table.periods) periods.push_back(r.period);
  const std::size_t w = id_width(periods, 6);
  out << "Average efficiency by period (input orientation)\n";
  out << pad_right("Period", w) << pad_left("DMUs", 6) << pad_left("CRS TE", 9)
      << pad_left("VRS TE", 9) << pad_left("Scale", 9) << pad_left("Eff CRS", 9)
      << pad_left("Eff VRS", 9) << '\n';
  for (const auto& r : table.periods) {
    out << pad_right(r.period, w) << pad_left(std::to_string(r.dmu_count), 6)
        << pad_left(fx(r.mean_theta_crs), 9) << pad_left(fx(r.mean_theta_vrs), 9)
        << pad_left(fx(r.mean_scale_efficiency), 9) << pad_left(pct(r.percent_efficient_crs), 9)
        << pad_left(pct(r.percent_efficient_vrs), 9) << '\n';
  }
  if (table.pairs.empty()) return out.str();

  std::vector<std::string> labels{"Pair"};
  for (const auto& a : table.pairs) labels.push_back(a.base_period + "/" + a.next_period);
  const std::size_t pw = id_width(labels, 4);
  out << "\nMalmquist means by period pair (geometric; arithmetic in brackets)\n";
  out << pad_right("Pair", pw) << pad_left("effch", 17) << pad_left("techch", 17)
      << pad_left("pech", 17) << pad_left("sech", 17) << pad_left("tfpch", 17)
      << pad_left("tfpch>1", 9) << '\n';
  for (const auto& a : table.pairs) {
    auto cell = [](double g, double m) { return pad_left(fx(g) + " [" + fx(m) + "]", 17); };
    const auto& g = a.geometric_mean;
    const auto& m = a.arithmetic_mean;
    out << pad_right(a.base_period + "/" + a.next_period, pw) << cell(g.effch, m.effch)
        << cell(g.techch, m.techch) << cell(g.pech, m.pech) << cell(g.sech, m.sech)
        << cell(g.tfpch, m.tfpch) << pad_left(pct(a.improved_percent), 9) << '\n';
  }
  if (!table.skipped_dmus.empty()) {
    out << "Skipped (not observed in every period):";
    for (const auto& id : table.skipped_dmus) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

std::string aggregates_csv(const AggregateTable& table, AggregateSection section) {
  std::ostringstream out;
  if (section == AggregateSection::efficiency) {
    out << "period,dmu_count,mean_theta_crs,mean_theta_vrs,mean_scale_efficiency,"
           "percent_efficient_crs,percent_efficient_vrs\n";
    for (const auto& r : table.periods) {
      out << r.period << ',' << r.dmu_count << ',' << ex(r.mean_theta_crs) << ','
          << ex(r.mean_theta_vrs) << ',' << ex(r.mean_scale_efficiency) << ','
          << ex(r.percent_efficient_crs) << ',' << ex(r.percent_efficient_vrs) << '\n';
    }
    return out.str();
  }
  out << "base_period,next_period,dmu_count,"
         "geomean_effch,geomean_techch,geomean_pech,geomean_sech,geomean_tfpch,"
         "arithmean_effch,arithmean_techch,arithmean_pech,arithmean_sech,arithmean_tfpch,"
         "tfpch_above_1_count,tfpch_above_1_percent,min_tfpch_dmu,min_tfpch,"
         "max_tfpch_dmu,max_tfpch\n";
  for (const auto& a : table.pairs) {
    const auto& g = a.geometric_mean;
    const auto& m = a.arithmetic_mean;
    out << a.base_period << ',' << a.next_period << ',' << a.dmu_count << ',' << ex(g.effch)
        << ',' << ex(g.techch) << ',' << ex(g.pech) << ',' << ex(g.sech) << ',' << ex(g.tfpch)
        << ',' << ex(m.effch) << ',' << ex(m.techch) << ',' << ex(m.pech) << ',' << ex(m.sech)
        << ',' << ex(m.tfpch) << ',' << a.improved_count << ',' << ex(a.improved_percent) << ','
        << a.min_tfpch.dmu_id << ',' << ex(a.min_tfpch.value) << ',' << a.max_tfpch.dmu_id << ','
        << ex(a.max_tfpch.value) << '\n';
  }
  return out.str();
}

std::string aggregates_json(const AggregateTable& table) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "aggregates";
  json periods = json::array();
  for (const auto& r : table.periods) {
    periods.push_back({{"period", r.period},
                       {"dmu_count", r.dmu_count},
                       {"mean_theta_crs", r.mean_theta_crs},
                       {"mean_theta_vrs", r.mean_theta_vrs},
                       {"mean_scale_efficiency", r.mean_scale_efficiency},
                       {"percent_efficient_crs", r.percent_efficient_crs},
                       {"percent_efficient_vrs", r.percent_efficient_vrs}});
  }
  doc["periods"] = std::move(periods);
  json pairs = json::array();
  for (const auto& a : table.pairs) pairs.push_back(pair_json(a));
  doc["pairs"] = std::move(pairs);
  doc["skipped_dmus"] = table.skipped_dmus;
  return doc.dump(2) + "\n";
}

}  // namespace frontier::report
