#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frontier/benchmarking.hpp"
#include "frontier/dataset.hpp"
#include "frontier/dea.hpp"
#include "frontier/error.hpp"
#include "frontier/lp.hpp"
#include "frontier/malmquist.hpp"
#include "frontier/report.hpp"

namespace py = pybind11;
using namespace frontier;

namespace {

void bind_errors(py::module_& m) {
  // Translators are tried newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "FrontierError");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<LookupError>(m, "LookupError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
}

void bind_lp(py::module_& m) {
  auto lp = m.def_submodule("lp", "Dense two-phase simplex solver");
  py::enum_<lp::Sense>(lp, "Sense")
      .value("minimize", lp::Sense::minimize)
      .value("maximize", lp::Sense::maximize);
  py::enum_<lp::Relation>(lp, "Relation")
      .value("less_equal", lp::Relation::less_equal)
      .value("equal", lp::Relation::equal)
      .value("greater_equal", lp::Relation::greater_equal);
  py::enum_<lp::Status>(lp, "Status")
      .value("optimal", lp::Status::optimal)
      .value("infeasible", lp::Status::infeasible)
      .value("unbounded", lp::Status::unbounded);

  py::class_<lp::LpSolution>(lp, "LpSolution")
      .def_readonly("status", &lp::LpSolution::status)
      .def_readonly("objective_value", &lp::LpSolution::objective_value)
      .def_readonly("primal_values", &lp::LpSolution::primal_values)
      .def_readonly("iterations", &lp::LpSolution::iterations);

  lp.def(
      "solve",
      [](lp::Sense sense, std::vector<double> cost, const std::vector<std::vector<double>>& rows,
         std::vector<lp::Relation> relations, std::vector<double> rhs) {
        const std::size_t cols = cost.size();
        lp::DenseMatrix a(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != cols) throw ValidationError("ragged constraint matrix");
          for (std::size_t c = 0; c < cols; ++c) a(r, c) = rows[r][c];
        }
        return lp::solve(lp::LinearProgram(sense, std::move(cost), std::move(a),
                                           std::move(relations), std::move(rhs)));
      },
      py::arg("sense"), py::arg("cost"), py::arg("constraints"), py::arg("relations"),
      py::arg("rhs"), "Solve sense cost.x s.t. constraints x (rel) rhs, x >= 0.");
}

void bind_dataset(py::module_& m) {
  py::enum_<VariableKind>(m, "VariableKind")
      .value("input", VariableKind::input)
      .value("output", VariableKind::output);

  py::class_<DmuRecord>(m, "DmuRecord")
      .def(py::init<>())
      .def(py::init([](std::string id, std::string period, std::vector<double> in,
                       std::vector<double> out) {
             return DmuRecord{std::move(id), std::move(period), std::move(in), std::move(out)};
           }),
           py::arg("dmu_id"), py::arg("period"), py::arg("inputs"), py::arg("outputs"))
      .def_readwrite("dmu_id", &DmuRecord::dmu_id)
      .def_readwrite("period", &DmuRecord::period)
      .def_readwrite("inputs", &DmuRecord::inputs)
      .def_readwrite("outputs", &DmuRecord::outputs)
      .def("__repr__", [](const DmuRecord& r) {
        return "<DmuRecord " + r.dmu_id + "/" + r.period + ">";
      });

  py::class_<PanelDataset>(m, "PanelDataset")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    std::vector<std::string>, std::vector<DmuRecord>>(),
           py::arg("input_names"), py::arg("output_names"), py::arg("periods"),
           py::arg("records"))
      .def_property_readonly("input_names", &PanelDataset::input_names)
      .def_property_readonly("output_names", &PanelDataset::output_names)
      .def_property_readonly("periods", &PanelDataset::periods)
      .def_property_readonly("records", &PanelDataset::records)
      .def("dmu_ids", &PanelDataset::dmu_ids)
      .def("with_period_order", &PanelDataset::with_period_order, py::arg("order"))
      .def("to_csv",
           [](const PanelDataset& d) {
             std::ostringstream out;
             write_panel_csv(d, out);
             return out.str();
           })
      .def("__len__", [](const PanelDataset& d) { return d.records().size(); })
      .def("__eq__", [](const PanelDataset& a, const PanelDataset& b) { return a == b; });

  m.def("parse_panel_csv", [](const std::string& text) { return parse_panel_csv(std::string_view(text)); },
        py::arg("text"), "Parse panel CSV text.");
  m.def("read_panel_csv", &read_panel_csv_file, py::arg("path"));

  py::class_<VariableStats>(m, "VariableStats")
      .def_readonly("variable_name", &VariableStats::variable_name)
      .def_readonly("kind", &VariableStats::kind)
      .def_readonly("count", &VariableStats::count)
      .def_readonly("mean", &VariableStats::mean)
      .def_readonly("median", &VariableStats::median)
      .def_readonly("mode", &VariableStats::mode)
      .def_readonly("standard_deviation", &VariableStats::standard_deviation)
      .def_readonly("minimum", &VariableStats::minimum)
      .def_readonly("maximum", &VariableStats::maximum)
      .def_readonly("coefficient_of_variation", &VariableStats::coefficient_of_variation);
  m.def("descriptive_stats", &descriptive_stats, py::arg("dataset"),
        py::arg("period") = std::optional<std::string>{});

  py::class_<BalancedPanel>(m, "BalancedPanel")
      .def_readonly("dataset", &BalancedPanel::dataset)
      .def_readonly("skipped_dmus", &BalancedPanel::skipped_dmus);
  m.def("balanced_subpanel", &balanced_subpanel, py::arg("dataset"), py::arg("periods"));
}

void bind_dea(py::module_& m) {
  py::enum_<dea::Rts>(m, "Rts")
      .value("CRS", dea::Rts::crs)
      .value("VRS", dea::Rts::vrs)
      .value("NIRS", dea::Rts::nirs);
  py::enum_<dea::RtsClass>(m, "RtsClass")
      .value("CRS", dea::RtsClass::crs)
      .value("DRS", dea::RtsClass::drs)
      .value("IRS", dea::RtsClass::irs)
      .value("NOT_CLASSIFIED", dea::RtsClass::not_classified);

  py::class_<dea::Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_property(
          "feasibility",
          [](const dea::Tolerances& t) { return t.solver.feasibility_tol; },
          [](dea::Tolerances& t, double v) { t.solver.feasibility_tol = v; })
      .def_readwrite("efficient", &dea::Tolerances::efficient)
      .def_readwrite("identity", &dea::Tolerances::identity);

  py::class_<dea::PeerWeight>(m, "PeerWeight")
      .def_readonly("dmu_id", &dea::PeerWeight::dmu_id)
      .def_readonly("weight", &dea::PeerWeight::weight)
      .def("__repr__", [](const dea::PeerWeight& p) {
        return "<PeerWeight " + p.dmu_id + "=" + std::to_string(p.weight) + ">";
      });

  py::class_<dea::EfficiencyResult>(m, "EfficiencyResult")
      .def_readonly("dmu_id", &dea::EfficiencyResult::dmu_id)
      .def_readonly("period", &dea::EfficiencyResult::period)
      .def_readonly("assumption", &dea::EfficiencyResult::assumption)
      .def_readonly("theta", &dea::EfficiencyResult::theta)
      .def_readonly("lambdas", &dea::EfficiencyResult::lambdas)
      .def_readonly("input_slacks", &dea::EfficiencyResult::input_slacks)
      .def_readonly("output_slacks", &dea::EfficiencyResult::output_slacks)
      .def_readonly("rts_class", &dea::EfficiencyResult::rts_class);

  py::class_<dea::SlackResult>(m, "SlackResult")
      .def_readonly("input_slacks", &dea::SlackResult::input_slacks)
      .def_readonly("output_slacks", &dea::SlackResult::output_slacks)
      .def_readonly("lambdas", &dea::SlackResult::lambdas);

  py::class_<dea::ScaleResult>(m, "ScaleResult")
      .def_readonly("dmu_id", &dea::ScaleResult::dmu_id)
      .def_readonly("period", &dea::ScaleResult::period)
      .def_readonly("theta_crs", &dea::ScaleResult::theta_crs)
      .def_readonly("theta_vrs", &dea::ScaleResult::theta_vrs)
      .def_readonly("theta_nirs", &dea::ScaleResult::theta_nirs)
      .def_readonly("scale_efficiency", &dea::ScaleResult::scale_efficiency)
      .def_readonly("rts_class", &dea::ScaleResult::rts_class);

  py::class_<dea::EfficiencyTable>(m, "EfficiencyTable")
      .def_readonly("period", &dea::EfficiencyTable::period)
      .def_readonly("assumption", &dea::EfficiencyTable::assumption)
      .def_readonly("results", &dea::EfficiencyTable::results)
      .def_readonly("mean_theta", &dea::EfficiencyTable::mean_theta)
      .def_readonly("efficient_count", &dea::EfficiencyTable::efficient_count)
      .def_readonly("efficient_percent", &dea::EfficiencyTable::efficient_percent);

  const dea::Tolerances defaults;
  m.def(
      "radial_efficiency",
      [](const PanelDataset& d, const std::string& dmu, const std::string& period, dea::Rts rts,
         const dea::Tolerances& tol) { return dea::radial_efficiency(d, dmu, period, rts, tol); },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("period"), py::arg("assumption"),
      py::arg("tol") = defaults);
  m.def(
      "max_slacks",
      [](const PanelDataset& d, const std::string& dmu, const std::string& period, dea::Rts rts,
         double theta, const dea::Tolerances& tol) {
        return dea::max_slacks(d, dmu, period, rts, theta, tol);
      },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("period"), py::arg("assumption"),
      py::arg("theta"), py::arg("tol") = defaults);
  m.def(
      "evaluate",
      [](const PanelDataset& d, const std::string& dmu, const std::string& period, dea::Rts rts,
         const dea::Tolerances& tol) { return dea::evaluate(d, dmu, period, rts, tol); },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("period"), py::arg("assumption"),
      py::arg("tol") = defaults);
  m.def(
      "scale_analysis",
      [](const PanelDataset& d, const std::string& dmu, const std::string& period,
         const dea::Tolerances& tol) { return dea::scale_analysis(d, dmu, period, tol); },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("period"), py::arg("tol") = defaults);
  m.def(
      "efficiency_table",
      [](const PanelDataset& d, const std::string& period, dea::Rts rts,
         const dea::Tolerances& tol) { return dea::efficiency_table(d, period, rts, tol); },
      py::arg("dataset"), py::arg("period"), py::arg("assumption"), py::arg("tol") = defaults);
}

void bind_malmquist(py::module_& m) {
  py::class_<malmquist::CrossDistance>(m, "CrossDistance")
      .def_readonly("evaluated_period", &malmquist::CrossDistance::evaluated_period)
      .def_readonly("frontier_period", &malmquist::CrossDistance::frontier_period)
      .def_readonly("assumption", &malmquist::CrossDistance::assumption)
      .def_readonly("value", &malmquist::CrossDistance::value)
      .def_readonly("feasible", &malmquist::CrossDistance::feasible);

  py::class_<malmquist::Components>(m, "MalmquistComponents")
      .def_readonly("effch", &malmquist::Components::effch)
      .def_readonly("techch", &malmquist::Components::techch)
      .def_readonly("pech", &malmquist::Components::pech)
      .def_readonly("sech", &malmquist::Components::sech)
      .def_readonly("tfpch", &malmquist::Components::tfpch);

  py::class_<malmquist::MalmquistResult>(m, "MalmquistResult")
      .def_readonly("dmu_id", &malmquist::MalmquistResult::dmu_id)
      .def_readonly("base_period", &malmquist::MalmquistResult::base_period)
      .def_readonly("next_period", &malmquist::MalmquistResult::next_period)
      .def_readonly("index", &malmquist::MalmquistResult::index)
      .def_readonly("diagnostics", &malmquist::MalmquistResult::diagnostics)
      .def_property_readonly("effch", [](const malmquist::MalmquistResult& r) { return r.index.effch; })
      .def_property_readonly("techch", [](const malmquist::MalmquistResult& r) { return r.index.techch; })
      .def_property_readonly("pech", [](const malmquist::MalmquistResult& r) { return r.index.pech; })
      .def_property_readonly("sech", [](const malmquist::MalmquistResult& r) { return r.index.sech; })
      .def_property_readonly("tfpch", [](const malmquist::MalmquistResult& r) { return r.index.tfpch; });

  py::class_<malmquist::Extreme>(m, "Extreme")
      .def_readonly("dmu_id", &malmquist::Extreme::dmu_id)
      .def_readonly("value", &malmquist::Extreme::value);

  py::class_<malmquist::PairAggregate>(m, "PairAggregate")
      .def_readonly("base_period", &malmquist::PairAggregate::base_period)
      .def_readonly("next_period", &malmquist::PairAggregate::next_period)
      .def_readonly("dmu_count", &malmquist::PairAggregate::dmu_count)
      .def_readonly("geometric_mean", &malmquist::PairAggregate::geometric_mean)
      .def_readonly("arithmetic_mean", &malmquist::PairAggregate::arithmetic_mean)
      .def_readonly("improved_count", &malmquist::PairAggregate::improved_count)
      .def_readonly("improved_percent", &malmquist::PairAggregate::improved_percent)
      .def_readonly("min_tfpch", &malmquist::PairAggregate::min_tfpch)
      .def_readonly("max_tfpch", &malmquist::PairAggregate::max_tfpch);

  py::class_<malmquist::MalmquistPanel>(m, "MalmquistPanel")
      .def_readonly("results", &malmquist::MalmquistPanel::results)
      .def_readonly("pairs", &malmquist::MalmquistPanel::pairs)
      .def_readonly("skipped_dmus", &malmquist::MalmquistPanel::skipped_dmus);

  const dea::Tolerances defaults;
  m.def(
      "cross_distance",
      [](const PanelDataset& d, const std::string& dmu, const std::string& data_period,
         const std::string& frontier_period, dea::Rts rts, const dea::Tolerances& tol) {
        return malmquist::cross_distance(d, dmu, data_period, frontier_period, rts, tol);
      },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("data_period"), py::arg("frontier_period"),
      py::arg("assumption"), py::arg("tol") = defaults);
  m.def(
      "malmquist_index",
      [](const PanelDataset& d, const std::string& dmu, const std::string& base,
         const std::string& next, const dea::Tolerances& tol) {
        return malmquist::malmquist_index(d, dmu, base, next, tol);
      },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("base"), py::arg("next"),
      py::arg("tol") = defaults);
  m.def("malmquist_panel", &malmquist::malmquist_panel, py::arg("dataset"),
        py::arg("tol") = defaults);
}

void bind_benchmarking(py::module_& m) {
  py::class_<benchmarking::PeerEntry>(m, "PeerEntry")
      .def_readonly("dmu_id", &benchmarking::PeerEntry::dmu_id)
      .def_readonly("weight", &benchmarking::PeerEntry::weight);

  py::class_<benchmarking::ProjectionRow>(m, "ProjectionRow")
      .def_readonly("variable_name", &benchmarking::ProjectionRow::variable_name)
      .def_readonly("kind", &benchmarking::ProjectionRow::kind)
      .def_readonly("original", &benchmarking::ProjectionRow::original)
      .def_readonly("radial_movement", &benchmarking::ProjectionRow::radial_movement)
      .def_readonly("slack", &benchmarking::ProjectionRow::slack)
      .def_readonly("projected", &benchmarking::ProjectionRow::projected);

  py::class_<benchmarking::ProjectionSummary>(m, "ProjectionSummary")
      .def_readonly("dmu_id", &benchmarking::ProjectionSummary::dmu_id)
      .def_readonly("period", &benchmarking::ProjectionSummary::period)
      .def_readonly("assumption", &benchmarking::ProjectionSummary::assumption)
      .def_readonly("theta", &benchmarking::ProjectionSummary::theta)
      .def_readonly("scale_efficiency", &benchmarking::ProjectionSummary::scale_efficiency)
      .def_readonly("rts_class", &benchmarking::ProjectionSummary::rts_class)
      .def_readonly("rows", &benchmarking::ProjectionSummary::rows)
      .def_readonly("peers", &benchmarking::ProjectionSummary::peers)
      .def("projected_inputs", &benchmarking::ProjectionSummary::projected_inputs)
      .def("projected_outputs", &benchmarking::ProjectionSummary::projected_outputs)
      .def("to_text", &report::render_projection_text);

  py::class_<benchmarking::PeerCount>(m, "PeerCount")
      .def_readonly("dmu_id", &benchmarking::PeerCount::dmu_id)
      .def_readonly("count", &benchmarking::PeerCount::count);

  py::class_<benchmarking::PeerFrequencyReport>(m, "PeerFrequencyReport")
      .def_readonly("counts", &benchmarking::PeerFrequencyReport::counts)
      .def_readonly("dmu_count", &benchmarking::PeerFrequencyReport::dmu_count)
      .def_readonly("inefficient_count", &benchmarking::PeerFrequencyReport::inefficient_count)
      .def_readonly("inefficient_percent", &benchmarking::PeerFrequencyReport::inefficient_percent);

  const dea::Tolerances defaults;
  m.def(
      "project",
      [](const PanelDataset& d, const std::string& dmu, const std::string& period, dea::Rts rts,
         const dea::Tolerances& tol) { return benchmarking::project(d, dmu, period, rts, tol); },
      py::arg("dataset"), py::arg("dmu_id"), py::arg("period"), py::arg("assumption"),
      py::arg("tol") = defaults);
  m.def(
      "peer_frequency",
      [](const PanelDataset& d, const std::string& period, dea::Rts rts,
         const dea::Tolerances& tol) { return benchmarking::peer_frequency(d, period, rts, tol); },
      py::arg("dataset"), py::arg("period"), py::arg("assumption"), py::arg("tol") = defaults);
  m.def("render_projection_text", &report::render_projection_text, py::arg("summary"));
  m.def(
      "aggregates_json",
      [](const PanelDataset& d, const dea::Tolerances& tol) {
        return report::aggregates_json(report::emit_aggregates(d, tol));
      },
      py::arg("dataset"), py::arg("tol") = defaults,
      "Per-period efficiency and per-pair Malmquist aggregates as a JSON document.");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Input-oriented DEA, Malmquist productivity and peer projections";
  bind_errors(m);
  bind_lp(m);
  bind_dataset(m);
  bind_dea(m);
  bind_malmquist(m);
  bind_benchmarking(m);
}
