#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "frontier/error.hpp"
#include "frontier/malmquist.hpp"
#include "oracles.hpp"

using namespace frontier;
using namespace frontier::malmquist;
using dea::Rts;

namespace {

PanelDataset two_periods(const std::vector<DmuRecord>& base, const std::vector<DmuRecord>& next,
                         std::vector<std::string> inputs = {"x"},
                         std::vector<std::string> outputs = {"y"}) {
  std::vector<DmuRecord> records;
  for (auto r : base) {
    r.period = "t";
    records.push_back(r);
  }
  for (auto r : next) {
    r.period = "t1";
    records.push_back(r);
  }
  return PanelDataset(std::move(inputs), std::move(outputs), {"t", "t1"}, std::move(records));
}

PanelDataset duplicate_period(const PanelDataset& ds) {
  std::vector<DmuRecord> records;
  for (int copy = 0; copy < 2; ++copy) {
    for (auto r : ds.records()) {
      r.period = copy == 0 ? "a" : "b";
      records.push_back(r);
    }
  }
  return PanelDataset(ds.input_names(), ds.output_names(), {"a", "b"}, std::move(records));
}

void check_identities(const MalmquistResult& r, double tol) {
  const auto& c = r.index;
  CHECK(std::abs(c.tfpch - c.effch * c.techch) <= tol);
  CHECK(std::abs(c.effch - c.pech * c.sech) <= tol);
}

}  // namespace

TEST_CASE("same-period cross distance equals the radial score") {
  const auto ds = testing::three_dmu();
  for (const auto& id : ds.dmu_ids()) {
    for (Rts rts : {Rts::crs, Rts::vrs, Rts::nirs}) {
      const auto d = cross_distance(ds, id, "t", "t", rts);
      REQUIRE(d.feasible);
      CHECK(d.value == dea::radial_efficiency(ds, id, "t", rts).theta);
    }
  }
}

TEST_CASE("later data beyond the earlier frontier is super-efficient") {
  const auto ds = two_periods({{"A", "", {2.0}, {2.0}}, {"B", "", {4.0}, {5.0}}},
                              {{"A", "", {2.0}, {3.0}}, {"B", "", {4.0}, {5.0}}});
  const auto d = cross_distance(ds, "A", "t1", "t", Rts::crs);
  REQUIRE(d.feasible);
  CHECK(d.value == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("VRS cross distance outside the hull is reported, not thrown") {
  const auto ds = two_periods({{"A", "", {2.0}, {2.0}}, {"B", "", {4.0}, {5.0}}},
                              {{"A", "", {2.0}, {9.0}}, {"B", "", {4.0}, {5.0}}});
  CHECK_FALSE(cross_distance(ds, "A", "t1", "t", Rts::vrs).feasible);
  const auto r = malmquist_index(ds, "A", "t", "t1");
  CHECK_FALSE(r.vrs_next_on_base.has_value());
  CHECK(r.vrs_base_on_next.has_value());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].find("vrs-cross-infeasible") == 0);
  check_identities(r, 1e-12);
}

TEST_CASE("identical periods give unit indices") {
  std::mt19937_64 rng(41);
  const auto ds = duplicate_period(testing::random_panel(rng, 6, 1, 2, 2));
  for (const auto& id : ds.dmu_ids()) {
    const auto r = malmquist_index(ds, id, "a", "b");
    CHECK(std::abs(r.index.tfpch - 1.0) <= 1e-12);
    CHECK(std::abs(r.index.effch - 1.0) <= 1e-12);
    CHECK(std::abs(r.index.techch - 1.0) <= 1e-12);
    CHECK(std::abs(r.index.pech - 1.0) <= 1e-12);
    CHECK(std::abs(r.index.sech - 1.0) <= 1e-12);
  }
  const auto panel = malmquist_panel(ds);
  REQUIRE(panel.pairs.size() == 1);
  CHECK(panel.pairs[0].improved_count == 0);
  CHECK(panel.pairs[0].improved_percent == 0.0);
  CHECK(std::abs(panel.pairs[0].geometric_mean.tfpch - 1.0) <= 1e-12);
}

TEST_CASE("halving every input of a lone DMU doubles productivity through technology") {
  const auto ds = two_periods({{"S", "", {4.0, 6.0}, {3.0}}}, {{"S", "", {2.0, 3.0}, {3.0}}},
                              {"x1", "x2"});
  const auto r = malmquist_index(ds, "S", "t", "t1");
  CHECK(r.crs.base_on_base == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.crs.next_on_base == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.crs.base_on_next == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.crs.next_on_next == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.index.tfpch - 2.0) <= 1e-12);
  CHECK(std::abs(r.index.effch - 1.0) <= 1e-12);
  CHECK(std::abs(r.index.techch - 2.0) <= 1e-12);
}

TEST_CASE("three-DMU panel with C's output doubled matches the ratio oracle") {
  const auto base = testing::three_dmu().records();
  auto next = base;
  next[2].outputs[0] *= 2.0;
  const auto ds = two_periods(base, next);
  const auto ref_t = ds.period_records("t");
  const auto ref_n = ds.period_records("t1");

  double log_sum = 0.0;
  int improved = 0;
  const auto panel = malmquist_panel(ds);
  REQUIRE(panel.results.size() == 3);
  for (const auto& r : panel.results) {
    const auto& b = ds.at(r.dmu_id, "t");
    const auto& n = ds.at(r.dmu_id, "t1");
    const double bb = testing::crs_ratio_oracle(b.inputs[0], b.outputs[0], ref_t);
    const double nb = testing::crs_ratio_oracle(n.inputs[0], n.outputs[0], ref_t);
    const double bn = testing::crs_ratio_oracle(b.inputs[0], b.outputs[0], ref_n);
    const double nn = testing::crs_ratio_oracle(n.inputs[0], n.outputs[0], ref_n);
    const double tfpch = std::sqrt((nb / bb) * (nn / bn));
    INFO(r.dmu_id);
    CHECK(std::abs(r.index.tfpch - tfpch) <= 1e-12);
    CHECK(std::abs(r.index.effch - nn / bb) <= 1e-12);
    log_sum += std::log(tfpch);
    if (tfpch > 1.0 + 1e-9) ++improved;
  }
  // C's new ratio 6/5 stays below B's 5/4, so B still defines both frontiers.
  CHECK(panel.results[2].index.tfpch == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(panel.results[0].index.tfpch == doctest::Approx(1.0).epsilon(1e-12));
  const auto& agg = panel.pairs.at(0);
  CHECK(std::abs(agg.geometric_mean.tfpch - std::exp(log_sum / 3.0)) <= 1e-12);
  CHECK(agg.improved_count == static_cast<std::size_t>(improved));
  CHECK(agg.improved_count == 1);
  CHECK(agg.improved_percent == doctest::Approx(100.0 / 3.0));
  CHECK(agg.max_tfpch.dmu_id == "C");
  CHECK(agg.arithmetic_mean.tfpch == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("decomposition identities and time reversal on random panels") {
  std::mt19937_64 rng(0x3a1);
  std::uniform_int_distribution<int> size(3, 9), dims(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ds = testing::random_panel(rng, static_cast<std::size_t>(size(rng)), 2,
                                          static_cast<std::size_t>(dims(rng)),
                                          static_cast<std::size_t>(dims(rng)));
    for (const auto& id : ds.dmu_ids()) {
      const auto fwd = malmquist_index(ds, id, "2017", "2018");
      const auto back = malmquist_index(ds, id, "2018", "2017");
      INFO("trial " << trial << " dmu " << id);
      check_identities(fwd, 1e-9);
      CHECK(std::abs(fwd.index.tfpch * back.index.tfpch - 1.0) <= 1e-9);
      CHECK(std::abs(fwd.index.effch * back.index.effch - 1.0) <= 1e-9);
      CHECK(std::abs(fwd.index.techch * back.index.techch - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("panel runs over adjacent pairs of the balanced sub-panel") {
  std::mt19937_64 rng(5);
  const auto full = testing::random_panel(rng, 5, 3, 1, 2);
  std::vector<DmuRecord> records;
  for (const auto& r : full.records()) {
    if (!(r.dmu_id == "D3" && r.period == "2019")) records.push_back(r);
  }
  const PanelDataset ds(full.input_names(), full.output_names(), full.periods(), records);
  const auto panel = malmquist_panel(ds);
  CHECK(panel.skipped_dmus == std::vector<std::string>{"D3"});
  REQUIRE(panel.pairs.size() == 2);
  CHECK(panel.pairs[0].base_period == "2017");
  CHECK(panel.pairs[0].next_period == "2018");
  CHECK(panel.pairs[1].base_period == "2018");
  CHECK(panel.pairs[1].next_period == "2019");
  CHECK(panel.pairs[0].dmu_count == 4);
  CHECK(panel.results.size() == 8);
}

TEST_CASE("a single period cannot form a Malmquist pair") {
  CHECK_THROWS_AS(malmquist_panel(testing::three_dmu()), ValidationError);
  CHECK_THROWS_AS(malmquist_index(testing::three_dmu(), "A", "t", "u"), LookupError);
}
