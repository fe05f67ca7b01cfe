#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "frontier/dataset.hpp"
#include "frontier/lp.hpp"

namespace frontier::testing {

/// Solves a square system by Gaussian elimination with partial pivoting.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-12) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexOracleResult {
  lp::Status status = lp::Status::infeasible;
  double objective = 0.0;
};

/// Brute-force LP oracle for tiny problems: every basic solution of the
/// constraint system plus x >= 0 is enumerated. Unboundedness is detected by
/// adding a box x_j <= `box` and checking whether the boxed optimum beats the
/// best vertex of the unboxed polyhedron; `box` must exceed every vertex
/// coordinate of the original problem.
inline VertexOracleResult enumerate_vertices(const lp::LinearProgram& lp, double box = 1e6,
                                             double tol = 1e-7) {
  const std::size_t n = lp.num_variables();
  const std::size_t m = lp.num_constraints();

  struct Halfspace {
    std::vector<double> a;
    double b;
    lp::Relation rel;
    bool is_box;
  };
  std::vector<Halfspace> hs;
  for (std::size_t r = 0; r < m; ++r) {
    const auto row = lp.constraints().row(r);
    hs.push_back({{row.begin(), row.end()}, lp.rhs()[r], lp.relations()[r], false});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    hs.push_back({e, 0.0, lp::Relation::greater_equal, false});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    hs.push_back({e, box, lp::Relation::less_equal, true});
  }

  const auto feasible = [&](const std::vector<double>& x, bool with_box) {
    for (const auto& h : hs) {
      if (h.is_box && !with_box) continue;
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += h.a[j] * x[j];
      const double scale = 1.0 + std::abs(h.b);
      switch (h.rel) {
        case lp::Relation::less_equal:
          if (lhs > h.b + tol * scale) return false;
          break;
        case lp::Relation::greater_equal:
          if (lhs < h.b - tol * scale) return false;
          break;
        case lp::Relation::equal:
          if (std::abs(lhs - h.b) > tol * scale) return false;
          break;
      }
    }
    return true;
  };
  const double sign = lp.sense() == lp::Sense::maximize ? -1.0 : 1.0;  // minimise sign * c.x
  const auto value = [&](const std::vector<double>& x) {
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) v += lp.cost()[j] * x[j];
    return v;
  };

  std::optional<double> best_plain;
  std::optional<double> best_boxed;
  const std::size_t total = hs.size();
  // Iterate over all n-subsets of the halfspaces.
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    bool uses_box = false;
    for (std::size_t i = 0; i < total; ++i) {
      if (!mask[i]) continue;
      a.push_back(hs[i].a);
      b.push_back(hs[i].b);
      uses_box = uses_box || hs[i].is_box;
    }
    const auto x = solve_square(a, b);
    if (!x) continue;
    if (!uses_box && feasible(*x, false)) {
      const double v = sign * value(*x);
      if (!best_plain || v < *best_plain) best_plain = v;
    }
    if (feasible(*x, true)) {
      const double v = sign * value(*x);
      if (!best_boxed || v < *best_boxed) best_boxed = v;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));

  VertexOracleResult result;
  if (!best_boxed) return result;  // infeasible
  if (!best_plain || *best_boxed < *best_plain - 1e-6 * (1.0 + std::abs(*best_plain))) {
    result.status = lp::Status::unbounded;
    return result;
  }
  result.status = lp::Status::optimal;
  result.objective = sign * *best_plain;
  return result;
}

/// Random LP with 1-3 variables, 1-5 constraints and small integer data, so
/// every vertex coordinate stays far inside the default enumeration box.
inline lp::LinearProgram random_small_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim_n(1, 3), dim_m(1, 5), coef(-5, 5), rhs(-10, 10),
      rel(0, 5), sense(0, 1);
  const auto n = static_cast<std::size_t>(dim_n(rng));
  const auto m = static_cast<std::size_t>(dim_m(rng));
  std::vector<double> cost(n);
  for (auto& c : cost) c = coef(rng);
  lp::DenseMatrix a(m, n);
  std::vector<lp::Relation> rels(m);
  std::vector<double> b(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = coef(rng);
    const int k = rel(rng);
    rels[r] = k < 3 ? lp::Relation::less_equal
                    : (k < 5 ? lp::Relation::greater_equal : lp::Relation::equal);
    b[r] = rhs(rng);
  }
  return lp::LinearProgram(sense(rng) ? lp::Sense::maximize : lp::Sense::minimize,
                           std::move(cost), std::move(a), std::move(rels), std::move(b));
}

/// Single-input single-output CRS score: (y/x) / max_k (y_k/x_k).
inline double crs_ratio_oracle(double x, double y, const std::vector<const DmuRecord*>& ref) {
  double best = 0.0;
  for (const auto* r : ref) best = std::max(best, r->outputs[0] / r->inputs[0]);
  return (y / x) / best;
}

/// Smallest input that produces at least `y` on the single-input
/// single-output VRS hull; every basic solution of the envelopment LP uses at
/// most two reference points.
inline double vrs_min_input(double y, const std::vector<const DmuRecord*>& ref) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto* k : ref) {
    if (k->outputs[0] >= y) best = std::min(best, k->inputs[0]);
  }
  for (const auto* lo : ref) {
    for (const auto* hi : ref) {
      const double ylo = lo->outputs[0], yhi = hi->outputs[0];
      if (!(ylo < y && y < yhi)) continue;
      const double w = (yhi - y) / (yhi - ylo);
      best = std::min(best, w * lo->inputs[0] + (1.0 - w) * hi->inputs[0]);
    }
  }
  return best;
}

inline double vrs_hull_oracle(double x, double y, const std::vector<const DmuRecord*>& ref) {
  return vrs_min_input(y, ref) / x;
}

/// NIRS adds downward-scaled copies of each reference point to the VRS hull.
inline double nirs_hull_oracle(double x, double y, const std::vector<const DmuRecord*>& ref) {
  double best = vrs_min_input(y, ref);
  for (const auto* k : ref) {
    if (k->outputs[0] >= y) best = std::min(best, k->inputs[0] * y / k->outputs[0]);
  }
  return best / x;
}

}  // namespace frontier::testing
