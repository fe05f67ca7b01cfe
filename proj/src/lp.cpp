#include "frontier/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frontier/error.hpp"

namespace frontier::lp {

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

LinearProgram::LinearProgram(Sense sense, std::vector<double> cost,
                             DenseMatrix constraints,
                             std::vector<Relation> relations,
                             std::vector<double> rhs)
    : sense_(sense),
      cost_(std::move(cost)),
      constraints_(std::move(constraints)),
      relations_(std::move(relations)),
      rhs_(std::move(rhs)) {
  if (cost_.empty()) throw ValidationError("linear program needs at least one variable");
  if (rhs_.empty()) throw ValidationError("linear program needs at least one constraint");
  if (constraints_.rows() != rhs_.size() || relations_.size() != rhs_.size()) {
    throw ValidationError("constraint matrix has " + std::to_string(constraints_.rows()) +
                          " rows but " + std::to_string(relations_.size()) +
                          " relations and " + std::to_string(rhs_.size()) +
                          " right-hand sides");
  }
  if (constraints_.cols() != cost_.size()) {
    throw ValidationError("constraint matrix has " + std::to_string(constraints_.cols()) +
                          " columns but cost vector has length " +
                          std::to_string(cost_.size()));
  }
}

namespace {

// Tableau in canonical form: `m` constraint rows plus one reduced-cost row,
// each `width + 1` wide with the right-hand side stored last.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t width)
      : m_(m), width_(width), cells_((m + 1) * (width + 1), 0.0), basis_(m, 0) {}

  double& at(std::size_t r, std::size_t c) { return cells_[r * (width_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * (width_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, width_); }
  double rhs(std::size_t r) const { return at(r, width_); }
  double& cost(std::size_t c) { return at(m_, c); }
  double cost(std::size_t c) const { return at(m_, c); }

  std::size_t rows() const noexcept { return m_; }
  std::size_t width() const noexcept { return width_; }
  std::vector<std::size_t>& basis() noexcept { return basis_; }
  const std::vector<std::size_t>& basis() const noexcept { return basis_; }

  // Loads `costs` into the reduced-cost row and prices out the basis.
  void set_objective(const std::vector<double>& costs) {
    for (std::size_t c = 0; c <= width_; ++c) cost(c) = c < width_ ? costs[c] : 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      const double cb = costs[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c <= width_; ++c) cost(c) -= cb * at(r, c);
    }
  }

  // The stored corner entry is -objective.
  double objective() const { return -cost(width_); }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= width_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= width_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  std::size_t m_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

enum class LoopResult { optimal, unbounded };

// Primal simplex with Bland's rule: lowest-index improving column enters; the
// ratio test breaks ties by lowest basic-variable index.
LoopResult run_simplex(Tableau& t, std::size_t allowed_columns,
                       const SolverOptions& opt, std::size_t& iterations,
                       std::size_t iteration_limit) {
  while (true) {
    std::size_t entering = allowed_columns;
    for (std::size_t c = 0; c < allowed_columns; ++c) {
      if (t.cost(c) < -opt.optimality_tol) {
        entering = c;
        break;
      }
    }
    if (entering == allowed_columns) return LoopResult::optimal;

    std::size_t leaving = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= opt.pivot_tol) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      const double tie_band = 1e-12 * (1.0 + std::abs(best_ratio));
      if (leaving == t.rows() || ratio < best_ratio - tie_band) {
        best_ratio = ratio;
        leaving = r;
      } else if (ratio <= best_ratio + tie_band && t.basis()[r] < t.basis()[leaving]) {
        best_ratio = std::min(best_ratio, ratio);
        leaving = r;
      }
    }
    if (leaving == t.rows()) return LoopResult::unbounded;

    t.pivot(leaving, entering);
    if (++iterations > iteration_limit) {
      throw InvariantViolation("simplex exceeded " + std::to_string(iteration_limit) +
                               " pivots; numerical trouble suspected");
    }
  }
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolverOptions& opt) {
  const std::size_t n = lp.num_variables();
  const std::size_t m = lp.num_constraints();
  const DenseMatrix& a = lp.constraints();

  for (std::size_t r = 0; r < m; ++r) {
    if (!std::isfinite(lp.rhs()[r])) {
      throw ValidationError("non-finite right-hand side in row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!std::isfinite(a(r, c))) {
        throw ValidationError("non-finite coefficient at (" + std::to_string(r) + ", " +
                              std::to_string(c) + ")");
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!std::isfinite(lp.cost()[c])) {
      throw ValidationError("non-finite cost coefficient " + std::to_string(c));
    }
  }

  // Normalize to rhs >= 0, flipping relations of negated rows.
  std::vector<double> sign(m, 1.0);
  std::vector<Relation> rel = lp.relations();
  for (std::size_t r = 0; r < m; ++r) {
    if (lp.rhs()[r] < 0.0) {
      sign[r] = -1.0;
      if (rel[r] == Relation::less_equal) rel[r] = Relation::greater_equal;
      else if (rel[r] == Relation::greater_equal) rel[r] = Relation::less_equal;
    }
  }

  std::size_t num_logical = 0;
  std::size_t num_artificial = 0;
  for (Relation re : rel) {
    if (re != Relation::equal) ++num_logical;
    if (re != Relation::less_equal) ++num_artificial;
  }
  const std::size_t first_artificial = n + num_logical;
  const std::size_t width = first_artificial + num_artificial;

  Tableau t(m, width);
  std::size_t next_logical = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign[r] * a(r, c);
    t.rhs(r) = sign[r] * lp.rhs()[r];
    switch (rel[r]) {
      case Relation::less_equal:
        t.at(r, next_logical) = 1.0;
        t.basis()[r] = next_logical++;
        break;
      case Relation::greater_equal:
        t.at(r, next_logical++) = -1.0;
        t.at(r, next_artificial) = 1.0;
        t.basis()[r] = next_artificial++;
        break;
      case Relation::equal:
        t.at(r, next_artificial) = 1.0;
        t.basis()[r] = next_artificial++;
        break;
    }
  }

  const std::size_t iteration_limit = 1000 + 200 * (m + width) * (m + 1);
  LpSolution solution;
  solution.primal_values.assign(n, 0.0);

  if (num_artificial > 0) {
    std::vector<double> phase1(width, 0.0);
    for (std::size_t c = first_artificial; c < width; ++c) phase1[c] = 1.0;
    t.set_objective(phase1);
    // Phase 1 is bounded below by zero, so this loop always reaches optimal.
    run_simplex(t, width, opt, solution.iterations, iteration_limit);
    if (t.objective() > opt.feasibility_tol) {
      solution.status = Status::infeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible. Rows that
    // keep an artificial are redundant; they stay inert in phase 2.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > opt.pivot_tol) {
          t.pivot(r, c);
          ++solution.iterations;
          break;
        }
      }
    }
  }

  std::vector<double> phase2(width, 0.0);
  const double direction = lp.sense() == Sense::maximize ? -1.0 : 1.0;
  for (std::size_t c = 0; c < n; ++c) phase2[c] = direction * lp.cost()[c];
  t.set_objective(phase2);
  if (run_simplex(t, first_artificial, opt, solution.iterations, iteration_limit) ==
      LoopResult::unbounded) {
    solution.status = Status::unbounded;
    return solution;
  }

  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t b = t.basis()[r];
    if (b < n) solution.primal_values[b] = t.rhs(r);
  }
  double objective = 0.0;
  for (std::size_t c = 0; c < n; ++c) objective += lp.cost()[c] * solution.primal_values[c];
  for (double& x : solution.primal_values) {
    if (x < opt.zero_clip) x = 0.0;
  }
  solution.objective_value = objective;
  solution.status = Status::optimal;
  return solution;
}

}  // namespace frontier::lp
