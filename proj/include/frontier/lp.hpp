#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace frontier::lp {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status status) noexcept;

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// optimize cost·x subject to A x (rel) rhs, x >= 0.
///
/// Dimensions are checked on construction; a mismatch throws ValidationError.
class LinearProgram {
 public:
  LinearProgram(Sense sense, std::vector<double> cost, DenseMatrix constraints,
                std::vector<Relation> relations, std::vector<double> rhs);

  Sense sense() const noexcept { return sense_; }
  const std::vector<double>& cost() const noexcept { return cost_; }
  const DenseMatrix& constraints() const noexcept { return constraints_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<double>& rhs() const noexcept { return rhs_; }

  std::size_t num_variables() const noexcept { return cost_.size(); }
  std::size_t num_constraints() const noexcept { return rhs_.size(); }

 private:
  Sense sense_;
  std::vector<double> cost_;
  DenseMatrix constraints_;
  std::vector<Relation> relations_;
  std::vector<double> rhs_;
};

struct SolverOptions {
  double feasibility_tol = 1e-7;  // phase-1 residual and constraint checks
  double optimality_tol = 1e-9;   // reduced-cost threshold for entering
  double zero_clip = 1e-9;        // |x| below this is reported as exactly 0
  double pivot_tol = 1e-11;       // smallest usable pivot element
};

struct LpSolution {
  Status status = Status::infeasible;
  double objective_value = 0.0;  // meaningful only when optimal
  std::vector<double> primal_values;
  std::size_t iterations = 0;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule.
///
/// Throws ValidationError on non-finite coefficients and InvariantViolation if
/// the pivot loop exceeds its (generous) safety bound, which Bland's rule
/// makes unreachable in exact arithmetic.
LpSolution solve(const LinearProgram& lp, const SolverOptions& options = {});

}  // namespace frontier::lp
