#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamondlab::lp {

/// Largest number of variables or constraint rows accepted by solve().
inline constexpr std::size_t kMaxDim = 8;

/// Feasibility tolerance on row-norm-scaled residuals.
inline constexpr double kFeasibilityTol = 1e-9;
/// Bases whose normalized determinant falls below this are skipped.
inline constexpr double kSingularityTol = 1e-12;

enum class Sense { Maximize, Minimize };
enum class RowSense { LessEqual, GreaterEqual };

class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

class Unbounded : public std::runtime_error {
 public:
  explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};

/// Dense LP over x >= 0 with a uniform row sense:
///
///   {max|min}  c.x   subject to   A x {<=|>=} b,   x >= 0.
class LpProblem {
 public:
  LpProblem(std::size_t num_vars, std::size_t num_rows, Sense sense, RowSense row_sense);

  /// Convenience constructor; `matrix` is given row by row.
  LpProblem(Sense sense, RowSense row_sense, std::initializer_list<double> objective,
            std::initializer_list<std::initializer_list<double>> matrix,
            std::initializer_list<double> rhs);

  std::size_t num_vars() const { return n_; }
  std::size_t num_rows() const { return m_; }
  Sense sense() const { return sense_; }
  RowSense row_sense() const { return row_sense_; }

  double objective(std::size_t j) const { return c_[j]; }
  double coeff(std::size_t i, std::size_t j) const { return a_[i * kMaxDim + j]; }
  double rhs(std::size_t i) const { return b_[i]; }

  void set_objective(std::size_t j, double v) { c_[j] = v; }
  void set_coeff(std::size_t i, std::size_t j, double v) { a_[i * kMaxDim + j] = v; }
  void set_rhs(std::size_t i, double v) { b_[i] = v; }

  /// c.x for a point of dimension num_vars().
  double evaluate(std::span<const double> x) const;
  /// True when x satisfies every row and x >= 0 within kFeasibilityTol.
  bool is_feasible(std::span<const double> x, double tol = kFeasibilityTol) const;

  /// Throws std::invalid_argument on non-finite entries.
  void validate() const;

 private:
  std::size_t n_;
  std::size_t m_;
  Sense sense_;
  RowSense row_sense_;
  std::array<double, kMaxDim> c_{};
  std::array<double, kMaxDim * kMaxDim> a_{};
  std::array<double, kMaxDim> b_{};
};

struct LpSolution {
  double value = 0;
  std::vector<double> vertex;
  /// Indices of the n tight constraints defining the vertex. Index i < m is
  /// constraint row i; index m + j is the bound x_j >= 0.
  std::vector<std::size_t> active_set;
};

/// Exact optimum by enumeration of basic feasible solutions. Among optimal
/// vertices (values equal to 1e-12 relative) the lexicographically smallest
/// is returned. Throws Infeasible or Unbounded.
LpSolution solve(const LpProblem& problem);

/// |solve(primal).value - solve(dual).value|.
double duality_gap(const LpProblem& primal, const LpProblem& dual);

}  // namespace diamondlab::lp
