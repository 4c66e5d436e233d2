#include "diamondlab/lp.hpp"

#include <algorithm>
#include <cmath>

namespace diamondlab::lp {

namespace {

// Enough rows for the ray check on the largest accepted problem:
// m + 1 constraint rows plus n bound rows.
constexpr std::size_t kMaxRows = 2 * kMaxDim + 1;

// Maximize c.x subject to A x <= b, x >= 0, with bounds folded in as rows
// -x_j <= 0 after the first m rows.
struct CanonicalLp {
  std::size_t n = 0;
  std::size_t m = 0;  // constraint rows, excluding bounds
  std::array<double, kMaxDim> c{};
  std::array<std::array<double, kMaxDim>, kMaxRows> a{};
  std::array<double, kMaxRows> b{};
  std::array<double, kMaxRows> row_norm{};

  std::size_t total_rows() const { return m + n; }
};

CanonicalLp to_canonical(const LpProblem& p) {
  CanonicalLp lp;
  lp.n = p.num_vars();
  lp.m = p.num_rows();
  const double obj_sign = p.sense() == Sense::Maximize ? 1.0 : -1.0;
  const double row_sign = p.row_sense() == RowSense::LessEqual ? 1.0 : -1.0;
  for (std::size_t j = 0; j < lp.n; ++j) lp.c[j] = obj_sign * p.objective(j);
  for (std::size_t i = 0; i < lp.m; ++i) {
    for (std::size_t j = 0; j < lp.n; ++j) lp.a[i][j] = row_sign * p.coeff(i, j);
    lp.b[i] = row_sign * p.rhs(i);
  }
  return lp;
}

void add_bound_rows(CanonicalLp& lp) {
  for (std::size_t j = 0; j < lp.n; ++j) {
    auto& row = lp.a[lp.m + j];
    row.fill(0.0);
    row[j] = -1.0;
    lp.b[lp.m + j] = 0.0;
  }
  for (std::size_t i = 0; i < lp.total_rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < lp.n; ++j) s += lp.a[i][j] * lp.a[i][j];
    lp.row_norm[i] = std::sqrt(s);
  }
}

// Solves the square system formed by `rows`. Returns false when the basis is
// singular relative to the product of its row norms.
bool solve_basis(const CanonicalLp& lp, std::span<const std::size_t> rows,
                 std::array<double, kMaxDim>& x) {
  const std::size_t n = lp.n;
  std::array<std::array<double, kMaxDim + 1>, kMaxDim> m{};
  double norm_product = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t k = rows[r];
    if (lp.row_norm[k] == 0.0) return false;
    norm_product *= lp.row_norm[k];
    for (std::size_t j = 0; j < n; ++j) m[r][j] = lp.a[k][j];
    m[r][n] = lp.b[k];
  }
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return false;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  if (std::abs(det) / norm_product < kSingularityTol) return false;
  for (std::size_t r = n; r-- > 0;) {
    double s = m[r][n];
    for (std::size_t j = r + 1; j < n; ++j) s -= m[r][j] * x[j];
    x[r] = s / m[r][r];
  }
  return true;
}

bool feasible(const CanonicalLp& lp, const std::array<double, kMaxDim>& x) {
  for (std::size_t i = 0; i < lp.total_rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < lp.n; ++j) s += lp.a[i][j] * x[j];
    const double residual = s - lp.b[i];
    const double scale = lp.row_norm[i] > 0 ? lp.row_norm[i] : 1.0;
    if (residual / scale > kFeasibilityTol) return false;
  }
  return true;
}

bool values_tie(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

bool lex_less(const std::array<double, kMaxDim>& a, const std::array<double, kMaxDim>& b,
              std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (values_tie(a[j], b[j])) continue;
    return a[j] < b[j];
  }
  return false;
}

struct Enumerated {
  bool found = false;
  double value = 0;
  std::array<double, kMaxDim> vertex{};
  std::array<std::size_t, kMaxDim> basis{};
};

// Visits every n-subset of the m + n rows in lexicographic order.
Enumerated enumerate_vertices(const CanonicalLp& lp) {
  Enumerated best;
  const std::size_t n = lp.n;
  const std::size_t total = lp.total_rows();
  std::array<std::size_t, kMaxDim> idx{};
  for (std::size_t r = 0; r < n; ++r) idx[r] = r;
  std::array<double, kMaxDim> x{};
  while (true) {
    if (solve_basis(lp, std::span<const std::size_t>(idx.data(), n), x) && feasible(lp, x)) {
      double v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.c[j] * x[j];
      bool take = !best.found;
      if (!take) {
        if (values_tie(v, best.value)) {
          take = lex_less(x, best.vertex, n);
        } else {
          take = v > best.value;
        }
      }
      if (take) {
        best.found = true;
        best.value = v;
        best.vertex = x;
        best.basis = idx;
      }
    }
    // next combination
    std::size_t r = n;
    while (r > 0 && idx[r - 1] == total - n + (r - 1)) --r;
    if (r == 0) break;
    ++idx[r - 1];
    for (std::size_t k = r; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
  return best;
}

bool obviously_bounded(const CanonicalLp& lp) {
  for (std::size_t j = 0; j < lp.n; ++j) {
    bool has_positive = false;
    for (std::size_t i = 0; i < lp.m; ++i) {
      if (lp.a[i][j] < 0) return false;
      if (lp.a[i][j] > 0) has_positive = true;
    }
    if (!has_positive) return false;
  }
  return true;
}

// Largest c.d over recession directions d >= 0, A d <= 0, sum(d) <= 1.
double best_ray(const CanonicalLp& lp) {
  CanonicalLp ray;
  ray.n = lp.n;
  ray.m = lp.m + 1;
  ray.c = lp.c;
  for (std::size_t i = 0; i < lp.m; ++i) {
    ray.a[i] = lp.a[i];
    ray.b[i] = 0.0;
  }
  ray.a[lp.m].fill(0.0);
  for (std::size_t j = 0; j < lp.n; ++j) ray.a[lp.m][j] = 1.0;
  ray.b[lp.m] = 1.0;
  add_bound_rows(ray);
  const Enumerated e = enumerate_vertices(ray);
  return e.found ? e.value : 0.0;
}

}  // namespace

LpProblem::LpProblem(std::size_t num_vars, std::size_t num_rows, Sense sense, RowSense row_sense)
    : n_(num_vars), m_(num_rows), sense_(sense), row_sense_(row_sense) {
  if (num_vars < 1 || num_vars > kMaxDim || num_rows < 1 || num_rows > kMaxDim) {
    throw std::invalid_argument("LP dimensions must satisfy 1 <= n, m <= 8");
  }
}

LpProblem::LpProblem(Sense sense, RowSense row_sense, std::initializer_list<double> objective,
                     std::initializer_list<std::initializer_list<double>> matrix,
                     std::initializer_list<double> rhs)
    : LpProblem(objective.size(), matrix.size(), sense, row_sense) {
  if (rhs.size() != m_) throw std::invalid_argument("rhs length must equal the row count");
  std::size_t j = 0;
  for (double v : objective) c_[j++] = v;
  std::size_t i = 0;
  for (const auto& row : matrix) {
    if (row.size() != n_) throw std::invalid_argument("every row must have n entries");
    j = 0;
    for (double v : row) set_coeff(i, j++, v);
    ++i;
  }
  i = 0;
  for (double v : rhs) b_[i++] = v;
}

double LpProblem::evaluate(std::span<const double> x) const {
  double s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += c_[j] * x[j];
  return s;
}

bool LpProblem::is_feasible(std::span<const double> x, double tol) const {
  const double sign = row_sense_ == RowSense::LessEqual ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j] < -tol) return false;
  }
  for (std::size_t i = 0; i < m_; ++i) {
    double s = 0;
    double norm = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      s += coeff(i, j) * x[j];
      norm += coeff(i, j) * coeff(i, j);
    }
    norm = norm > 0 ? std::sqrt(norm) : 1.0;
    if (sign * (s - b_[i]) / norm > tol) return false;
  }
  return true;
}

void LpProblem::validate() const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (!std::isfinite(c_[j])) throw std::invalid_argument("non-finite objective entry");
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (!std::isfinite(b_[i])) throw std::invalid_argument("non-finite rhs entry");
    for (std::size_t j = 0; j < n_; ++j) {
      if (!std::isfinite(coeff(i, j))) throw std::invalid_argument("non-finite matrix entry");
    }
  }
}

LpSolution solve(const LpProblem& problem) {
  problem.validate();
  CanonicalLp lp = to_canonical(problem);

  // A variable that improves the objective and appears in no row with a
  // positive coefficient can grow without limit.
  for (std::size_t j = 0; j < lp.n; ++j) {
    if (lp.c[j] <= 0) continue;
    bool blocked = false;
    for (std::size_t i = 0; i < lp.m; ++i) blocked = blocked || lp.a[i][j] > 0;
    if (!blocked) throw Unbounded("variable " + std::to_string(j) + " is unbounded");
  }

  add_bound_rows(lp);
  const Enumerated best = enumerate_vertices(lp);
  if (!best.found) throw Infeasible("no feasible vertex");

  if (!obviously_bounded(lp)) {
    double cnorm = 0;
    for (std::size_t j = 0; j < lp.n; ++j) cnorm = std::max(cnorm, std::abs(lp.c[j]));
    if (best_ray(lp) > kFeasibilityTol * std::max(1.0, cnorm)) {
      throw Unbounded("objective improves along a recession direction");
    }
  }

  LpSolution out;
  out.value = problem.sense() == Sense::Maximize ? best.value : -best.value;
  out.vertex.assign(best.vertex.begin(), best.vertex.begin() + lp.n);
  out.active_set.assign(best.basis.begin(), best.basis.begin() + lp.n);
  return out;
}

double duality_gap(const LpProblem& primal, const LpProblem& dual) {
  return std::abs(solve(primal).value - solve(dual).value);
}

}  // namespace diamondlab::lp
