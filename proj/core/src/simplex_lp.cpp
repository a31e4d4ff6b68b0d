#include "simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elmis/error.hpp"

namespace elmis::detail {

namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-11;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Maximizes cost'x over columns with allowed[c]. Returns false if unbounded.
  bool optimize(const std::vector<double>& cost, const std::vector<bool>& allowed) {
    const std::size_t max_iter = 50 * (rows_ + cols_) + 1000;
    int degenerate_run = 0;
    std::vector<double> reduced(cols_);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      for (std::size_t c = 0; c < cols_; ++c) {
        double z = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) z += cost[basis_[r]] * at(r, c);
        reduced[c] = cost[c] - z;
      }
      const bool bland = degenerate_run > 20;
      std::size_t enter = cols_;
      double best = kCostEps;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!allowed[c] || reduced[c] <= kCostEps) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (reduced[c] > best) {
          best = reduced[c];
          enter = c;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotEps) continue;
        const double q = rhs(r) / a;
        if (q < ratio - 1e-15 ||
            (q <= ratio + 1e-15 && leave < rows_ && basis_[r] < basis_[leave])) {
          ratio = q;
          leave = r;
        }
      }
      if (leave == rows_) return false;
      degenerate_run = ratio <= 1e-15 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
    throw ConvergenceError("simplex iteration limit reached", 0.0, 0.0);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_lp(std::vector<double> a, std::size_t rows,
                           std::size_t cols, std::vector<double> b,
                           const std::vector<double>& c) {
  // Columns: original variables, then one artificial per row.
  Tableau tab(rows, cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < cols; ++j) tab.at(r, j) = sign * a[r * cols + j];
    tab.at(r, cols + r) = 1.0;
    tab.rhs(r) = sign * b[r];
    tab.basis()[r] = cols + r;
  }

  std::vector<double> phase1(cols + rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r) phase1[cols + r] = -1.0;
  std::vector<bool> allowed(cols + rows, true);
  tab.optimize(phase1, allowed);

  double infeasibility = 0.0;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] >= cols) infeasibility += tab.rhs(r);
  }
  double b_scale = 1.0;
  for (double v : b) b_scale = std::max(b_scale, std::abs(v));
  LpResult out;
  if (infeasibility > 1e-9 * b_scale) {
    out.status = LpStatus::infeasible;
    return out;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < cols) {
      ++r;
      continue;
    }
    std::size_t col = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (std::abs(tab.at(r, j)) > 1e-9) {
        col = j;
        break;
      }
    }
    if (col == cols) {
      tab.drop_row(r);
    } else {
      tab.pivot(r, col);
      ++r;
    }
  }

  std::vector<double> phase2(cols + rows, 0.0);
  std::copy(c.begin(), c.end(), phase2.begin());
  for (std::size_t r = 0; r < rows; ++r) allowed[cols + r] = false;
  if (!tab.optimize(phase2, allowed)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x.assign(cols, 0.0);
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] < cols) out.x[tab.basis()[r]] = tab.rhs(r);
  }
  for (std::size_t j = 0; j < cols; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace elmis::detail
