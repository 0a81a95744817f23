#include "dpg/simplex.hpp"

#include <stdexcept>

namespace dpg {

namespace {

class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : vars_(p.objective.size()), rows_(p.rows.size()), cols_(vars_ + rows_) {
    if (p.rhs.size() != p.rows.size()) throw std::domain_error("lp: rhs/row count mismatch");
    cost_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < vars_; ++j) cost_[j] = p.objective[j];
    cells_.assign(rows_, std::vector<Rational>(cols_, Rational(0)));
    rhs_ = p.rhs;
    basis_.resize(rows_);
    in_basis_.assign(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (p.rows[i].size() != vars_) throw std::domain_error("lp: row width mismatch");
      if (rhs_[i].sign() < 0) throw std::domain_error("lp: negative right-hand side");
      for (std::size_t j = 0; j < vars_; ++j) cells_[i][j] = p.rows[i][j];
      cells_[i][vars_ + i] = Rational(1);  // slack
      basis_[i] = vars_ + i;
      in_basis_[vars_ + i] = true;
    }
  }

  // Bland's rule: enter the lowest-index column with positive reduced cost,
  // leave on the lowest basic index among the minimum-ratio rows.
  LpStatus run() {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (in_basis_[j]) continue;
        if (reduced_cost(j).sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return LpStatus::optimal;

      std::size_t leave_row = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (cells_[i][enter].sign() <= 0) continue;
        Rational ratio = rhs_[i] / cells_[i][enter];
        if (leave_row == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave_row])) {
          leave_row = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave_row == rows_) return LpStatus::unbounded;
      pivot(leave_row, enter);
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(vars_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  Rational reduced_cost(std::size_t j) const {
    Rational rc = cost_[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (cells_[i][j].sign() == 0) continue;
      const Rational& cb = cost_[basis_[i]];
      if (cb.sign() == 0) continue;
      rc -= cb * cells_[i][j];
    }
    return rc;
  }

  void pivot(std::size_t r, std::size_t enter) {
    const Rational inv = Rational(1) / cells_[r][enter];
    if (inv != Rational(1)) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cells_[r][j].sign() != 0) cells_[r][j] *= inv;
      }
      rhs_[r] *= inv;
    }
    cells_[r][enter] = Rational(1);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || cells_[i][enter].sign() == 0) continue;
      const Rational factor = cells_[i][enter];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cells_[r][j].sign() == 0) continue;
        cells_[i][j] -= factor * cells_[r][j];
      }
      rhs_[i] -= factor * rhs_[r];
      cells_[i][enter] = Rational(0);
    }
    in_basis_[basis_[r]] = false;
    in_basis_[enter] = true;
    basis_[r] = enter;
  }

  std::size_t vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
};

}  // namespace

LpResult solve_lp_max(const LpProblem& problem) {
  Tableau tableau(problem);
  LpResult result;
  result.status = tableau.run();
  if (result.status == LpStatus::optimal) {
    result.x = tableau.solution();
    Rational value(0);
    for (std::size_t j = 0; j < problem.objective.size(); ++j) {
      if (problem.objective[j].sign() != 0) value += problem.objective[j] * result.x[j];
    }
    result.objective = std::move(value);
  }
  return result;
}

}  // namespace dpg
