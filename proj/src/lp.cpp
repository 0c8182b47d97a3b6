#include "plqi/lp.hpp"

#include <cmath>
#include <vector>

namespace plqi {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Tableau simplex on  max c.x, A x = b, x >= 0  with an initial basis of
// artificial variables. Phase 1 drives the artificials to zero, phase 2
// optimizes the real objective over the remaining basis.
class Tableau {
 public:
  Tableau(const Mat& a, const Vec& b, const Vec& c)
      : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
    t_.setZero(m_ + 1, n_ + m_ + 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const double sign = b[i] < 0 ? -1.0 : 1.0;
      t_.block(i, 0, 1, n_) = sign * a.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, n_ + m_) = sign * b[i];
      basis_[i] = n_ + i;
    }
    c_ = c;
  }

  LpResult run() {
    // Phase 1: minimize the sum of artificials.
    Vec phase1 = Vec::Zero(n_ + m_);
    phase1.tail(m_).setConstant(-1.0);
    set_objective(phase1);
    if (!iterate()) return {LpResult::Status::Unbounded, 0.0, {}};
    if (-objective_value() > kFeasTol) return {LpResult::Status::Infeasible, 0.0, {}};
    pivot_out_artificials();

    // Phase 2 on the real objective, artificial columns frozen.
    Vec full = Vec::Zero(n_ + m_);
    full.head(n_) = c_;
    set_objective(full);
    artificials_blocked_ = true;
    if (!iterate()) return {LpResult::Status::Unbounded, 0.0, {}};

    LpResult out;
    out.status = LpResult::Status::Optimal;
    out.x = Vec::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = t_(i, n_ + m_);
    out.objective = c_.dot(out.x);
    return out;
  }

 private:
  void set_objective(const Vec& obj) {
    t_.row(m_).setZero();
    t_.block(m_, 0, 1, n_ + m_) = -obj.transpose();
    // Price out the current basis.
    for (int i = 0; i < m_; ++i) {
      const double coef = t_(m_, basis_[i]);
      if (coef != 0.0) t_.row(m_) -= coef * t_.row(i);
    }
  }

  double objective_value() const { return t_(m_, n_ + m_); }

  bool column_allowed(int j) const {
    return !(artificials_blocked_ && j >= n_);
  }

  // Returns false on unboundedness.
  bool iterate() {
    for (;;) {
      int enter = -1;  // Bland: smallest improving index
      for (int j = 0; j < n_ + m_; ++j) {
        if (!column_allowed(j)) continue;
        if (t_(m_, j) < -kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double aij = t_(i, enter);
        if (aij > kPivotTol) {
          const double ratio = t_(i, n_ + m_) / aij;
          if (leave < 0 || ratio < best - kPivotTol ||
              (ratio < best + kPivotTol && basis_[i] < basis_[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  // After phase 1, swap any artificial still in the basis (at zero level)
  // for a real column so phase 2 can block the artificials.
  void pivot_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > kFeasTol) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col);
      // Otherwise the row is redundant; leaving the artificial basic at
      // zero is harmless since its column is blocked in phase 2.
    }
  }

  int m_, n_;
  Mat t_;
  Vec c_;
  std::vector<int> basis_;
  bool artificials_blocked_ = false;
};

}  // namespace

LpResult solve_lp(const Mat& a, const Vec& b, const Vec& c) {
  if (a.rows() != b.size() || a.cols() != c.size())
    throw Error("solve_lp: inconsistent dimensions");
  Tableau t(a, b, c);
  return t.run();
}

}  // namespace plqi
