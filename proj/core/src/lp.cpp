// Two-phase exact simplex on a dense rational tableau, Bland's rule.
#include "ubcw/lp.hpp"

#include <string>

#include "ubcw/errors.hpp"

namespace ubcw {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
          int n)
      : n_(n), m_(static_cast<int>(a.size())) {
    width_ = n_ + m_;
    t_.assign(m_, std::vector<Rat>(width_ + 1, Rat(0)));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      Rat s(b[i] < 0 ? -1 : 1);
      for (int j = 0; j < n_; ++j) t_[i][j] = s * a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][width_] = s * b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: minimize the artificial sum.  Returns true when feasible.
  bool phase1() {
    obj_.assign(width_ + 1, Rat(0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j <= width_; ++j) obj_[j] -= t_[i][j];
    for (int i = 0; i < m_; ++i) obj_[n_ + i] += 1;
    run(width_);
    if (obj_[width_] != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2: minimize c over the structural columns.
  void phase2(const std::vector<Rat>& c) {
    obj_.assign(width_ + 1, Rat(0));
    for (int j = 0; j < n_; ++j) obj_[j] = c[j];
    for (int i = 0; i < m_; ++i) {
      const Rat& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= width_; ++j) obj_[j] -= cb * t_[i][j];
    }
    run(n_);
  }

  Rat objective() const { return -obj_[width_]; }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][width_];
    return x;
  }

 private:
  void pivot(int r, int c) {
    Rat inv = t_[r][c];
    for (int j = 0; j <= width_; ++j) t_[r][j] /= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rat f = t_[i][c];
      for (int j = 0; j <= width_; ++j) t_[i][j] -= f * t_[r][j];
    }
    if (obj_[c] != 0) {
      Rat f = obj_[c];
      for (int j = 0; j <= width_; ++j) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Bland: entering = least negative-cost column, leaving = least ratio
  // with ties broken by least basic variable.
  void run(int allowed_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][width_] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw PreconditionError("lp objective is unbounded");
      pivot(leave, enter);
    }
  }

  // Replace basic artificials by structural columns; drop redundant rows.
  void drive_out_artificials() {
    for (int i = static_cast<int>(basis_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < n_) continue;
      int c = -1;
      for (int j = 0; j < n_; ++j)
        if (t_[i][j] != 0) {
          c = j;
          break;
        }
      if (c >= 0) {
        pivot(i, c);
      } else {
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
  }

  int n_, m_, width_;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> obj_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp_min(const std::vector<std::vector<Rat>>& a,
                      const std::vector<Rat>& b, const std::vector<Rat>& c) {
  if (a.size() != b.size())
    throw PreconditionError("lp: row count " + std::to_string(a.size()) +
                            " does not match rhs size " +
                            std::to_string(b.size()));
  std::size_t n = c.size();
  for (const auto& row : a)
    if (row.size() != n)
      throw PreconditionError("lp: row width " + std::to_string(row.size()) +
                              " does not match cost size " +
                              std::to_string(n));
  LpResult out;
  Tableau t(a, b, static_cast<int>(n));
  if (!t.phase1()) return out;
  t.phase2(c);
  out.feasible = true;
  out.objective = t.objective();
  out.x = t.solution();
  return out;
}

}  // namespace ubcw
