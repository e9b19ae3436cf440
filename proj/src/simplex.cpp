#include "lipfree/simplex.hpp"

#include <utility>

#include "lipfree/error.hpp"

namespace lipfree {

namespace {

// Tableau rows store B^-1 A with the rhs in the last column; basis_[i] is
// the column basic in row i. Invariant: rhs column stays >= 0.
class Tableau {
 public:
  Tableau(int rows, int cols) : cols_(cols), t_(rows, std::vector<Rat>(cols + 1, Rat(0))), basis_(rows, -1) {}

  Rat& at(int i, int j) { return t_[i][j]; }
  Rat& rhs(int i) { return t_[i][cols_]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return cols_; }
  int basic(int i) const { return basis_[i]; }
  void set_basic(int i, int j) { basis_[i] = j; }

  void pivot(int r, int c) {
    const Rat inv = Rat(1) / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rat factor = t_[i][c];
      for (int j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= factor * t_[r][j];
    }
    basis_[r] = c;
  }

  // One simplex pass maximizing cost.x with Bland's rule. Returns false
  // when the objective is unbounded above.
  bool run(const std::vector<Rat>& cost) {
    std::vector<bool> is_basic(cols_, false);
    for (int i = 0; i < rows(); ++i)
      if (basis_[i] >= 0) is_basic[basis_[i]] = true;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (is_basic[j]) continue;
        Rat rc = -cost[j];
        for (int i = 0; i < rows(); ++i)
          if (t_[i][j] != 0 && cost[basis_[i]] != 0)
            rc += cost[basis_[i]] * t_[i][j];
        if (rc < 0) {
          enter = j;
          break;  // smallest improving index
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rat best;
      for (int i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;  // unbounded

      is_basic[basis_[leave]] = false;
      is_basic[enter] = true;
      pivot(leave, enter);
    }
  }

 private:
  int cols_;
  std::vector<std::vector<Rat>> t_;
  std::vector<int> basis_;
};

}  // namespace

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars), objective_(num_vars, Rat(0)) {}

void LinearProgram::set_objective(std::vector<Rat> c) {
  if (static_cast<int>(c.size()) != num_vars_)
    throw Error(ErrorKind::PreconditionNotMet, "objective length mismatch");
  objective_ = std::move(c);
}

void LinearProgram::add_le(std::vector<Rat> row, Rat rhs) {
  if (static_cast<int>(row.size()) != num_vars_)
    throw Error(ErrorKind::PreconditionNotMet, "row length mismatch");
  rows_.push_back({std::move(row), std::move(rhs), false});
}

void LinearProgram::add_eq(std::vector<Rat> row, Rat rhs) {
  if (static_cast<int>(row.size()) != num_vars_)
    throw Error(ErrorKind::PreconditionNotMet, "row length mismatch");
  rows_.push_back({std::move(row), std::move(rhs), true});
}

LpSolution LinearProgram::solve() const {
  const int m = static_cast<int>(rows_.size());
  int num_slack = 0;
  for (const auto& row : rows_)
    if (!row.equality) ++num_slack;

  // Column layout: structural | slacks | artificials.
  const int slack0 = num_vars_;
  int next_slack = slack0;

  // Rows are sign-normalized so every rhs is nonnegative; a slack column
  // then seeds the basis exactly when its row kept rhs >= 0.
  struct Prepared {
    std::vector<Rat> a;
    Rat rhs;
    int slack_col = -1;
    Rat slack_coeff;
    bool needs_artificial = true;
  };
  std::vector<Prepared> prep;
  prep.reserve(m);
  for (const auto& row : rows_) {
    Prepared p;
    const bool flip = row.rhs < 0;
    p.a.reserve(num_vars_);
    for (const auto& v : row.a) p.a.push_back(flip ? Rat(-v) : v);
    p.rhs = flip ? Rat(-row.rhs) : row.rhs;
    if (!row.equality) {
      p.slack_col = next_slack++;
      p.slack_coeff = flip ? Rat(-1) : Rat(1);
      p.needs_artificial = flip;
    }
    prep.push_back(std::move(p));
  }

  int num_art = 0;
  for (const auto& p : prep)
    if (p.needs_artificial) ++num_art;
  const int art0 = slack0 + num_slack;
  const int total_cols = art0 + num_art;

  Tableau tab(m, total_cols);
  int next_art = art0;
  for (int i = 0; i < m; ++i) {
    auto& p = prep[i];
    for (int j = 0; j < num_vars_; ++j) tab.at(i, j) = p.a[j];
    if (p.slack_col >= 0) tab.at(i, p.slack_col) = p.slack_coeff;
    tab.rhs(i) = p.rhs;
    if (p.needs_artificial) {
      int col = next_art++;
      tab.at(i, col) = 1;
      tab.set_basic(i, col);
    } else {
      tab.set_basic(i, p.slack_col);
    }
  }

  if (num_art > 0) {
    std::vector<Rat> phase1(total_cols, Rat(0));
    for (int j = art0; j < total_cols; ++j) phase1[j] = -1;
    tab.run(phase1);  // bounded below by 0, never unbounded
    Rat infeasibility(0);
    for (int i = 0; i < m; ++i)
      if (tab.basic(i) >= art0) infeasibility += tab.rhs(i);
    if (infeasibility != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Degenerate artificials: pivot them out on any real column, or drop
    // the row if it has become 0 = 0.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (tab.basic(i) < art0) {
        keep.push_back(i);
        continue;
      }
      int col = -1;
      for (int j = 0; j < art0; ++j)
        if (tab.at(i, j) != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        tab.pivot(i, col);
        keep.push_back(i);
      }
    }
    if (static_cast<int>(keep.size()) < m) {
      Tableau reduced(static_cast<int>(keep.size()), art0);
      for (int ii = 0; ii < static_cast<int>(keep.size()); ++ii) {
        for (int j = 0; j < art0; ++j) reduced.at(ii, j) = tab.at(keep[ii], j);
        reduced.rhs(ii) = tab.rhs(keep[ii]);
        reduced.set_basic(ii, tab.basic(keep[ii]));
      }
      tab = std::move(reduced);
    } else {
      Tableau trimmed(m, art0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < art0; ++j) trimmed.at(i, j) = tab.at(i, j);
        trimmed.rhs(i) = tab.rhs(i);
        trimmed.set_basic(i, tab.basic(i));
      }
      tab = std::move(trimmed);
    }
  }

  std::vector<Rat> phase2(tab.cols(), Rat(0));
  for (int j = 0; j < num_vars_; ++j) phase2[j] = objective_[j];
  bool has_objective = false;
  for (const auto& c : objective_)
    if (c != 0) {
      has_objective = true;
      break;
    }
  if (has_objective && !tab.run(phase2))
    return {LpStatus::Unbounded, Rat(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(num_vars_, Rat(0));
  for (int i = 0; i < tab.rows(); ++i)
    if (tab.basic(i) < num_vars_) sol.x[tab.basic(i)] = tab.rhs(i);
  sol.objective = 0;
  for (int j = 0; j < num_vars_; ++j)
    if (objective_[j] != 0) sol.objective += objective_[j] * sol.x[j];
  return sol;
}

}  // namespace lipfree
