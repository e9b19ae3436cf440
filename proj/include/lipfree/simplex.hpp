#pragma once
// Dense two-phase tableau simplex over exact rationals. Entering and
// leaving variables follow Bland's rule, so every solve terminates.

#include <vector>

#include "lipfree/rational.hpp"

namespace lipfree {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> x;  // structural variables, empty unless Optimal
};

// maximize c.x subject to the added rows, x >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  void set_objective(std::vector<Rat> c);
  void add_le(std::vector<Rat> row, Rat rhs);
  void add_eq(std::vector<Rat> row, Rat rhs);

  LpSolution solve() const;

 private:
  struct Row {
    std::vector<Rat> a;
    Rat rhs;
    bool equality;
  };

  int num_vars_;
  std::vector<Rat> objective_;
  std::vector<Row> rows_;
};

}  // namespace lipfree
