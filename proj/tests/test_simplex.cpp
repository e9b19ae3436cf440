#include <doctest.h>

#include "lipfree/simplex.hpp"

using namespace lipfree;

namespace {

std::vector<Rat> rats(std::vector<long long> v) {
  std::vector<Rat> out;
  for (long long x : v) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("textbook maximum") {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6
  LinearProgram lp(2);
  lp.set_objective(rats({3, 2}));
  lp.add_le(rats({1, 1}), Rat(4));
  lp.add_le(rats({1, 3}), Rat(6));
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rat(12));
  CHECK(sol.x == std::vector<Rat>{Rat(4), Rat(0)});
}

TEST_CASE("unbounded and infeasible programs are detected") {
  {
    LinearProgram lp(1);
    lp.set_objective(rats({1}));
    CHECK(lp.solve().status == LpStatus::Unbounded);
  }
  {
    LinearProgram lp(1);
    lp.set_objective(rats({1}));
    lp.add_le(rats({1}), Rat(-1));  // x <= -1 with x >= 0
    CHECK(lp.solve().status == LpStatus::Infeasible);
  }
  {
    LinearProgram lp(2);
    lp.set_objective(rats({0, 0}));
    lp.add_eq(rats({1, 1}), Rat(2));
    lp.add_eq(rats({1, 1}), Rat(3));  // contradicts the first row
    CHECK(lp.solve().status == LpStatus::Infeasible);
  }
}

TEST_CASE("equalities and negative right-hand sides") {
  // max x + y, x + y = 3, x <= 2
  LinearProgram lp(2);
  lp.set_objective(rats({1, 1}));
  lp.add_eq(rats({1, 1}), Rat(3));
  lp.add_le(rats({1, 0}), Rat(2));
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rat(3));
  CHECK(sol.x[0] + sol.x[1] == Rat(3));
  CHECK(sol.x[0] <= Rat(2));

  // -x - y <= -2 means x + y >= 2; minimizing x (max -x) gives x = 0
  LinearProgram ge(2);
  ge.set_objective(rats({-1, 0}));
  ge.add_le(rats({-1, -1}), Rat(-2));
  LpSolution sol2 = ge.solve();
  REQUIRE(sol2.status == LpStatus::Optimal);
  CHECK(sol2.objective == Rat(0));
  CHECK(sol2.x[0] == Rat(0));
  CHECK(sol2.x[1] >= Rat(2));
}

TEST_CASE("Bland's rule survives the classic cycling program") {
  // Beale's example; naive pivoting cycles forever on it.
  LinearProgram lp(4);
  lp.set_objective({Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)});
  lp.add_le({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, Rat(0));
  lp.add_le({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, Rat(0));
  lp.add_le({Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(1));
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rat(1, 20));
  CHECK(sol.x == std::vector<Rat>{Rat(1, 25), Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("feasibility-only programs skip the optimization phase") {
  LinearProgram lp(2);
  lp.add_eq(rats({1, 1}), Rat(2));
  lp.add_eq(rats({1, -1}), Rat(0));
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rat(0));
  CHECK(sol.x == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("redundant rows do not break phase one") {
  LinearProgram lp(2);
  lp.set_objective(rats({1, 0}));
  lp.add_eq(rats({1, 1}), Rat(2));
  lp.add_eq(rats({2, 2}), Rat(4));  // same hyperplane twice
  lp.add_eq(rats({0, 0}), Rat(0));  // vacuous
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rat(2));
  CHECK(sol.x == std::vector<Rat>{Rat(2), Rat(0)});
}

TEST_CASE("solutions satisfy their constraints") {
  LinearProgram lp(3);
  lp.set_objective({Rat(1), Rat(2), Rat(-1)});
  lp.add_le({Rat(1), Rat(1), Rat(1)}, Rat(10));
  lp.add_le({Rat(2), Rat(1), Rat(0)}, Rat(8));
  lp.add_eq({Rat(0), Rat(1), Rat(1)}, Rat(5));
  LpSolution sol = lp.solve();
  REQUIRE(sol.status == LpStatus::Optimal);
  Rat obj(0), r1(0), r2(0), r3(0);
  const std::vector<Rat> c = {Rat(1), Rat(2), Rat(-1)};
  for (int j = 0; j < 3; ++j) {
    CHECK(sol.x[j] >= Rat(0));
    obj += c[j] * sol.x[j];
  }
  r1 = sol.x[0] + sol.x[1] + sol.x[2];
  r2 = 2 * sol.x[0] + sol.x[1];
  r3 = sol.x[1] + sol.x[2];
  CHECK(obj == sol.objective);
  CHECK(r1 <= Rat(10));
  CHECK(r2 <= Rat(8));
  CHECK(r3 == Rat(5));
  CHECK(sol.objective == Rat(23, 2));  // x = 3/2, y = 5, z = 0
}
