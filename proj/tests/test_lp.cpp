#include <doctest.h>

#include "icl/lp.hpp"
#include "icl/oracle.hpp"
#include "random_lp.hpp"

using namespace icl;

namespace {

LinearProgram single(const Rational& cap) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.set_objective(x, 1);
  lp.add_constraint({{x, 1}}, Relation::LessEqual, cap);
  return lp;
}

}  // namespace

TEST_CASE("textbook programs") {
  auto s = solve_lp(single(make_rational(3, 2)));
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.optimum == make_rational(3, 2));

  LinearProgram sum;
  const int x = sum.add_variable("x");
  const int y = sum.add_variable("y");
  sum.set_objective(x, 1);
  sum.set_objective(y, 1);
  sum.add_constraint({{x, 1}, {y, 1}}, Relation::LessEqual, 1);
  sum.add_constraint({{x, 1}}, Relation::LessEqual, 1);
  sum.add_constraint({{y, 1}}, Relation::LessEqual, 1);
  s = solve_lp(sum);
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.optimum == 1);
  CHECK(sum.is_feasible(s.assignment));

  LinearProgram ray;
  ray.set_objective(ray.add_variable("x"), 1);
  CHECK(solve_lp(ray).status == LpStatus::Unbounded);
  CHECK(solve_lp_exact(ray).status == LpStatus::Unbounded);

  LinearProgram bad = single(-1);
  CHECK(solve_lp(bad).status == LpStatus::Infeasible);
  CHECK(solve_lp_exact(bad).status == LpStatus::Infeasible);
}

TEST_CASE("equalities, negative right-hand sides and degeneracy") {
  // max 2x + 3y  s.t. x + y = 4, x - y <= 2, -x <= -1, y <= 3
  LinearProgram lp;
  const int x = lp.add_variable("x");
  const int y = lp.add_variable("y");
  lp.set_objective(x, 2);
  lp.set_objective(y, 3);
  lp.add_constraint({{x, 1}, {y, 1}}, Relation::Equal, 4);
  lp.add_constraint({{x, 1}, {y, -1}}, Relation::LessEqual, 2);
  lp.add_constraint({{x, -1}}, Relation::LessEqual, -1);
  lp.add_constraint({{y, 1}}, Relation::LessEqual, 3);
  for (const auto& s : {solve_lp(lp), solve_lp_exact(lp)}) {
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.optimum == 11);
    CHECK(s.assignment[0] == 1);
    CHECK(s.assignment[1] == 3);
  }

  // Redundant duplicated equality rows must not break phase one.
  LinearProgram dup;
  const int a = dup.add_variable("a");
  dup.set_objective(a, 1);
  dup.add_constraint({{a, 2}}, Relation::Equal, 1);
  dup.add_constraint({{a, 4}}, Relation::Equal, 2);
  CHECK(solve_lp_exact(dup).optimum == make_rational(1, 2));
  CHECK(solve_lp(dup).optimum == make_rational(1, 2));
}

TEST_CASE("declared variables only") {
  LinearProgram lp;
  lp.add_variable("x");
  CHECK_THROWS_AS(lp.add_constraint({{3, 1}}, Relation::LessEqual, 1), std::invalid_argument);
  CHECK(lp.find_variable("x") == 0);
  CHECK(lp.find_variable("y") == -1);
}

TEST_CASE("solver optimum equals the best enumerated vertex on random programs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    CAPTURE(seed);
    const LinearProgram lp = random_small_lp(seed);
    const auto vertices = oracle::enumerate_lp_vertices(lp);
    const auto fast = solve_lp(lp);
    const auto exact = solve_lp_exact(lp);
    CHECK(fast.status == exact.status);
    if (vertices.empty()) {
      CHECK(exact.status == LpStatus::Infeasible);
      continue;
    }
    Rational best = lp.evaluate_objective(vertices.front());
    for (const auto& v : vertices) best = std::max(best, lp.evaluate_objective(v));
    REQUIRE(exact.status == LpStatus::Optimal);
    CHECK(exact.optimum == best);
    CHECK(fast.optimum == best);
    CHECK(lp.is_feasible(exact.assignment));
    CHECK(lp.is_feasible(fast.assignment));
  }
}

TEST_CASE("solving is deterministic") {
  const LinearProgram lp = random_small_lp(42);
  const auto a = solve_lp(lp);
  const auto b = solve_lp(lp);
  CHECK(a.assignment == b.assignment);
}
