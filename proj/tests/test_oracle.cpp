#include <doctest.h>

#include "icl/composite.hpp"
#include "icl/oracle.hpp"
#include "icl/outer.hpp"

using namespace icl;

TEST_CASE("scalar linear search on tiny instances") {
  const auto x = builtin_instance("xor2");
  const auto r = oracle::best_scalar_linear_rate(x);
  CHECK(r.rate == 1);
  CHECK(r.witness.channel_bits == 1);
  CHECK(r.witness.global_matrix().row(0).to_string() == "11");
  CHECK(check_scheme(x, r.witness, demands_only_choice(x)).pass());
  CHECK(max_symmetric_rate(x).symmetric_rate == 1);
  CHECK(acyclic_symmetric_bound(x) == 1);

  const auto n2 = oracle::best_scalar_linear_rate(builtin_instance("no-side-info(2)"));
  CHECK(n2.rate == make_rational(1, 2));
  CHECK(n2.witness.channel_bits == 2);

  IndexCodingInstance single;
  single.num_messages = 1;
  single.users = {{{1}, {}}};
  CHECK(oracle::best_scalar_linear_rate(single).rate == 1);

  CHECK_THROWS_AS(oracle::best_scalar_linear_rate(builtin_instance("no-side-info(5)")), oracle::BudgetExceeded);
  oracle::SearchBudget tight;
  tight.max_candidates = 4;
  CHECK_THROWS_AS(oracle::best_scalar_linear_rate(builtin_instance("no-side-info(3)"), tight), oracle::BudgetExceeded);
}

TEST_CASE("every oracle witness is certified") {
  IndexCodingInstance cyc;
  cyc.num_messages = 3;
  cyc.users = {{{1}, {2}}, {{2}, {3}}, {{3}, {1}}};
  for (const auto& inst : {builtin_instance("xor2"), builtin_instance("no-side-info(3)"), cyc}) {
    const auto r = oracle::best_scalar_linear_rate(inst);
    CHECK(zero_error_decode_check(inst, r.witness, DecodeMode::Algebraic).all_ok());
    CHECK(zero_error_decode_check(inst, r.witness, DecodeMode::Enumerate).all_ok());
    CHECK(r.rate <= acyclic_symmetric_bound(inst));
  }
}

TEST_CASE("vertex enumeration") {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.set_objective(x, 1);
  lp.add_constraint({{x, 1}}, Relation::LessEqual, 1);
  const auto v = oracle::enumerate_lp_vertices(lp);
  CHECK(v == std::vector<std::vector<Rational>>{{0}, {1}});

  LinearProgram bad;
  const int y = bad.add_variable("y");
  bad.add_constraint({{y, 1}}, Relation::LessEqual, -1);
  CHECK(oracle::enumerate_lp_vertices(bad).empty());

  const auto inst = builtin_instance("xor2");
  const auto comp = build_composite_lp(inst, demands_only_choice(inst));
  Rational best = 0;
  for (const auto& p : oracle::enumerate_lp_vertices(comp)) best = std::max(best, comp.evaluate_objective(p));
  CHECK(best == 1);
  CHECK(solve_lp(comp).optimum == 1);

  LinearProgram big;
  for (int i = 0; i < 7; ++i) big.add_variable("v" + std::to_string(i));
  CHECK_THROWS_AS(oracle::enumerate_lp_vertices(big), oracle::TooLarge);
}
