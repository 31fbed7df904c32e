#include <doctest.h>

#include <random>

#include "icl/gf2.hpp"

using namespace icl;

TEST_CASE("bit vector basics") {
  BitVector v(70);
  CHECK_FALSE(v.any());
  v.set(0);
  v.set(69);
  v.flip(3);
  CHECK(v.count() == 3);
  CHECK(v.first_set() == 0);
  CHECK(v.get(69));
  v.set(0, false);
  CHECK(v.first_set() == 3);

  const BitVector s = v.slice(3, 67);
  CHECK(s.size() == 67);
  CHECK(s.get(0));
  CHECK(s.get(66));
  CHECK(s.count() == 2);

  BitVector w = BitVector::from_string("1011");
  CHECK(w.to_string() == "1011");
  CHECK(w.to_hex() == "b");
  CHECK(BitVector::from_string("10110001").to_hex() == "b1");
  CHECK(BitVector::from_string("101100011").to_hex() == "b18");
  CHECK(w.dot(BitVector::from_string("1000")));
  CHECK_FALSE(w.dot(BitVector::from_string("1001")));
  CHECK_FALSE(w.dot(BitVector::from_string("1010")));

  BitVector big(10);
  big.xor_prefix(BitVector::from_string("111"));
  CHECK(big.to_string() == "1110000000");
  CHECK_THROWS(v.slice(60, 20));
}

TEST_CASE("resize clears bits past the new end") {
  BitVector v(64);
  v.words()[0] = ~std::uint64_t{0};
  v.resize(10);
  CHECK(v.count() == 10);
  v.resize(64);
  CHECK(v.count() == 10);
  BitVector same(5);
  same.words()[0] = ~std::uint64_t{0};
  same.resize(5);
  CHECK(same == BitVector::from_string("11111"));
}

TEST_CASE("rank examples") {
  CHECK(rank_gf2(Gf2Matrix::identity(3)) == 3);
  CHECK(rank_gf2(Gf2Matrix::from_rows({"11", "11"})) == 1);
  CHECK(rank_gf2(Gf2Matrix::from_rows({"101100", "010110", "110001"})) == 3);
  CHECK(rank_gf2(Gf2Matrix::from_rows({"110", "011", "101"})) == 2);
  CHECK(rank_gf2(Gf2Matrix(0, 4)) == 0);
  CHECK(rank_gf2(Gf2Matrix(3, 4)) == 0);
}

TEST_CASE("rank plus nullity equals width, and the null space is annihilated") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 70;
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 3 == 0) m.set(r, c);
    const auto null = m.nullspace();
    CHECK(m.rank() + null.size() == cols);
    for (const auto& x : null) CHECK_FALSE(m.multiply(x).any());
    Gf2Matrix basis(0, cols);
    for (const auto& x : null) basis.append_row(x);
    CHECK(basis.rank() == null.size());
  }
}

TEST_CASE("column selection and nonzero columns") {
  const auto m = Gf2Matrix::from_rows({"1010", "0010"});
  CHECK(m.nonzero_columns() == std::vector<std::size_t>{0, 2});
  const auto sub = m.select_columns({2, 3});
  CHECK(sub.cols() == 2);
  CHECK(sub.row(0).to_string() == "10");
  CHECK(sub.row(1).to_string() == "10");
  CHECK(sub.rank() == 1);
}

TEST_CASE("linear systems with bit-vector right-hand sides") {
  // x0 ^ x1 = a, x1 = b, x2 free
  auto coef = Gf2Matrix::from_rows({"110", "010"});
  auto sol = solve_gf2_system(coef, {BitVector::from_string("1100"), BitVector::from_string("1010")});
  CHECK(sol.consistent);
  CHECK(sol.determined == std::vector<bool>{true, true, false});
  CHECK(sol.values[0].to_string() == "0110");
  CHECK(sol.values[1].to_string() == "1010");

  auto bad = solve_gf2_system(Gf2Matrix::from_rows({"1", "1"}), {BitVector::from_string("0"), BitVector::from_string("1")});
  CHECK_FALSE(bad.consistent);

  // x0 ^ x1 alone does not determine either variable.
  auto under = solve_gf2_system(Gf2Matrix::from_rows({"11"}), {BitVector::from_string("1")});
  CHECK(under.determined == std::vector<bool>{false, false});
}
