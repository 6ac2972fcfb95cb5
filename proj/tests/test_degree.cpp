#include "magic4/degree.hpp"
#include "magic4/factorization.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace magic4;

TEST_CASE("compilation requires exact unitarity") {
  MatFun bad(2, 2);
  bad(0, 0) = SpherePoly::variable(1);  // not unitary
  CHECK_THROWS_AS(CompiledUnitary(bad), std::invalid_argument);
  CHECK_NOTHROW(CompiledUnitary(MatFun::identity(3)));
}

TEST_CASE("constant maps wind zero times") {
  CompiledUnitary c(MatFun::identity(2));
  auto e = degree_of_unitary(c, 8000, 1);
  CHECK(e.estimate == 0.0);
  CHECK(e.std_error == 0.0);
  REQUIRE(e.snapped.has_value());
  CHECK(*e.snapped == 0);
}

TEST_CASE("the tautological unitary generates") {
  CompiledUnitary c(w_fun());
  auto e = degree_of_unitary(c, 200000, 42);
  CHECK(std::fabs(e.estimate - 1.0) < 0.05);
  REQUIRE(e.snapped.has_value());
  CHECK(*e.snapped == 1);
}

TEST_CASE("estimates are reproducible for a fixed seed") {
  CompiledUnitary c(w_fun());
  auto a = degree_of_unitary(c, 50000, 7);
  auto b = degree_of_unitary(c, 50000, 7);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  auto other = degree_of_unitary(c, 50000, 8);
  CHECK(a.estimate != other.estimate);
}

TEST_CASE("winding is additive under direct sums") {
  CompiledUnitary cw(w_fun());
  CompiledUnitary cww(MatFun::direct_sum(w_fun(), w_fun()));
  auto e1 = degree_of_unitary(cw, 100000, 42);
  auto e2 = degree_of_unitary(cww, 100000, 42);
  CHECK(std::fabs(e2.estimate - 2 * e1.estimate) < 3 * (e2.std_error + 2 * e1.std_error) + 0.02);
  REQUIRE(e2.snapped.has_value());
  CHECK(*e2.snapped == 2);
}

TEST_CASE("snapping refuses wide intervals") {
  CompiledUnitary c(w_fun());
  // 8 samples in one cell: the 3-sigma interval spans two integers
  auto e = degree_of_unitary(c, 8, 3, 1);
  CHECK(e.std_error > 0.17);
  CHECK_FALSE(e.snapped.has_value());
  // one sample per cell: no variance information, never snap
  auto e1 = degree_of_unitary(c, 8, 3, 2);
  CHECK_FALSE(e1.snapped.has_value());
}
