#include "magic4/csv.hpp"
#include "magic4/smith.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

using namespace magic4;

namespace {

IntMatrix random_matrix(std::mt19937_64& g, int max_dim = 6, int lo = -5, int hi = 5) {
  int r = 1 + (int)(g() % max_dim), c = 1 + (int)(g() % max_dim);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (long)(g() % (hi - lo + 1)) + lo;
  return m;
}

bool is_diag_of(const IntMatrix& m, const std::vector<Int>& d) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Int want = (i == j && i < (int)d.size()) ? d[i] : Int(0);
      if (m(i, j) != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  SECTION("identity") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diag == std::vector<Int>{1, 1, 1});
  }
  SECTION("zero") {
    auto s = smith_normal_form(IntMatrix::zero(2, 2));
    CHECK(s.diag.empty());
  }
  SECTION("2x2 with nontrivial factors") {
    IntMatrix a = IntMatrix::from_ints(2, 2, {2, 4, 6, 8});
    // frozen from the minor-gcd oracle: gcd of entries 2, |det| 8 -> (2, 4)
    CHECK(oracle::invariant_factors(a) == std::vector<Int>{2, 4});
    auto s = smith_normal_form(a);
    CHECK(s.diag == std::vector<Int>{2, 4});
    CHECK(is_diag_of(s.left * a * s.right, s.diag));
  }
}

TEST_CASE("smith normal form: randomized against the minor-gcd oracle") {
  std::mt19937_64 g(42);
  for (int it = 0; it < 200; ++it) {
    IntMatrix a = random_matrix(g);
    SmithForm s = smith_normal_form(a);
    INFO("matrix:\n" << a.str());
    CHECK(is_diag_of(s.left * a * s.right, s.diag));
    CHECK(abs_int(s.left.det()) == 1);
    CHECK(abs_int(s.right.det()) == 1);
    for (size_t k = 0; k + 1 < s.diag.size(); ++k) {
      CHECK(s.diag[k] > 0);
      CHECK(s.diag[k + 1] % s.diag[k] == 0);
    }
    CHECK(s.rank() == oracle::rational_rank(a));
    CHECK(s.diag == oracle::invariant_factors(a));
  }
}

TEST_CASE("kernel bases are correct and saturated") {
  SECTION("identity has no kernel") {
    CHECK(kernel_basis(IntMatrix::identity(4)).cols() == 0);
  }
  SECTION("zero map has full kernel") {
    IntMatrix z(1, 2);
    IntMatrix k = kernel_basis(z);
    CHECK(k.cols() == 2);
    CHECK(integer_rank(k) == 2);
  }
  std::mt19937_64 g(43);
  for (int it = 0; it < 100; ++it) {
    IntMatrix a = random_matrix(g);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == a.cols() - integer_rank(a));
    if (k.cols() > 0) {
      auto fac = smith_normal_form(k).diag;
      for (const Int& f : fac) CHECK(f == 1);  // saturated
    }
  }
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix::identity(5)) == CokernelInvariants{0, {}});
  CHECK(cokernel_invariants(IntMatrix::from_ints(1, 1, {2})) == CokernelInvariants{0, {2}});
  std::mt19937_64 g(44);
  for (int it = 0; it < 60; ++it) {
    IntMatrix a = random_matrix(g);
    auto c = cokernel_invariants(a);
    CHECK(c.free_rank == a.rows() - integer_rank(a));
    for (const Int& t : c.torsion) CHECK(t > 1);
  }
}

TEST_CASE("lattice equality via hermite forms") {
  IntMatrix g1 = IntMatrix::from_ints(2, 2, {1, 1, 0, 1});
  IntMatrix g2 = IntMatrix::identity(2);
  CHECK(lattice_equal(Lattice(2, g1), Lattice(2, g2)));
  IntMatrix g3 = IntMatrix::from_ints(2, 1, {2, 0});
  IntMatrix g4 = IntMatrix::from_ints(2, 1, {1, 0});
  CHECK_FALSE(lattice_equal(Lattice(2, g3), Lattice(2, g4)));
  CHECK_THROWS_AS(lattice_equal(Lattice(2, g3), Lattice(3, IntMatrix::identity(3))),
                  std::invalid_argument);

  // invariance under recombination of generators
  std::mt19937_64 g(45);
  for (int it = 0; it < 60; ++it) {
    IntMatrix a = random_matrix(g, 4, -3, 3);
    IntMatrix b = a;
    if (b.cols() >= 2) {
      for (int i = 0; i < b.rows(); ++i) b(i, 0) += 3 * b(i, 1) - 2 * b(i, b.cols() - 1);
    }
    CHECK(lattice_equal(Lattice(a.rows(), a), Lattice(b.rows(), b)));
  }
}

TEST_CASE("integer solve is consistent") {
  std::mt19937_64 g(46);
  for (int it = 0; it < 60; ++it) {
    IntMatrix a = random_matrix(g, 5, -4, 4);
    std::vector<Int> x(a.cols());
    for (auto& v : x) v = (long)(g() % 7) - 3;
    std::vector<Int> b = a.apply(x);
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
}

TEST_CASE("csv round trip") {
  std::mt19937_64 g(47);
  IntMatrix m = random_matrix(g, 6, -100000, 100000);
  std::string path = "magic4_csv_roundtrip.tmp";
  write_csv_matrix(path, m);
  IntMatrix back = read_csv_matrix(path);
  CHECK(back == m);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_csv_matrix("definitely/not/there.csv"), ConfigError);
}
