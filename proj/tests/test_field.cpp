#include "magic4/field.hpp"
#include "magic4/qmatrix.hpp"
#include "magic4/pauli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace magic4;

namespace {

FieldScalar random_scalar(std::mt19937_64& g, bool nonzero = false) {
  auto small = [&g]() {
    long n = (long)(g() % 11) - 5;
    long d = 1 + (long)(g() % 4);
    return rat(n, d);
  };
  for (;;) {
    FieldScalar x(small(), small(), small(), small());
    if (!nonzero || !x.is_zero()) return x;
  }
}

std::vector<FieldScalar> generator_set() {
  return {FieldScalar::one(),
          FieldScalar::i(),
          FieldScalar::sqrt2(),
          FieldScalar::inv_sqrt2(),
          FieldScalar(rat(1, 2)),
          FieldScalar(rat(-2, 3), rat(1, 3), Rat(), Rat()),
          FieldScalar(Rat(), Rat(), rat(1), rat(-1)),
          FieldScalar(rat(1), rat(1), rat(1), rat(1))};
}

}  // namespace

TEST_CASE("field constants multiply as expected") {
  CHECK(FieldScalar::i() * FieldScalar::i() == FieldScalar(-1));
  CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt2() == FieldScalar(2));
  CHECK(FieldScalar::sqrt2() * FieldScalar::inv_sqrt2() == FieldScalar::one());
  FieldScalar z = FieldScalar::i() * FieldScalar::sqrt2();
  CHECK(z * z == FieldScalar(-2));
}

TEST_CASE("field arithmetic laws on the generator set") {
  auto gens = generator_set();
  for (const auto& x : gens)
    for (const auto& y : gens) {
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x * y == y * x);
      for (const auto& z : gens) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
}

TEST_CASE("randomized inverses and conjugation") {
  std::mt19937_64 g(2024);
  for (int it = 0; it < 300; ++it) {
    FieldScalar x = random_scalar(g, true);
    CHECK(x * x.inverse() == FieldScalar::one());
    FieldScalar y = random_scalar(g);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
  CHECK_THROWS_AS(FieldScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("numeric embedding matches the components") {
  FieldScalar x(rat(1, 2), rat(-1, 3), rat(2), rat(1, 5));
  auto c = x.to_complex();
  CHECK(c.real() == Catch::Approx(0.5 + 2 * 1.41421356237309505).epsilon(1e-12));
  CHECK(c.imag() == Catch::Approx(-1.0 / 3 + 0.2 * 1.41421356237309505).epsilon(1e-12));
}

TEST_CASE("matrix adjoint laws") {
  std::mt19937_64 g(7);
  for (int it = 0; it < 50; ++it) {
    QMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = random_scalar(g);
        b(i, j) = random_scalar(g);
      }
    CHECK(a.adjoint().adjoint() == a);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("unitarity is decided exactly") {
  for (int k = 1; k <= 4; ++k) CHECK(pauli_matrices()[k].is_unitary());
  QMatrix almost = QMatrix::identity(2);
  almost(0, 0) = FieldScalar(rat(1, 2)) + FieldScalar(rat(1, 2));  // still 1
  CHECK(almost.is_unitary());
  almost(0, 1) = FieldScalar(rat(1, 1000000));
  CHECK_FALSE(almost.is_unitary());
}

TEST_CASE("null space solves the system") {
  std::mt19937_64 g(11);
  for (int it = 0; it < 30; ++it) {
    QMatrix a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = random_scalar(g);
    QMatrix ns = a.null_space();
    CHECK((a * ns).is_zero());
    CHECK(a.rank() + ns.cols() == 5);
  }
}

TEST_CASE("field determinant on known matrices") {
  CHECK(QMatrix::identity(4).det() == FieldScalar::one());
  auto c = pauli_matrices();
  CHECK(c[2].det() == FieldScalar::one());   // diag(i,-i)
  CHECK(c[3].det() == FieldScalar::one());
  QMatrix s(2, 2);
  s(0, 1) = FieldScalar::one();
  s(1, 0) = FieldScalar::one();
  CHECK(s.det() == FieldScalar(-1));
}
