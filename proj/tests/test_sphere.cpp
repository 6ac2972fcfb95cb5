#include "magic4/mat_fun.hpp"
#include "magic4/sphere_poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace magic4;

namespace {

SpherePoly random_poly(std::mt19937_64& g, int terms = 5, int maxdeg = 2) {
  SpherePoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m{0, 0, 0, 0};
    int deg = (int)(g() % (maxdeg + 1));
    for (int d = 0; d < deg; ++d) m[g() % 4]++;
    long num = (long)(g() % 9) - 4;
    p += SpherePoly::monomial(m, FieldScalar(rat(num, 1 + (long)(g() % 3))));
  }
  return p;
}

// exact rational points of the unit sphere
const std::array<std::array<Rat, 4>, 4> kRationalPoints = {{
    {rat(3, 5), rat(4, 5), rat(0), rat(0)},
    {rat(1, 3), rat(2, 3), rat(2, 3), rat(0)},
    {rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2)},
    {rat(2, 3), rat(0), rat(1, 3), rat(-2, 3)},
}};

std::array<FieldScalar, 4> lift(const std::array<Rat, 4>& p) {
  return {FieldScalar(p[0]), FieldScalar(p[1]), FieldScalar(p[2]), FieldScalar(p[3])};
}

}  // namespace

TEST_CASE("normal form eliminates the fourth square") {
  Monomial a4sq{0, 0, 0, 2};
  SpherePoly p = SpherePoly::monomial(a4sq, FieldScalar::one());
  SpherePoly want = SpherePoly::one();
  for (int k = 1; k <= 3; ++k) want -= f_poly(k, k);
  CHECK(p == want);
  // the sphere relation itself collapses to 1
  SpherePoly s;
  for (int k = 1; k <= 4; ++k) s += f_poly(k, k);
  CHECK(s == SpherePoly::one());
}

TEST_CASE("normal form is canonical under addition and sphere multiples") {
  std::mt19937_64 g(99);
  SpherePoly sphere;
  for (int k = 1; k <= 4; ++k) sphere += f_poly(k, k);
  for (int it = 0; it < 100; ++it) {
    SpherePoly p = random_poly(g), q = random_poly(g);
    CHECK((p + q) - q == p);
    CHECK(sphere * p == p);
  }
}

TEST_CASE("coordinate function relations") {
  CHECK(f_poly(1, 2) == f_poly(2, 1));
  CHECK(f_poly(1, 2) * f_poly(3, 4) - f_poly(1, 3) * f_poly(2, 4) == SpherePoly());
  for (auto& pt : kRationalPoints) {
    auto a = lift(pt);
    CHECK(f_poly(2, 3).eval(a) == a[1] * a[2]);
  }
}

TEST_CASE("parity predicates") {
  CHECK(f_poly(1, 1).descends_to_rp3());
  CHECK(SpherePoly::variable(2).all_odd_degree());
  CHECK_FALSE((SpherePoly::variable(1) + f_poly(1, 2)).descends_to_rp3());
}

TEST_CASE("partial derivatives") {
  SpherePoly p = f_poly(1, 4);  // a1 a4
  CHECK(p.partial(1) == SpherePoly::variable(4));
  CHECK(p.partial(4) == SpherePoly::variable(1));
  CHECK(p.partial(2) == SpherePoly());
  Monomial sq{2, 0, 0, 0};
  CHECK(SpherePoly::monomial(sq, FieldScalar::one()).partial(1) ==
        FieldScalar(2) * SpherePoly::variable(1));
}

TEST_CASE("evaluation is a homomorphism at exact sphere points") {
  std::mt19937_64 g(123);
  for (int it = 0; it < 40; ++it) {
    MatFun f(2, 2), h(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        f(i, j) = random_poly(g, 3);
        h(i, j) = random_poly(g, 3);
      }
    for (const auto& pt : kRationalPoints) {
      auto a = lift(pt);
      CHECK((f * h).eval(a) == f.eval(a) * h.eval(a));
      CHECK((f + h).eval(a) == f.eval(a) + h.eval(a));
      CHECK(f.adjoint().eval(a) == f.eval(a).adjoint());
    }
  }
}

TEST_CASE("linear substitution composes") {
  std::mt19937_64 g(321);
  QMatrix swap12 = QMatrix::from_ints(4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  for (int it = 0; it < 20; ++it) {
    MatFun f(2, 2);
    f(0, 0) = random_poly(g, 4);
    f(1, 1) = random_poly(g, 4);
    MatFun once = f.substitute_linear(swap12);
    CHECK(once.substitute_linear(swap12) == f);
  }
}
