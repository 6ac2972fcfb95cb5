#include "magic4/geometry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace magic4;

TEST_CASE("projective equality is an equivalence with scale invariance") {
  std::mt19937_64 g(5);
  auto rand_pt = [&g]() {
    ProjPoint p;
    bool nz = false;
    for (int k = 0; k < 4; ++k) {
      long v = (long)(g() % 9) - 4;
      p.v[k] = FieldScalar(v);
      nz = nz || v != 0;
    }
    if (!nz) p.v[0] = FieldScalar::one();
    return p;
  };
  for (int it = 0; it < 100; ++it) {
    ProjPoint a = rand_pt(), b = rand_pt();
    CHECK(projectively_equal(a, a));
    CHECK(projectively_equal(a, b) == projectively_equal(b, a));
    ProjPoint scaled = a;
    for (auto& x : scaled.v) x = FieldScalar(rat(-7, 3)) * x;
    CHECK(projectively_equal(a, scaled));
  }
  CHECK_FALSE(projectively_equal(ProjPoint::from_ints(1, 0, 0, 0),
                                 ProjPoint::from_ints(0, 1, 0, 0)));
}

TEST_CASE("fixed circles and free involutions") {
  CHECK(check_fixed_circles().pass);
  CHECK(check_no_fixed_points().pass);
  // +1 eigenspace of the diagonal involution is the first coordinate plane
  QMatrix shifted = u_set()[2][2] - QMatrix::identity(4);
  QMatrix plus = shifted.null_space();
  CHECK(plus.cols() == 2);
  for (int c = 0; c < 2; ++c) {
    CHECK(plus(2, c).is_zero());
    CHECK(plus(3, c).is_zero());
  }
  CHECK(u_set()[1][2] * u_set()[1][2] == FieldScalar(-1) * QMatrix::identity(4));
  // the displayed family [a,b,-b,a] for (2,3) is an eigenfamily
  QMatrix v(4, 1);
  v(0, 0) = FieldScalar(1);
  v(3, 0) = FieldScalar(1);
  CHECK(u_set()[2][3] * v == FieldScalar(-1) * v);
  // eigenspace dimensions always total 4
  for (int i = 2; i <= 4; ++i)
    for (int j = 2; j <= 4; ++j) {
      QMatrix up = (u_set()[i][j] - QMatrix::identity(4)).null_space();
      QMatrix dn = (u_set()[i][j] + QMatrix::identity(4)).null_space();
      CHECK(up.cols() + dn.cols() == 4);
    }
}

TEST_CASE("special orbits") {
  CHECK(check_special_points().pass);
  // e1 is fixed by the diagonal involution
  QMatrix e1(4, 1);
  e1(0, 0) = FieldScalar::one();
  CHECK(u_set()[2][2] * e1 == e1);
  // (1,1,1,1) is fixed by the (342) stabilizer
  QMatrix ones(4, 1);
  for (int k = 0; k < 4; ++k) ones(k, 0) = FieldScalar::one();
  for (auto [i, j] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{2, 4}})
    CHECK(u_set()[i][j] * ones == ones);
  // (1,1,0,0) is fixed by the (243) stabilizer
  QMatrix d(4, 1);
  d(0, 0) = d(1, 0) = FieldScalar::one();
  for (auto [i, j] : {std::pair{2, 2}, std::pair{4, 3}, std::pair{3, 4}}) {
    QMatrix img = u_set()[i][j] * d;
    CHECK((img == d || img == FieldScalar(-1) * d));
  }
}

TEST_CASE("projection equalities at the special points") {
  CHECK(check_papa().pass);
  // at e1 the group-one projection is the first matrix unit
  std::array<FieldScalar, 4> e1 = unit_point({1, 0, 0, 0});
  QMatrix val = p_set()[1][1].eval(e1);
  CHECK(val == QMatrix::unit(4, 0, 0));
  CHECK(p_set()[2][2].eval(e1) == val);
  CHECK(p_set()[3][3].eval(e1) == val);
  CHECK(p_set()[4][4].eval(e1) == val);
}

TEST_CASE("hexahedron map") {
  CHECK(check_hexahedron_vertices().pass);
  auto img = hexahedron_exact({rat(1), rat(0), rat(0), rat(0)});
  CHECK(img == std::array<Rat, 3>{rat(3), rat(0), rat(0)});
  CHECK(check_hexahedron_sampling(20000, 42).pass);
}

TEST_CASE("translate disjointness") {
  // diagonal involution flips the sign of the third coordinate
  std::array<double, 4> x{0.6, 0.6, 0.5, 0.1};
  double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  for (auto& v : x) v /= n;
  std::array<double, 4> y{x[0], x[1], -x[2], -x[3]};  // U_{2,2} x
  CHECK_FALSE(detail::in_open_v(y));
  CHECK_FALSE(detail::in_open_v(detail::negate(y)));
  CHECK(check_v_disjointness(20000, 42).pass);
}

TEST_CASE("unit point normalization stays exact") {
  auto p = unit_point({1, 1, 1, 1});
  FieldScalar norm;
  for (const auto& c : p) norm += c * c;
  CHECK(norm == FieldScalar::one());
  auto q = unit_point({1, -1, 0, 0});
  norm = FieldScalar::zero();
  for (const auto& c : q) norm += c * c;
  CHECK(norm == FieldScalar::one());
  CHECK_THROWS_AS(unit_point({1, 1, 1, 0}), std::invalid_argument);
}
