#include "magic4/ktheory.hpp"
#include "magic4/pauli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace magic4;

#ifndef MAGIC4_FIXTURES_DIR
#define MAGIC4_FIXTURES_DIR "fixtures"
#endif

TEST_CASE("klein group structure") {
  CHECK(check_klein_group().pass);
  CHECK(check_sign_homomorphism().pass);
  const KleinCocycle& kc = klein();
  CHECK(kc.t[2] * kc.t[3] == kc.t[4]);
  CHECK(kc.tmap(2, 3) == 4);
  CHECK(omega_perm()(2) == 3);
  CHECK(omega_perm().sign() == 1);  // a 3-cycle
}

TEST_CASE("epsilon table and its symmetrization match the fixtures") {
  KTables t = load_ktables(MAGIC4_FIXTURES_DIR);
  CHECK(check_epsilon_table(t.t1).pass);
  CHECK(check_epsilon_symmetrization(t.t2).pass);
  CHECK(klein().e(2, 3) == 1);
  CHECK(klein().e(3, 2) == -1);
  for (int j = 1; j <= 4; ++j) {
    CHECK(klein().e(1, j) == 1);
    CHECK(klein().e(1, j) * klein().e(j, 1) == 1);
  }
  CHECK(klein().e(2, 2) * klein().e(2, 2) == 1);
  CHECK(klein().e(2, 3) * klein().e(3, 2) == -1);
}

TEST_CASE("pauli product rule") {
  CHECK(check_pauli_relation().pass);
  auto c = pauli_matrices();
  CHECK(c[2] * c[3] == c[4]);                       // eps(2,3) = +1
  CHECK(c[3] * c[2] == FieldScalar(-1) * c[4]);     // eps(3,2) = -1
  for (int j = 1; j <= 4; ++j) CHECK(c[1] * c[j] == c[j]);
}

TEST_CASE("cocycle identity, including one hand-evaluated triple") {
  CHECK(check_cocycle_identity().pass);
  const KleinCocycle& kc = klein();
  // (i,j,k) = (2,3,4): both sides evaluate to -1 from the table
  int lhs = kc.e(2, 3) * kc.e(kc.tmap(2, 3), 4);
  int rhs = kc.e(2, kc.tmap(3, 4)) * kc.e(3, 4);
  CHECK(lhs == -1);
  CHECK(rhs == -1);
}

TEST_CASE("U displays and twist relation") {
  CHECK(check_u_display().pass);
  CHECK(check_u_twist().pass);
  CHECK(check_u_squares().pass);
  const USet& u = u_set();
  CHECK(u[1][1] == QMatrix::identity(4));
  CHECK(u[2][2] == QMatrix::from_ints(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}));
  // row 1 of U_{3,4} is (0,-1,0,0)
  CHECK(u[3][4](0, 0) == FieldScalar(0));
  CHECK(u[3][4](0, 1) == FieldScalar(-1));
  CHECK(u[3][4](0, 2) == FieldScalar(0));
  CHECK(u[3][4](0, 3) == FieldScalar(0));
  CHECK(u[2][2] * u[2][2] == QMatrix::identity(4));
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(u[1][1] * u[k][l] == u[k][l]);
}

TEST_CASE("intertwining against the pauli side") {
  CHECK(check_intertwine().pass);
}

TEST_CASE("scalar inverse identity") {
  CHECK(check_scalar_inverse_identity().pass);
  const KleinCocycle& kc = klein();
  auto value = [&kc](int i, int j, int l) {
    int sum = 0;
    for (int k = 1; k <= 4; ++k)
      sum += kc.e(i, k) * kc.e(k, j) * kc.e(kc.tmap(i, k), kc.tmap(k, l)) *
             kc.e(kc.tmap(k, l), kc.tmap(j, k));
    return sum;
  };
  CHECK(value(1, 1, 1) == 4);
  CHECK(value(1, 1, 2) == 0);
}

TEST_CASE("orientation determinants") {
  CHECK(check_orientation_dets().pass);
}
