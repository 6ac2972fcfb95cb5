#include "magic4/commutant.hpp"
#include "magic4/factorization.hpp"
#include "magic4/rp3.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace magic4;

TEST_CASE("coordinate relations on the sphere") {
  CHECK(check_f_relations().pass);
}

TEST_CASE("projection displays match the conjugation construction") {
  CHECK(check_p_display().pass);
  const PSet& p = p_set();
  CHECK(p[1][1](0, 0) == f_poly(1, 1));
  CHECK(p[1][2](0, 0) == f_poly(2, 2));
  CHECK(p[4][1](0, 1) == f_poly(4, 3));
}

TEST_CASE("projection identities") {
  CHECK(check_p_projections().pass);
  CHECK(check_p_conjugation().pass);
  CHECK(check_p_sums().pass);
  const PSet& p = p_set();
  MatFun row = p[1][1] + p[1][2] + p[1][3] + p[1][4];
  CHECK(row.is_identity());
  CHECK((p[1][1] * p[1][1] - p[1][1]).is_zero());
  // conjugating by U_{1,1} is trivial
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(beta_apply(1, 1, p[k][l]) == p[k][l]);
}

TEST_CASE("bridge identity") {
  CHECK(check_rf_bridge().pass);
}

TEST_CASE("matrix-unit and function images of the inverse map") {
  CHECK(check_phi_matrix_units().pass);
  CHECK(check_phi_functions().pass);
  // E_{1,1} image: (1/4)(U11+U22+U33+U44) = e11
  QMatrix acc(4, 4);
  for (int k = 1; k <= 4; ++k) acc = acc + u_set()[k][k];
  CHECK(FieldScalar(rat(1, 4)) * acc == QMatrix::unit(4, 0, 0));
}

TEST_CASE("the action fixes projections and scales the unitaries") {
  CHECK(check_beta_fixes_p().pass);
  CHECK(check_beta_scales_u().pass);
  CHECK(check_beta_action_composition().pass);
  CHECK(beta_apply(2, 2, p_set()[1][1]) == p_set()[1][1]);
  // eps(2,3)eps(3,2) squared is +1, so U_{3,3} is fixed by beta_{2,2}
  CHECK(beta_apply(2, 2, MatFun::from_constant(u_set()[3][3])) ==
        MatFun::from_constant(u_set()[3][3]));
}

TEST_CASE("commutants") {
  CHECK(check_commutant_pairs().pass);
  CHECK(check_commutant_triples().pass);
  CHECK(commutant_basis({QMatrix::identity(4)}).cols() == 16);
  CHECK(commutant_basis({u_set()[2][2]}).cols() == 8);
  QMatrix pair_basis = commutant_basis({u_set()[2][2], u_set()[3][3]});
  CHECK(pair_basis.cols() == 4);
  for (int c = 0; c < pair_basis.cols(); ++c) {
    QMatrix m = unvec(pair_basis, c);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(m(i, j).is_zero());  // the diagonal algebra
  }
}

TEST_CASE("xi and the two embeddings") {
  XiIotaResult r = check_xi_iota();
  CHECK(r.check.pass);
  CHECK(r.corrected_reading);
  // unit examples
  QMatrix id2 = QMatrix::identity(2);
  CHECK(xi_row(id2) * iota(id2) == xi_row(id2));
  QMatrix e11 = QMatrix::unit(2, 0, 0), e12 = QMatrix::unit(2, 0, 1);
  CHECK(xi_row(e11) * iota(e12) == xi_row(e11 * e12));
  CHECK(iota_prime(e11) * xi_row(e12).transpose() == xi_row(e11 * e12).transpose());
  // the literal lower-right block fails the first identity
  QMatrix lit = place_2x2(e12, iota_literal_placement());
  CHECK(xi_row(QMatrix::unit(2, 1, 0)) * lit != xi_row(QMatrix::unit(2, 1, 0) * e12));
}

TEST_CASE("block factorization of the defining unitary") {
  CHECK(check_factorization_unitaries().pass);
  CHECK(check_u_bar_unitary().pass);
  CHECK(check_factorization_identity().pass);
  CHECK(big_w().is_unitary());
  MatFun ub = u_bar();
  CHECK((ub * ub.adjoint()).is_identity());
}

TEST_CASE("parity split: projections even, the tautological unitary odd") {
  MatFun w = w_fun();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(w(i, j).all_odd_degree());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(p_set()[i][j](r, c).descends_to_rp3());
}
