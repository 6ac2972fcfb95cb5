#pragma once

// The Klein four-group inside S4, the sign table eps(i,j), the four Pauli
// unitaries c_1..c_4, and the sixteen signed permutation unitaries U_{i,j}
// they induce on C^4, together with the exact identities tying them all
// together (product rule, 2-cocycle identity, twist rule, intertwining).

#include "magic4/int_matrix.hpp"
#include "magic4/perm.hpp"
#include "magic4/qmatrix.hpp"
#include "magic4/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace magic4 {

// omega = (1342): 1->1, 2->3, 3->4, 4->2.
inline const Perm& omega_perm() {
  static const Perm w(std::vector<int>{1, 3, 4, 2});
  return w;
}

// Defining rule: eps(i,j) = 1 iff i = 1 or j = 1 or omega(i) = j.
inline int epsilon_rule(int i, int j) {
  return (i == 1 || j == 1 || omega_perm()(i) == j) ? 1 : -1;
}

struct KleinCocycle {
  std::array<Perm, 5> t;             // 1-based: t[1]..t[4]
  std::array<std::array<int, 5>, 5> eps{};  // 1-based eps[i][j]

  KleinCocycle() {
    t[1] = Perm(std::vector<int>{1, 2, 3, 4});
    t[2] = Perm(std::vector<int>{2, 1, 4, 3});
    t[3] = Perm(std::vector<int>{3, 4, 1, 2});
    t[4] = Perm(std::vector<int>{4, 3, 2, 1});
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) eps[i][j] = epsilon_rule(i, j);
  }

  int e(int i, int j) const { return eps[i][j]; }
  int tmap(int i, int j) const { return t[i](j); }  // t_i(j)
};

inline const KleinCocycle& klein() {
  static const KleinCocycle k;
  return k;
}

inline IntMatrix epsilon_table_matrix() {
  IntMatrix m(4, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) m(i - 1, j - 1) = klein().e(i, j);
  return m;
}

inline IntMatrix epsilon_symmetrization_matrix() {
  IntMatrix m(4, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) m(i - 1, j - 1) = klein().e(i, j) * klein().e(j, i);
  return m;
}

inline std::array<QMatrix, 5> pauli_matrices() {
  std::array<QMatrix, 5> c;
  const FieldScalar im = FieldScalar::i();
  c[1] = QMatrix::identity(2);
  c[2] = QMatrix(2, 2);
  c[2](0, 0) = im;
  c[2](1, 1) = -im;
  c[3] = QMatrix::from_ints(2, 2, {0, 1, -1, 0});
  c[4] = QMatrix(2, 2);
  c[4](0, 1) = im;
  c[4](1, 0) = im;
  return c;
}

// U_{i,j} = sum_k eps(i,k) eps(k,j) e_{t_i(k), t_j(k)}, built from the rule.
inline QMatrix u_from_rule(int i, int j) {
  const KleinCocycle& kc = klein();
  QMatrix u(4, 4);
  for (int k = 1; k <= 4; ++k)
    u(kc.tmap(i, k) - 1, kc.tmap(j, k) - 1) = FieldScalar(kc.e(i, k) * kc.e(k, j));
  return u;
}

using USet = std::array<std::array<QMatrix, 5>, 5>;  // 1-based [i][j]

inline const USet& u_set() {
  static const USet us = [] {
    USet u;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) u[i][j] = u_from_rule(i, j);
    return u;
  }();
  return us;
}

// The sixteen matrices exactly as displayed, kept as an independent fixture
// against transcription drift in the rule.
inline const USet& u_display() {
  static const USet disp = [] {
    USet u;
    auto M = [](std::initializer_list<long long> v) { return QMatrix::from_ints(4, 4, v); };
    u[1][1] = M({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    u[1][2] = M({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
    u[1][3] = M({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
    u[1][4] = M({0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
    u[2][1] = M({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
    u[2][2] = M({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
    u[2][3] = M({0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
    u[2][4] = M({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    u[3][1] = M({0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0});
    u[3][2] = M({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    u[3][3] = M({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    u[3][4] = M({0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    u[4][1] = M({0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    u[4][2] = M({0, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1, 0, 0});
    u[4][3] = M({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    u[4][4] = M({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
    return u;
  }();
  return disp;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

inline CheckResult check_epsilon_table(const IntMatrix& fixture) {
  WitnessLog w;
  IntMatrix rule = epsilon_table_matrix();
  if (fixture.rows() != 4 || fixture.cols() != 4)
    return CheckResult::fail("epsilon-table", "pauli", "eps rule matches shipped table",
                             "fixture is not 4x4");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (rule(i, j) != fixture(i, j))
        w.note("eps(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") rule=" +
               rule(i, j).str() + " table=" + fixture(i, j).str());
  if (!w.clean())
    return CheckResult::fail("epsilon-table", "pauli", "eps rule matches shipped table", w.text());
  return CheckResult::ok("epsilon-table", "pauli",
                         "eps(i,j) = [i=1 or j=1 or omega(i)=j] matches the shipped 4x4 table");
}

inline CheckResult check_epsilon_symmetrization(const IntMatrix& fixture) {
  WitnessLog w;
  IntMatrix sym = epsilon_symmetrization_matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (sym(i, j) != fixture(i, j))
        w.note("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") got " +
               sym(i, j).str());
  if (!w.clean())
    return CheckResult::fail("epsilon-symmetrization", "pauli",
                             "eps(i,j)eps(j,i) matches shipped table", w.text());
  return CheckResult::ok("epsilon-symmetrization", "pauli",
                         "eps(i,j)*eps(j,i) matches the shipped 4x4 table");
}

inline CheckResult check_klein_group() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (kc.t[i] * kc.t[j] != kc.t[kc.tmap(i, j)])
        w.note("t_" + std::to_string(i) + " t_" + std::to_string(j) + " != t_{t_i(j)}");
      if (kc.tmap(i, j) != kc.tmap(j, i))
        w.note("t_i(j) != t_j(i) at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (kc.t[i] * kc.t[i] != kc.t[1]) w.note("t_" + std::to_string(i) + " not an involution");
  }
  if (!w.clean())
    return CheckResult::fail("klein-group", "pauli", "K = {t1..t4} Klein four-group", w.text());
  return CheckResult::ok("klein-group", "pauli",
                         "t_i t_j = t_{t_i(j)}, t_i(j) = t_j(i), every t_i an involution");
}

inline CheckResult check_sign_homomorphism() {
  auto s4 = Perm::symmetric_group(4);
  WitnessLog w;
  for (const Perm& a : s4)
    for (const Perm& b : s4)
      if ((a * b).sign() != a.sign() * b.sign()) w.note(a.str() + "*" + b.str());
  if (!w.clean())
    return CheckResult::fail("sign-homomorphism", "pauli", "sign multiplicative on S4", w.text());
  return CheckResult::ok("sign-homomorphism", "pauli",
                         "sign(a*b) = sign(a)sign(b) for all 576 pairs in S4 x S4");
}

inline CheckResult check_pauli_relation() {
  const KleinCocycle& kc = klein();
  auto c = pauli_matrices();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      QMatrix want = FieldScalar(kc.e(i, j)) * c[kc.tmap(i, j)];
      if (c[i] * c[j] != want)
        w.note("c_" + std::to_string(i) + " c_" + std::to_string(j));
    }
  for (int i = 1; i <= 4; ++i)
    if (!c[i].is_unitary()) w.note("c_" + std::to_string(i) + " not unitary");
  if (!w.clean())
    return CheckResult::fail("pauli-products", "pauli", "c_i c_j = eps(i,j) c_{t_i(j)}", w.text());
  return CheckResult::ok("pauli-products", "pauli",
                         "c_i c_j = eps(i,j) c_{t_i(j)} for all 16 pairs, each c_i unitary");
}

inline CheckResult check_cocycle_identity() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        if (kc.e(i, j) * kc.e(kc.tmap(i, j), k) != kc.e(i, kc.tmap(j, k)) * kc.e(j, k))
          w.note("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  if (!w.clean())
    return CheckResult::fail("cocycle-identity", "pauli",
                             "eps(i,j)eps(t_i(j),k) = eps(i,t_j(k))eps(j,k)", w.text());
  return CheckResult::ok("cocycle-identity", "pauli",
                         "eps(i,j)eps(t_i(j),k) = eps(i,t_j(k))eps(j,k) for all 64 triples");
}

inline CheckResult check_u_display() {
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const QMatrix& rule = u_set()[i][j];
      const QMatrix& disp = u_display()[i][j];
      if (rule != disp) {
        for (int r = 0; r < 4 && w.failures() < 6; ++r)
          for (int cc = 0; cc < 4; ++cc)
            if (rule(r, cc) != disp(r, cc))
              w.note("U_{" + std::to_string(i) + "," + std::to_string(j) + "} entry (" +
                     std::to_string(r + 1) + "," + std::to_string(cc + 1) + ")");
      }
      if (!rule.is_unitary())
        w.note("U_{" + std::to_string(i) + "," + std::to_string(j) + "} not unitary");
      if (rule.adjoint() != rule.transpose())
        w.note("U_{" + std::to_string(i) + "," + std::to_string(j) + "} not real");
    }
  if (!w.clean())
    return CheckResult::fail("u-display", "pauli", "formula-built U match displayed matrices",
                             w.text());
  return CheckResult::ok("u-display", "pauli",
                         "all 16 U_{i,j} from the e_{t_i(k),t_j(k)} formula equal the displayed "
                         "sign matrices and are real unitaries");
}

inline CheckResult check_u_twist() {
  const KleinCocycle& kc = klein();
  const USet& u = u_set();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          QMatrix want = FieldScalar(kc.e(i, k) * kc.e(j, l)) * u[kc.tmap(i, k)][kc.tmap(j, l)];
          if (u[i][j] * u[k][l] != want)
            w.note("(" + std::to_string(i) + "," + std::to_string(j) + ")x(" + std::to_string(k) +
                   "," + std::to_string(l) + ")");
        }
  if (!w.clean())
    return CheckResult::fail("u-twist", "pauli",
                             "U_{i,j}U_{k,l} = eps(i,k)eps(j,l)U_{t_i(k),t_j(l)}", w.text());
  return CheckResult::ok("u-twist", "pauli",
                         "U_{i,j}U_{k,l} = eps(i,k)eps(j,l)U_{t_i(k),t_j(l)} for all 256 pairs");
}

// U_{i,j}^2 = eps(i,i)eps(j,j): +1 when i,j >= 2 or i = j = 1, -1 when
// exactly one index is 1.  This sign pattern drives the fixed-point analysis.
inline CheckResult check_u_squares() {
  const USet& u = u_set();
  WitnessLog w;
  QMatrix id = QMatrix::identity(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      int want = klein().e(i, i) * klein().e(j, j);
      QMatrix sq = u[i][j] * u[i][j];
      if (sq != FieldScalar(want) * id)
        w.note("U_{" + std::to_string(i) + "," + std::to_string(j) + "}^2");
    }
  if (!w.clean())
    return CheckResult::fail("u-squares", "pauli", "U_{i,j}^2 = eps(i,i)eps(j,j) I", w.text());
  return CheckResult::ok("u-squares", "pauli",
                         "U_{i,j}^2 = +I for i,j >= 2 and for (1,1); = -I when exactly one index "
                         "is 1");
}

// For b = U_{i,j} a (a symbolic): sum_k b_k c_k = c_i (sum_k a_k c_k) c_j*.
// Comparing coefficients of a_l reduces it to 16 x 4 constant identities.
inline CheckResult check_intertwine() {
  const USet& u = u_set();
  auto c = pauli_matrices();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int l = 1; l <= 4; ++l) {
        QMatrix lhs(2, 2);
        for (int k = 1; k <= 4; ++k) {
          const FieldScalar& ukl = u[i][j](k - 1, l - 1);
          if (!ukl.is_zero()) lhs = lhs + ukl * c[k];
        }
        QMatrix rhs = c[i] * c[l] * c[j].adjoint();
        if (lhs != rhs)
          w.note("(i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(l) + ")");
      }
  if (!w.clean())
    return CheckResult::fail("u-intertwine", "pauli",
                             "sum_k (U_{i,j}a)_k c_k = c_i (sum_k a_k c_k) c_j*", w.text());
  return CheckResult::ok("u-intertwine", "pauli",
                         "sum_k (U_{i,j}a)_k c_k = c_i (sum_k a_k c_k) c_j* as an identity of "
                         "matrices with linear entries, all 16 pairs");
}

// (1/4) sum_k eps(i,k)eps(k,j)eps(t_i(k),t_k(l))eps(t_k(l),t_j(k)) = [l = 1].
inline CheckResult check_scalar_inverse_identity() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int l = 1; l <= 4; ++l) {
        int sum = 0;
        for (int k = 1; k <= 4; ++k)
          sum += kc.e(i, k) * kc.e(k, j) * kc.e(kc.tmap(i, k), kc.tmap(k, l)) *
                 kc.e(kc.tmap(k, l), kc.tmap(j, k));
        int want = (l == 1) ? 4 : 0;
        if (sum != want)
          w.note("(i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(l) + ") sum=" + std::to_string(sum));
      }
  if (!w.clean())
    return CheckResult::fail("scalar-inverse", "pauli",
                             "(1/4) sum_k eps(i,k)eps(k,j)eps(t_i(k),t_k(l))eps(t_k(l),t_j(k)) = "
                             "[l=1]",
                             w.text());
  return CheckResult::ok("scalar-inverse", "pauli",
                         "(1/4) sum_k eps(i,k)eps(k,j)eps(t_i(k),t_k(l))eps(t_k(l),t_j(k)) = [l=1] "
                         "for all 64 triples");
}

}  // namespace magic4
