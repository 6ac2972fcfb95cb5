#pragma once

// The matrix-function model on RP^3: coordinate functions f_{i,j}, the
// projection family P_{i,j} = U_{i,j} P_{1,1} U_{i,j}*, the K x K action
// beta, and the finite identities that make the two inverse homomorphisms
// between the abstract algebra and M_4(C(RP^3)) well defined.

#include "magic4/mat_fun.hpp"
#include "magic4/pauli.hpp"
#include "magic4/report.hpp"

#include <array>
#include <string>

namespace magic4 {

using PSet = std::array<std::array<MatFun, 5>, 5>;  // 1-based [i][j]

inline MatFun p11_matrix() {
  MatFun p(4, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) p(i - 1, j - 1) = f_poly(i, j);
  return p;
}

inline const PSet& p_set() {
  static const PSet ps = [] {
    PSet p;
    MatFun p11 = p11_matrix();
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        MatFun u = MatFun::from_constant(u_set()[i][j]);
        p[i][j] = u * p11 * u.adjoint();
      }
    return p;
  }();
  return ps;
}

// The six conjugates displayed entrywise, kept as independent fixtures.
// Each entry is a signed coordinate function s*f_{a,b}.
struct SignedF {
  int sign, a, b;
};
using PDisplay = std::array<std::array<SignedF, 4>, 4>;

inline MatFun p_from_display(const PDisplay& d) {
  MatFun m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = FieldScalar(d[i][j].sign) * f_poly(d[i][j].a, d[i][j].b);
  return m;
}

// (i,j) -> displayed matrix, for the pairs the source displays.
inline std::array<std::pair<std::pair<int, int>, PDisplay>, 6> p_displays() {
  auto F = [](int s, int a, int b) { return SignedF{s, a, b}; };
  std::array<std::pair<std::pair<int, int>, PDisplay>, 6> out = {{
      {{1, 2},
       {{{{F(1, 2, 2), F(-1, 2, 1), F(-1, 2, 4), F(1, 2, 3)}},
         {{F(-1, 1, 2), F(1, 1, 1), F(1, 1, 4), F(-1, 1, 3)}},
         {{F(-1, 4, 2), F(1, 4, 1), F(1, 4, 4), F(-1, 4, 3)}},
         {{F(1, 3, 2), F(-1, 3, 1), F(-1, 3, 4), F(1, 3, 3)}}}}},
      {{2, 1},
       {{{{F(1, 2, 2), F(-1, 2, 1), F(1, 2, 4), F(-1, 2, 3)}},
         {{F(-1, 1, 2), F(1, 1, 1), F(-1, 1, 4), F(1, 1, 3)}},
         {{F(1, 4, 2), F(-1, 4, 1), F(1, 4, 4), F(-1, 4, 3)}},
         {{F(-1, 3, 2), F(1, 3, 1), F(-1, 3, 4), F(1, 3, 3)}}}}},
      {{1, 3},
       {{{{F(1, 3, 3), F(1, 3, 4), F(-1, 3, 1), F(-1, 3, 2)}},
         {{F(1, 4, 3), F(1, 4, 4), F(-1, 4, 1), F(-1, 4, 2)}},
         {{F(-1, 1, 3), F(-1, 1, 4), F(1, 1, 1), F(1, 1, 2)}},
         {{F(-1, 2, 3), F(-1, 2, 4), F(1, 2, 1), F(1, 2, 2)}}}}},
      {{3, 1},
       {{{{F(1, 3, 3), F(-1, 3, 4), F(-1, 3, 1), F(1, 3, 2)}},
         {{F(-1, 4, 3), F(1, 4, 4), F(1, 4, 1), F(-1, 4, 2)}},
         {{F(-1, 1, 3), F(1, 1, 4), F(1, 1, 1), F(-1, 1, 2)}},
         {{F(1, 2, 3), F(-1, 2, 4), F(-1, 2, 1), F(1, 2, 2)}}}}},
      {{1, 4},
       {{{{F(1, 4, 4), F(-1, 4, 3), F(1, 4, 2), F(-1, 4, 1)}},
         {{F(-1, 3, 4), F(1, 3, 3), F(-1, 3, 2), F(1, 3, 1)}},
         {{F(1, 2, 4), F(-1, 2, 3), F(1, 2, 2), F(-1, 2, 1)}},
         {{F(-1, 1, 4), F(1, 1, 3), F(-1, 1, 2), F(1, 1, 1)}}}}},
      {{4, 1},
       {{{{F(1, 4, 4), F(1, 4, 3), F(-1, 4, 2), F(-1, 4, 1)}},
         {{F(1, 3, 4), F(1, 3, 3), F(-1, 3, 2), F(-1, 3, 1)}},
         {{F(-1, 2, 4), F(-1, 2, 3), F(1, 2, 2), F(1, 2, 1)}},
         {{F(-1, 1, 4), F(-1, 1, 3), F(1, 1, 2), F(1, 1, 1)}}}}},
  }};
  return out;
}

// beta_{i,j}(F) = Ad U_{i,j} ( F(U_{i,j} a) ).
inline MatFun beta_apply(int i, int j, const MatFun& f) {
  const QMatrix& u = u_set()[i][j];
  MatFun sub = f.substitute_linear(u);
  MatFun uc = MatFun::from_constant(u);
  return uc * sub * uc.adjoint();
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

inline CheckResult check_f_relations() {
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (f_poly(i, j) != f_poly(j, i)) w.note("f symmetry");
      if (f_poly(i, j) != f_poly(i, j).conj()) w.note("f self-adjoint");
    }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          if (f_poly(i, j) * f_poly(k, l) != f_poly(i, k) * f_poly(j, l))
            w.note("f exchange at (" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                   std::to_string(l) + ")");
  SpherePoly s;
  for (int i = 1; i <= 4; ++i) s += f_poly(i, i);
  if (s != SpherePoly::one()) w.note("sum f_ii != 1");
  if (!w.clean())
    return CheckResult::fail("f-relations", "theorem-a",
                             "f_ij = f_ij* = f_ji, f_ij f_kl = f_ik f_jl, sum f_ii = 1", w.text());
  return CheckResult::ok("f-relations", "theorem-a",
                         "f_ij = f_ij* = f_ji, f_ij f_kl = f_ik f_jl (256 cases), sum f_ii = 1, "
                         "all exact in the sphere quotient ring");
}

inline CheckResult check_p_display() {
  WitnessLog w;
  if (p_set()[1][1] != p11_matrix()) w.note("P_{1,1} construction");
  for (const auto& [ij, disp] : p_displays()) {
    MatFun want = p_from_display(disp);
    const MatFun& got = p_set()[ij.first][ij.second];
    if (got != want) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (got(r, c) != want(r, c))
            w.note("P_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                   "} entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    }
  }
  if (!w.clean())
    return CheckResult::fail("p-display", "theorem-a",
                             "computed P_{i,j} equal the displayed signed f-matrices", w.text());
  return CheckResult::ok("p-display", "theorem-a",
                         "P_{1,2}, P_{2,1}, P_{1,3}, P_{3,1}, P_{1,4}, P_{4,1} equal their "
                         "displayed signed f-matrices entrywise");
}

inline CheckResult check_p_projections() {
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const MatFun& p = p_set()[i][j];
      if (!p.is_projection())
        w.note("P_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (!p(r, c).descends_to_rp3())
            w.note("P_{" + std::to_string(i) + "," + std::to_string(j) + "} entry not even");
    }
  if (!w.clean())
    return CheckResult::fail("p-projections", "theorem-a", "each P_{i,j} is a projection",
                             w.text());
  return CheckResult::ok("p-projections", "theorem-a",
                         "P_{i,j}^2 = P_{i,j} = P_{i,j}* exactly, and every entry has even "
                         "degree, for all 16");
}

inline CheckResult check_p_conjugation() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      MatFun u = MatFun::from_constant(u_set()[i][j]);
      MatFun ua = u.adjoint();
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          if (u * p_set()[k][l] * ua != p_set()[kc.tmap(i, k)][kc.tmap(j, l)])
            w.note("(i,j,k,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + "," + std::to_string(l) + ")");
    }
  if (!w.clean())
    return CheckResult::fail("p-conjugation", "theorem-a",
                             "U_{i,j} P_{k,l} U_{i,j}* = P_{t_i(k),t_j(l)}", w.text());
  return CheckResult::ok("p-conjugation", "theorem-a",
                         "U_{i,j} P_{k,l} U_{i,j}* = P_{t_i(k),t_j(l)} for all 256 combinations");
}

inline CheckResult check_p_sums() {
  WitnessLog w;
  for (int i = 1; i <= 4; ++i) {
    MatFun row(4, 4), col(4, 4);
    for (int j = 1; j <= 4; ++j) {
      row = row + p_set()[i][j];
      col = col + p_set()[j][i];
    }
    if (!row.is_identity()) w.note("row " + std::to_string(i));
    if (!col.is_identity()) w.note("column " + std::to_string(i));
  }
  if (!w.clean())
    return CheckResult::fail("p-row-col-sums", "theorem-a", "all 8 row/column sums equal 1",
                             w.text());
  return CheckResult::ok("p-row-col-sums", "theorem-a",
                         "sum_j P_{i,j} = 1 and sum_i P_{i,j} = 1 for all 8 lines");
}

// The identity P_{1,2}-P_{2,1}+P_{3,4}-P_{4,3} = -P_{1,4}+P_{2,3}-P_{3,2}+P_{4,1}
// and its whole family: for any two rows {a,b} and two columns {c,d},
// sum over {a,b} x complement(c,d) equals sum over complement(a,b) x {c,d}.
inline CheckResult check_rf_bridge() {
  WitnessLog w;
  const PSet& p = p_set();
  MatFun lhs = p[1][2] - p[2][1] + p[3][4] - p[4][3];
  MatFun rhs = MatFun::zero(4, 4) - p[1][4] + p[2][3] - p[3][2] + p[4][1];
  if (lhs != rhs) w.note("displayed bridge identity");
  // exact specialization at the rational sphere point (3/5, 4/5, 0, 0)
  std::array<FieldScalar, 4> pt = {FieldScalar(rat(3, 5)), FieldScalar(rat(4, 5)),
                                   FieldScalar::zero(), FieldScalar::zero()};
  if (lhs.eval(pt) != rhs.eval(pt)) w.note("evaluation at (3/5,4/5,0,0)");
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = c + 1; d <= 4; ++d) {
          MatFun l(4, 4), r(4, 4);
          for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
              bool in_rows = (i == a || i == b), in_cols = (j == c || j == d);
              if (in_rows && !in_cols) l = l + p[i][j];
              if (!in_rows && in_cols) r = r + p[i][j];
            }
          if (l != r)
            w.note("rows {" + std::to_string(a) + "," + std::to_string(b) + "} cols {" +
                   std::to_string(c) + "," + std::to_string(d) + "}");
        }
  if (!w.clean())
    return CheckResult::fail("rf-bridge", "theorem-a",
                             "P_{1,2}-P_{2,1}+P_{3,4}-P_{4,3} = -P_{1,4}+P_{2,3}-P_{3,2}+P_{4,1}",
                             w.text());
  return CheckResult::ok("rf-bridge", "theorem-a",
                         "P_{1,2}-P_{2,1}+P_{3,4}-P_{4,3} = -P_{1,4}+P_{2,3}-P_{3,2}+P_{4,1}, "
                         "its rational specialization, and all 36 two-row/two-column exchange "
                         "identities");
}

// Phi(E_{i,j}) = (1/4) sum_k eps(i,k)eps(k,j) U_{t_i(k),t_j(k)} must be the
// matrix unit e_{i,j}: the image of the would-be matrix-unit system.
inline CheckResult check_phi_matrix_units() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  QMatrix sum(4, 4);
  FieldScalar quarter{rat(1, 4)};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      QMatrix acc(4, 4);
      for (int k = 1; k <= 4; ++k)
        acc = acc + FieldScalar(kc.e(i, k) * kc.e(k, j)) * u_set()[kc.tmap(i, k)][kc.tmap(j, k)];
      acc = quarter * acc;
      if (acc != QMatrix::unit(4, i - 1, j - 1))
        w.note("E_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      if (i == j) sum = sum + acc;
    }
  if (!sum.is_identity()) w.note("sum of diagonal images != 1");
  if (!w.clean())
    return CheckResult::fail("phi-matrix-units", "theorem-a",
                             "(1/4) sum_k eps(i,k)eps(k,j) U_{t_i(k),t_j(k)} = e_{i,j}", w.text());
  return CheckResult::ok("phi-matrix-units", "theorem-a",
                         "(1/4) sum_k eps(i,k)eps(k,j) U_{t_i(k),t_j(k)} = e_{i,j} for all 16 "
                         "pairs; diagonal images sum to 1");
}

// Phi(F_{i,j}) = sum_k e_{k,i} P_{1,1} e_{j,k} must be f_{i,j} * 1.
inline CheckResult check_phi_functions() {
  WitnessLog w;
  MatFun p11 = p_set()[1][1];
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      MatFun acc(4, 4);
      for (int k = 1; k <= 4; ++k) {
        MatFun eki = MatFun::from_constant(QMatrix::unit(4, k - 1, i - 1));
        MatFun ejk = MatFun::from_constant(QMatrix::unit(4, j - 1, k - 1));
        acc = acc + eki * p11 * ejk;
      }
      if (acc != f_poly(i, j) * MatFun::identity(4))
        w.note("F_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  if (!w.clean())
    return CheckResult::fail("phi-functions", "theorem-a",
                             "sum_k e_{k,i} P_{1,1} e_{j,k} = f_{i,j} 1", w.text());
  return CheckResult::ok("phi-functions", "theorem-a",
                         "sum_k e_{k,i} P_{1,1} e_{j,k} = f_{i,j} * identity for all 16 pairs");
}

inline CheckResult check_beta_fixes_p() {
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          if (beta_apply(i, j, p_set()[k][l]) != p_set()[k][l])
            w.note("beta_{" + std::to_string(i) + "," + std::to_string(j) + "}(P_{" +
                   std::to_string(k) + "," + std::to_string(l) + "})");
  if (!w.clean())
    return CheckResult::fail("beta-fixes-p", "theorem-b", "beta_{i,j}(P_{k,l}) = P_{k,l}",
                             w.text());
  return CheckResult::ok("beta-fixes-p", "theorem-b",
                         "beta_{i,j}(P_{k,l}) = P_{k,l} for all 256 combinations: every P lies "
                         "in the fixed-point algebra");
}

inline CheckResult check_beta_scales_u() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          MatFun got = beta_apply(i, j, MatFun::from_constant(u_set()[k][l]));
          int s = kc.e(i, k) * kc.e(j, l) * kc.e(k, i) * kc.e(l, j);
          MatFun want = FieldScalar(s) * MatFun::from_constant(u_set()[k][l]);
          if (got != want)
            w.note("beta_{" + std::to_string(i) + "," + std::to_string(j) + "}(U_{" +
                   std::to_string(k) + "," + std::to_string(l) + "})");
        }
  if (!w.clean())
    return CheckResult::fail("beta-scales-u", "theorem-b",
                             "beta_{i,j}(U_{k,l}) = eps(i,k)eps(j,l)eps(k,i)eps(l,j) U_{k,l}",
                             w.text());
  return CheckResult::ok("beta-scales-u", "theorem-b",
                         "beta_{i,j}(U_{k,l}) = eps(i,k)eps(j,l)eps(k,i)eps(l,j) U_{k,l} for all "
                         "256 combinations");
}

// The composition law holds on even matrix functions; the P's are fixed, so
// probe it on a non-invariant even element as well.
inline CheckResult check_beta_action_composition() {
  const KleinCocycle& kc = klein();
  WitnessLog w;
  MatFun probe(4, 4);
  probe(0, 0) = f_poly(1, 2);
  probe(1, 2) = f_poly(3, 3);
  probe(3, 0) = f_poly(1, 4);
  std::array<MatFun, 2> tests = {p_set()[2][3], probe};
  for (const MatFun& f : tests)
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k)
          for (int l = 1; l <= 4; ++l) {
            MatFun lhs = beta_apply(i, j, beta_apply(k, l, f));
            MatFun rhs = beta_apply(kc.tmap(i, k), kc.tmap(j, l), f);
            if (lhs != rhs)
              w.note("(" + std::to_string(i) + "," + std::to_string(j) + ")o(" +
                     std::to_string(k) + "," + std::to_string(l) + ")");
          }
  if (!w.clean())
    return CheckResult::fail("beta-action", "theorem-b",
                             "beta_{i,j} o beta_{k,l} = beta_{t_i(k),t_j(l)} on even elements",
                             w.text());
  return CheckResult::ok("beta-action", "theorem-b",
                         "beta_{i,j} o beta_{k,l} = beta_{t_i(k),t_j(l)} on even matrix "
                         "functions, all 256 pairs on two probes");
}

}  // namespace magic4
