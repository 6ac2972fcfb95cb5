#pragma once

// Fixed-point geometry of the sixteen involutions on RP^3: the nine fixed
// circle pairs, the six four-point special orbits, the projection equalities
// at those points, the hexahedron coordinates on the fundamental domain, and
// the sampled open-condition claims (injectivity, translate disjointness).
//
// Every closed-condition claim is certified by exact eigenspace algebra;
// floating point appears only in the two sampling checks.

#include "magic4/pauli.hpp"
#include "magic4/qmatrix.hpp"
#include "magic4/report.hpp"
#include "magic4/rng.hpp"
#include "magic4/rp3.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace magic4 {

// A nonzero real 4-vector up to nonzero real scalar.
struct ProjPoint {
  std::array<FieldScalar, 4> v;

  static ProjPoint from_ints(int a, int b, int c, int d) {
    return {{FieldScalar(a), FieldScalar(b), FieldScalar(c), FieldScalar(d)}};
  }
  bool is_zero() const {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
  }
};

// u ~ v iff every 2x2 minor of the stacked 2x4 matrix vanishes.
inline bool projectively_equal(const ProjPoint& u, const ProjPoint& w) {
  if (u.is_zero() || w.is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(u.v[i] * w.v[j] - u.v[j] * w.v[i]).is_zero()) return false;
  return true;
}

// Integer representative -> exact unit vector.  The representatives used
// here have squared norm 1, 2 or 4, all scalable inside Q(i,sqrt2).
inline std::array<FieldScalar, 4> unit_point(const std::array<int, 4>& rep) {
  long long n2 = 0;
  for (int x : rep) n2 += (long long)x * x;
  FieldScalar scale;
  if (n2 == 1)
    scale = FieldScalar::one();
  else if (n2 == 4)
    scale = FieldScalar(rat(1, 2));
  else if (n2 == 2)
    scale = FieldScalar::inv_sqrt2();
  else
    throw std::invalid_argument("unit_point: unsupported norm");
  std::array<FieldScalar, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = scale * FieldScalar(rep[k]);
  return out;
}

struct EigenFamily {
  int i, j;
  std::array<std::array<int, 4>, 2> fam_a;  // [a,b]-parameterized family basis
  std::array<std::array<int, 4>, 2> fam_b;
};

// The nine fixed circle families, as displayed.
inline const std::array<EigenFamily, 9>& eigen_families() {
  static const std::array<EigenFamily, 9> fams = {{
      {2, 2, {{{1, 0, 0, 0}, {0, 1, 0, 0}}}, {{{0, 0, 1, 0}, {0, 0, 0, 1}}}},
      {2, 3, {{{1, 0, 0, 1}, {0, 1, -1, 0}}}, {{{1, 0, 0, -1}, {0, 1, 1, 0}}}},
      {2, 4, {{{1, 0, 1, 0}, {0, 1, 0, 1}}}, {{{1, 0, -1, 0}, {0, 1, 0, -1}}}},
      {3, 2, {{{1, 0, 0, 1}, {0, 1, 1, 0}}}, {{{1, 0, 0, -1}, {0, 1, -1, 0}}}},
      {3, 3, {{{1, 0, 0, 0}, {0, 0, 1, 0}}}, {{{0, 1, 0, 0}, {0, 0, 0, 1}}}},
      {3, 4, {{{1, 1, 0, 0}, {0, 0, 1, -1}}}, {{{1, -1, 0, 0}, {0, 0, 1, 1}}}},
      {4, 2, {{{1, 0, 1, 0}, {0, 1, 0, -1}}}, {{{1, 0, -1, 0}, {0, 1, 0, 1}}}},
      {4, 3, {{{1, 1, 0, 0}, {0, 0, 1, 1}}}, {{{1, -1, 0, 0}, {0, 0, 1, -1}}}},
      {4, 4, {{{1, 0, 0, 0}, {0, 0, 0, 1}}}, {{{0, 1, 0, 0}, {0, 0, 1, 0}}}},
  }};
  return fams;
}

struct SpecialOrbit {
  std::array<int, 3> idx;  // (i2, i3, i4): fixed by U_{i2,2}, U_{i3,3}, U_{i4,4}
  std::array<std::array<int, 4>, 4> points;  // integer representatives
};

inline const std::array<SpecialOrbit, 6>& special_orbits() {
  static const std::array<SpecialOrbit, 6> orbits = {{
      {{2, 3, 4}, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}},
      {{3, 4, 2}, {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}}}},
      {{4, 2, 3}, {{{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}}}},
      {{2, 4, 3}, {{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}}}},
      {{4, 3, 2}, {{{1, 0, 1, 0}, {1, 0, -1, 0}, {0, 1, 0, 1}, {0, 1, 0, -1}}}},
      {{3, 2, 4}, {{{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}}}},
  }};
  return orbits;
}

namespace detail {

inline QMatrix eigenspace(const QMatrix& u, int lambda) {
  QMatrix shifted = u - FieldScalar(lambda) * QMatrix::identity(4);
  return shifted.null_space();
}

inline QMatrix col_vector(const std::array<int, 4>& v) {
  QMatrix c(4, 1);
  for (int k = 0; k < 4; ++k) c(k, 0) = FieldScalar(v[k]);
  return c;
}

// eigenvalue of v under u, or 0 if v is not an eigenvector with value +-1
inline int eigen_sign(const QMatrix& u, const QMatrix& v) {
  QMatrix uv = u * v;
  if (uv == v) return 1;
  if (uv == -v) return -1;
  return 0;
}

inline bool in_span(const QMatrix& basis, const QMatrix& vec) {
  QMatrix aug(basis.rows(), basis.cols() + 1);
  for (int i = 0; i < basis.rows(); ++i) {
    for (int j = 0; j < basis.cols(); ++j) aug(i, j) = basis(i, j);
    aug(i, basis.cols()) = vec(i, 0);
  }
  return aug.rank() == basis.rank();
}

}  // namespace detail

inline CheckResult check_fixed_circles() {
  WitnessLog w;
  QMatrix id = QMatrix::identity(4);
  for (const EigenFamily& f : eigen_families()) {
    const QMatrix& u = u_set()[f.i][f.j];
    std::string tag = "U_{" + std::to_string(f.i) + "," + std::to_string(f.j) + "}";
    if (u * u != id) w.note(tag + "^2 != 1");
    QMatrix plus = detail::eigenspace(u, 1), minus = detail::eigenspace(u, -1);
    if (plus.cols() != 2 || minus.cols() != 2) w.note(tag + " eigenspaces not 2+2");
    for (const auto& fam : {f.fam_a, f.fam_b}) {
      QMatrix v0 = detail::col_vector(fam[0]), v1 = detail::col_vector(fam[1]);
      int s0 = detail::eigen_sign(u, v0), s1 = detail::eigen_sign(u, v1);
      if (s0 == 0 || s0 != s1) {
        w.note(tag + " family not a common eigenvector pair");
        continue;
      }
      const QMatrix& space = s0 == 1 ? plus : minus;
      if (!detail::in_span(space, v0) || !detail::in_span(space, v1))
        w.note(tag + " family outside eigenspace");
      // converse inclusion: the family pair is independent, so it spans
      QMatrix fam2(4, 2);
      for (int k = 0; k < 4; ++k) {
        fam2(k, 0) = v0(k, 0);
        fam2(k, 1) = v1(k, 0);
      }
      if (fam2.rank() != 2) w.note(tag + " family not independent");
    }
    int sa = detail::eigen_sign(u, detail::col_vector(f.fam_a[0]));
    int sb = detail::eigen_sign(u, detail::col_vector(f.fam_b[0]));
    if (sa == sb) w.note(tag + " families share an eigenvalue");
  }
  if (!w.clean())
    return CheckResult::fail("fixed-circles", "geometry",
                             "for i,j >= 2 the fixed set is the displayed pair of circles",
                             w.text());
  return CheckResult::ok("fixed-circles", "geometry",
                         "for all nine i,j >= 2: U_{i,j}^2 = 1, the +1/-1 eigenspaces are "
                         "2-dimensional, and each equals the span of its displayed family");
}

inline CheckResult check_no_fixed_points() {
  WitnessLog w;
  QMatrix id = QMatrix::identity(4);
  for (int k = 2; k <= 4; ++k) {
    if (u_set()[1][k] * u_set()[1][k] != -id) w.note("U_{1," + std::to_string(k) + "}^2 != -1");
    if (u_set()[k][1] * u_set()[k][1] != -id) w.note("U_{" + std::to_string(k) + ",1}^2 != -1");
  }
  if (!w.clean())
    return CheckResult::fail("no-fixed-points", "geometry",
                             "U_{1,i}^2 = U_{i,1}^2 = -1, so sigma_{1,i}, sigma_{i,1} are free",
                             w.text());
  return CheckResult::ok("no-fixed-points", "geometry",
                         "U_{1,i}^2 = U_{i,1}^2 = -1 exactly for i = 2,3,4: no real eigenvectors, "
                         "hence no fixed points on RP^3");
}

inline CheckResult check_special_points() {
  WitnessLog w;
  for (const SpecialOrbit& orb : special_orbits()) {
    std::string tag = "(" + std::to_string(orb.idx[0]) + std::to_string(orb.idx[1]) +
                      std::to_string(orb.idx[2]) + ")";
    std::array<QMatrix, 3> us = {u_set()[orb.idx[0]][2], u_set()[orb.idx[1]][3],
                                 u_set()[orb.idx[2]][4]};
    for (const auto& pt : orb.points) {
      QMatrix v = detail::col_vector(pt);
      std::array<int, 3> sign{};
      for (int a = 0; a < 3; ++a) {
        sign[a] = detail::eigen_sign(us[a], v);
        if (sign[a] == 0) w.note(tag + " point not projectively fixed");
      }
      if (sign[0] == 0 || sign[1] == 0 || sign[2] == 0) continue;
      // every pairwise eigenspace intersection is exactly the line through v
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          QMatrix stacked(8, 4);
          QMatrix sa = us[a] - FieldScalar(sign[a]) * QMatrix::identity(4);
          QMatrix sb = us[b] - FieldScalar(sign[b]) * QMatrix::identity(4);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              stacked(i, j) = sa(i, j);
              stacked(4 + i, j) = sb(i, j);
            }
          QMatrix inter = stacked.null_space();
          if (inter.cols() != 1) {
            w.note(tag + " pairwise intersection not a line");
            continue;
          }
          ProjPoint pv{{v(0, 0), v(1, 0), v(2, 0), v(3, 0)}};
          ProjPoint iv{{inter(0, 0), inter(1, 0), inter(2, 0), inter(3, 0)}};
          if (!projectively_equal(pv, iv)) w.note(tag + " intersection line misses the point");
        }
    }
    // four distinct points per orbit
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        ProjPoint pa{{FieldScalar(orb.points[a][0]), FieldScalar(orb.points[a][1]),
                      FieldScalar(orb.points[a][2]), FieldScalar(orb.points[a][3])}};
        ProjPoint pb{{FieldScalar(orb.points[b][0]), FieldScalar(orb.points[b][1]),
                      FieldScalar(orb.points[b][2]), FieldScalar(orb.points[b][3])}};
        if (projectively_equal(pa, pb)) w.note(tag + " repeated point");
      }
  }
  // all 24 distinct across orbits
  std::vector<ProjPoint> all;
  for (const SpecialOrbit& orb : special_orbits())
    for (const auto& pt : orb.points)
      all.push_back({{FieldScalar(pt[0]), FieldScalar(pt[1]), FieldScalar(pt[2]),
                      FieldScalar(pt[3])}});
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = a + 1; b < all.size(); ++b)
      if (projectively_equal(all[a], all[b])) w.note("duplicate special point across orbits");
  if (!w.clean())
    return CheckResult::fail("special-points", "geometry",
                             "the six listed 4-point sets are the triple fixed intersections",
                             w.text());
  return CheckResult::ok("special-points", "geometry",
                         "all 24 listed points are projectively fixed by their three "
                         "involutions, pairwise eigenspace intersections are exactly the lines "
                         "through them, and the 24 points are distinct");
}

inline CheckResult check_papa() {
  WitnessLog w;
  for (const SpecialOrbit& orb : special_orbits()) {
    int i2 = orb.idx[0], i3 = orb.idx[1], i4 = orb.idx[2];
    std::string tag = "(" + std::to_string(i2) + std::to_string(i3) + std::to_string(i4) + ")";
    // the four equality groups at these points
    std::array<std::array<std::pair<int, int>, 4>, 4> groups = {{
        {{{1, 1}, {i2, 2}, {i3, 3}, {i4, 4}}},
        {{{i2, 1}, {1, 2}, {i4, 3}, {i3, 4}}},
        {{{i3, 1}, {i4, 2}, {1, 3}, {i2, 4}}},
        {{{i4, 1}, {i3, 2}, {i2, 3}, {1, 4}}},
    }};
    for (const auto& rep : orb.points) {
      std::array<FieldScalar, 4> pt = unit_point(rep);
      std::array<QMatrix, 4> val;
      for (int g = 0; g < 4; ++g) {
        val[g] = p_set()[groups[g][0].first][groups[g][0].second].eval(pt);
        for (int m = 1; m < 4; ++m) {
          QMatrix other = p_set()[groups[g][m].first][groups[g][m].second].eval(pt);
          if (other != val[g]) w.note(tag + " group " + std::to_string(g + 1) + " equality");
        }
        if (val[g] * val[g] != val[g] || val[g] != val[g].adjoint())
          w.note(tag + " group value not a projection");
      }
      QMatrix sum(4, 4);
      for (int g = 0; g < 4; ++g) {
        for (int h = g + 1; h < 4; ++h)
          if (!(val[g] * val[h]).is_zero()) w.note(tag + " groups not orthogonal");
        sum = sum + val[g];
      }
      if (!sum.is_identity()) w.note(tag + " groups do not sum to 1");
      // invariance under the three stabilizing conjugations
      std::array<std::pair<int, int>, 3> stab = {{{i2, 2}, {i3, 3}, {i4, 4}}};
      for (auto [si, sj] : stab) {
        const QMatrix& u = u_set()[si][sj];
        for (int k = 1; k <= 4; ++k)
          for (int l = 1; l <= 4; ++l) {
            QMatrix pval = p_set()[k][l].eval(pt);
            if (u * pval * u.adjoint() != pval) w.note(tag + " Ad-invariance at point");
          }
      }
    }
  }
  if (!w.clean())
    return CheckResult::fail("papa-equalities", "geometry",
                             "P_{k,l}(x) = P_{t_i(k),t_j(l)}(x) at every special point", w.text());
  return CheckResult::ok("papa-equalities", "geometry",
                         "at each of the 24 special points the four 4-way projection equalities "
                         "hold exactly, the grouped values are orthogonal projections summing to "
                         "1, and all P values are Ad U invariant for the stabilizer");
}

// h(a) = (3a_k^2 + a_4^2 + 4 a_4 |a_4|)_{k=1,2,3}, piecewise polynomial in
// the sign of a_4.
inline std::array<Rat, 3> hexahedron_exact(const std::array<Rat, 4>& a) {
  Rat a4sq = a[3] * a[3];
  Rat kink = (a[3] >= Rat() ? a[3] : Rat(-a[3])) * a[3] * rat(4);
  std::array<Rat, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = rat(3) * a[k] * a[k] + a4sq + kink;
  return out;
}

inline std::array<double, 3> hexahedron_num(const std::array<double, 4>& a) {
  double extra = a[3] * a[3] + 4.0 * a[3] * std::fabs(a[3]);
  return {3 * a[0] * a[0] + extra, 3 * a[1] * a[1] + extra, 3 * a[2] * a[2] + extra};
}

inline CheckResult check_hexahedron_vertices() {
  WitnessLog w;
  auto expect = [&w](const std::array<Rat, 4>& a, std::array<Rat, 3> want, const char* tag) {
    if (hexahedron_exact(a) != want) w.note(tag);
  };
  Rat h = rat(1, 2);
  expect({h, h, h, h}, {rat(2), rat(2), rat(2)}, "h(1/2,1/2,1/2,1/2)");
  expect({h, h, h, -h}, {rat(0), rat(0), rat(0)}, "h(1/2,1/2,1/2,-1/2)");
  expect({rat(1), rat(0), rat(0), rat(0)}, {rat(3), rat(0), rat(0)}, "h(e1)");
  expect({rat(0), rat(1), rat(0), rat(0)}, {rat(0), rat(3), rat(0)}, "h(e2)");
  expect({rat(0), rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(3)}, "h(e3)");
  if (!w.clean())
    return CheckResult::fail("hexahedron-vertices", "geometry", "exact vertex images of h",
                             w.text());
  return CheckResult::ok("hexahedron-vertices", "geometry",
                         "h maps (1/2,1/2,1/2,+-1/2) to (2,2,2)/(0,0,0) and e1,e2,e3 to "
                         "(3,0,0),(0,3,0),(0,0,3), exactly");
}

namespace detail {

inline bool in_closed_v(const std::array<double, 4>& a) {
  double t = std::fabs(a[3]);
  return a[0] >= t && a[1] >= t && a[2] >= t;
}
inline bool in_open_v(const std::array<double, 4>& a) {
  double t = std::fabs(a[3]);
  return a[0] > t && a[1] > t && a[2] > t;
}
inline std::array<double, 4> negate(const std::array<double, 4>& a) {
  return {-a[0], -a[1], -a[2], -a[3]};
}

// uniform on the closed fundamental domain by rejection from S^3
inline std::array<double, 4> sample_vbar(std::mt19937_64& g) {
  for (;;) {
    std::array<double, 4> a = sample_s3(g);
    if (in_closed_v(a)) return a;
    std::array<double, 4> b = negate(a);
    if (in_closed_v(b)) return b;
  }
}

}  // namespace detail

inline CheckResult check_hexahedron_sampling(long samples, std::uint64_t seed) {
  std::mt19937_64 g(block_seed(seed, 101));
  WitnessLog w;
  const double sep_in = 1e-3, sep_out = 1e-9, hull_slack = 1e-12;
  for (long s = 0; s < samples; ++s) {
    std::array<double, 4> x = detail::sample_vbar(g), y = detail::sample_vbar(g);
    std::array<double, 3> hx = hexahedron_num(x), hy = hexahedron_num(y);
    for (const auto& hz : {hx, hy}) {
      if (hz[0] < -hull_slack || hz[1] < -hull_slack || hz[2] < -hull_slack)
        w.note("image outside coordinate walls at sample " + std::to_string(s));
      if (2 * hz[0] + 2 * hz[1] - hz[2] > 6 + hull_slack ||
          2 * hz[1] + 2 * hz[2] - hz[0] > 6 + hull_slack ||
          2 * hz[0] + 2 * hz[2] - hz[1] > 6 + hull_slack)
        w.note("image outside roof faces at sample " + std::to_string(s));
    }
    double d2m = 0, d2p = 0;
    for (int k = 0; k < 4; ++k) {
      d2m += (x[k] - y[k]) * (x[k] - y[k]);
      d2p += (x[k] + y[k]) * (x[k] + y[k]);
    }
    double dproj = std::sqrt(std::min(d2m, d2p));
    if (dproj > sep_in) {
      double dh2 = 0;
      for (int k = 0; k < 3; ++k) dh2 += (hx[k] - hy[k]) * (hx[k] - hy[k]);
      if (std::sqrt(dh2) <= sep_out)
        w.note("collision witness: proj dist " + std::to_string(dproj) + " image dist " +
               std::to_string(std::sqrt(dh2)));
    }
  }
  if (!w.clean())
    return CheckResult::fail("hexahedron-sampling", "geometry",
                             "sampled injectivity of h on the fundamental domain", w.text());
  return CheckResult::ok("hexahedron-sampling", "geometry",
                         std::to_string(samples) + " sampled pairs: projectively separated "
                         "points (> 1e-3) never collide in the image (<= 1e-9), and all images "
                         "lie in the hexahedron hull");
}

inline CheckResult check_v_disjointness(long samples, std::uint64_t seed) {
  std::mt19937_64 g(block_seed(seed, 202));
  WitnessLog w;
  // numeric copies of the sixteen signed permutation matrices
  double u[5][5][4][4];
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          u[i][j][r][c] = u_set()[i][j](r, c).to_complex().real();
  for (long s = 0; s < samples; ++s) {
    std::array<double, 4> x;
    do {
      x = detail::sample_vbar(g);
    } while (!detail::in_open_v(x));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        if (i == 1 && j == 1) continue;
        std::array<double, 4> y{};
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) y[r] += u[i][j][r][c] * x[c];
        if (detail::in_open_v(y) || detail::in_open_v(detail::negate(y)))
          w.note("sigma_{" + std::to_string(i) + "," + std::to_string(j) +
                 "} image stayed in V at sample " + std::to_string(s) + ": (" +
                 std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
                 "," + std::to_string(x[3]) + ")");
      }
  }
  if (!w.clean())
    return CheckResult::fail("v-disjointness", "geometry", "sigma_{i,j}(V) disjoint from V",
                             w.text());
  return CheckResult::ok("v-disjointness", "geometry",
                         std::to_string(samples) + " sampled points of V, 15 nontrivial "
                         "translates each: no image (in either sign representative) satisfied "
                         "the defining inequalities of V");
}

}  // namespace magic4
