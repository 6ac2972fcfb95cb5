#pragma once

// Winding number of a unitary-valued map on the 3-sphere, as the normalized
// integral of the Cartan 3-form:
//
//   deg F = -(1/24 pi^2) integral_{S^3} tr( (F* dF)^3 )
//
// The map is given exactly (a polynomial matrix, verified unitary before any
// numerics), its partial derivatives are taken exactly, and only the chart
// integral is sampled.  The chart is the standard angular one
//
//   a = (cos p, sin p cos t, sin p sin t cos q, sin p sin t sin q)
//
// on [0,pi] x [0,pi] x [0,2pi], with the axis order fixed so that the
// tautological unitary a -> sum a_k c_k has winding +1; every other class is
// reported in that generator's units.  Stratified sampling, one RNG per
// cell, ordered reduction: estimates are reproducible for a fixed seed and
// independent of thread count.

#include "magic4/mat_fun.hpp"
#include "magic4/rng.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace magic4 {

using Cplx = std::complex<double>;

// degree <= 2 monomials in a1..a4: [1] [a1..a4] [a_k a_l, k <= l]
inline int monomial_slot(const Monomial& m) {
  int deg = m[0] + m[1] + m[2] + m[3];
  if (deg == 0) return 0;
  if (deg == 1) {
    for (int k = 0; k < 4; ++k)
      if (m[k]) return 1 + k;
  }
  if (deg == 2) {
    int k = -1, l = -1;
    for (int t = 0; t < 4; ++t) {
      if (m[t] == 2) {
        k = l = t;
      } else if (m[t] == 1) {
        (k < 0 ? k : l) = t;
      }
    }
    if (k > l) std::swap(k, l);
    static const int pair_slot[4][4] = {
        {0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
    return 5 + pair_slot[k][l];
  }
  return -1;
}

class CompiledUnitary {
 public:
  explicit CompiledUnitary(const MatFun& f) : n_(f.rows()) {
    if (!f.is_unitary()) throw std::invalid_argument("CompiledUnitary: map is not exactly unitary");
    value_.resize(size_t(n_) * n_);
    for (auto& d : deriv_) d.resize(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        compile(f(i, j), value_[idx(i, j)]);
        for (int k = 1; k <= 4; ++k) compile(f(i, j).partial(k), deriv_[k - 1][idx(i, j)]);
      }
  }

  int dim() const { return n_; }

  void eval(const double* mono, Cplx* out) const { eval_table(value_, mono, out); }
  // sum_k dF/da_k * jac[k]
  void eval_dir(const double jac[4], const double* mono, Cplx* out) const {
    const size_t nn = size_t(n_) * n_;
    for (size_t e = 0; e < nn; ++e) out[e] = Cplx(0, 0);
    for (int k = 0; k < 4; ++k) {
      if (jac[k] == 0.0) continue;
      const auto& tab = deriv_[k];
      for (size_t e = 0; e < nn; ++e)
        for (const auto& [slot, c] : tab[e]) out[e] += jac[k] * mono[slot] * c;
    }
  }

  static void monomials(const double a[4], double mono[15]) {
    mono[0] = 1.0;
    for (int k = 0; k < 4; ++k) mono[1 + k] = a[k];
    int s = 5;
    for (int k = 0; k < 4; ++k)
      for (int l = k; l < 4; ++l) mono[s++] = a[k] * a[l];
  }

 private:
  using Entry = std::vector<std::pair<int, Cplx>>;
  size_t idx(int i, int j) const { return size_t(i) * n_ + j; }
  static void compile(const SpherePoly& p, Entry& out) {
    for (const auto& [m, c] : p.terms()) {
      int slot = monomial_slot(m);
      if (slot < 0) throw std::invalid_argument("CompiledUnitary: entry degree exceeds 2");
      out.emplace_back(slot, c.to_complex());
    }
  }
  void eval_table(const std::vector<Entry>& tab, const double* mono, Cplx* out) const {
    const size_t nn = size_t(n_) * n_;
    for (size_t e = 0; e < nn; ++e) {
      Cplx v(0, 0);
      for (const auto& [slot, c] : tab[e]) v += mono[slot] * c;
      out[e] = v;
    }
  }

  int n_;
  std::vector<Entry> value_;
  std::array<std::vector<Entry>, 4> deriv_;
};

struct DegreeEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<long> snapped;
  long samples = 0;
  std::uint64_t seed = 0;
};

namespace detail_degree {

struct Scratch {
  std::vector<Cplx> g, b1, b2, b3, c1, c2, c3, m1, m2;
  explicit Scratch(int n)
      : g(n * n), b1(n * n), b2(n * n), b3(n * n), c1(n * n), c2(n * n), c3(n * n), m1(n * n),
        m2(n * n) {}
};

inline void adjoint_times(int n, const std::vector<Cplx>& g, const std::vector<Cplx>& b,
                          std::vector<Cplx>& out) {
  // out = g^* b
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cplx v(0, 0);
      for (int k = 0; k < n; ++k) v += std::conj(g[k * n + i]) * b[k * n + j];
      out[i * n + j] = v;
    }
}
inline void times(int n, const std::vector<Cplx>& a, const std::vector<Cplx>& b,
                  std::vector<Cplx>& out) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cplx v(0, 0);
      for (int k = 0; k < n; ++k) v += a[i * n + k] * b[k * n + j];
      out[i * n + j] = v;
    }
}

// integrand value: 3 * Re tr( C1 (C2 C3 - C3 C2) ) at chart point x
inline double integrand(const CompiledUnitary& f, Scratch& s, double psi, double theta,
                        double phi) {
  const int n = f.dim();
  double sp = std::sin(psi), cp = std::cos(psi);
  double st = std::sin(theta), ct = std::cos(theta);
  double sq = std::sin(phi), cq = std::cos(phi);
  double a[4] = {cp, sp * ct, sp * st * cq, sp * st * sq};
  double jp[4] = {-sp, cp * ct, cp * st * cq, cp * st * sq};
  double jt[4] = {0, -sp * st, sp * ct * cq, sp * ct * sq};
  double jq[4] = {0, 0, -sp * st * sq, sp * st * cq};
  double mono[15];
  CompiledUnitary::monomials(a, mono);
  f.eval(mono, s.g.data());
  f.eval_dir(jp, mono, s.b1.data());
  f.eval_dir(jt, mono, s.b2.data());
  f.eval_dir(jq, mono, s.b3.data());
  adjoint_times(n, s.g, s.b1, s.c1);
  adjoint_times(n, s.g, s.b2, s.c2);
  adjoint_times(n, s.g, s.b3, s.c3);
  times(n, s.c2, s.c3, s.m1);
  times(n, s.c3, s.c2, s.m2);
  Cplx tr(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr += s.c1[i * n + j] * (s.m1[j * n + i] - s.m2[j * n + i]);
  return 3.0 * tr.real();
}

}  // namespace detail_degree

// Stratified Monte Carlo estimate of the winding number.  `samples` is a
// total over all cells (rounded up to a multiple of the cell count).
inline DegreeEstimate degree_of_unitary(const CompiledUnitary& f, long samples,
                                        std::uint64_t seed, int strata_per_axis = 10,
                                        int jobs = 0) {
  const double pi = 3.14159265358979323846;
  const int k = strata_per_axis;
  const long cells = (long)k * k * k;
  const long per_cell = std::max<long>(1, (samples + cells - 1) / cells);
  // integrand already carries the alternating-sum factor 3; chart oriented
  // so the tautological 2x2 unitary gets +1
  const double scale = -1.0 / (24.0 * pi * pi);
  const double vol_cell = (pi / k) * (pi / k) * (2 * pi / k);

  if (jobs <= 0) jobs = (int)std::max(1u, std::thread::hardware_concurrency());
  std::vector<double> cell_mean(cells), cell_var(cells);
  auto run_block = [&](long lo, long hi) {
    detail_degree::Scratch scratch(f.dim());
    for (long cell = lo; cell < hi; ++cell) {
      std::mt19937_64 g(block_seed(seed, (std::uint64_t)cell));
      long cz = cell % k, cy = (cell / k) % k, cx = cell / (k * k);
      double p0 = pi * cx / k, p1 = pi * (cx + 1) / k;
      double t0 = pi * cy / k, t1 = pi * (cy + 1) / k;
      double q0 = 2 * pi * cz / k, q1 = 2 * pi * (cz + 1) / k;
      double sum = 0, sum2 = 0;
      for (long s = 0; s < per_cell; ++s) {
        double v = detail_degree::integrand(f, scratch, uniform(g, p0, p1), uniform(g, t0, t1),
                                            uniform(g, q0, q1));
        v *= scale;
        sum += v;
        sum2 += v * v;
      }
      double mean = sum / per_cell;
      cell_mean[cell] = mean;
      cell_var[cell] = per_cell > 1 ? (sum2 - per_cell * mean * mean) / (per_cell - 1) : 0.0;
    }
  };
  if (jobs == 1) {
    run_block(0, cells);
  } else {
    std::vector<std::future<void>> futs;
    long chunk = (cells + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      long lo = t * chunk, hi = std::min(cells, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, run_block, lo, hi));
    }
    for (auto& fu : futs) fu.get();
  }

  DegreeEstimate est;
  est.samples = per_cell * cells;
  est.seed = seed;
  double total = 0, var = 0;
  for (long c = 0; c < cells; ++c) {
    total += vol_cell * cell_mean[c];
    var += vol_cell * vol_cell * cell_var[c] / per_cell;
  }
  est.estimate = total;
  est.std_error = std::sqrt(var);
  // snap only when the variance is measurable (two or more samples per
  // cell) and the 3-sigma interval pins a unique integer
  if (per_cell >= 2) {
    double lo = est.estimate - 3 * est.std_error, hi = est.estimate + 3 * est.std_error;
    long klo = (long)std::ceil(lo), khi = (long)std::floor(hi);
    if (klo == khi) est.snapped = klo;
  }
  return est;
}

}  // namespace magic4
