// Acceptance battery: ten go/no-go criteria over the whole library, each
// with the tolerance and time budget it must meet.  One line per criterion;
// exit status is nonzero when anything fails.

#include "magic4/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifndef MAGIC4_FIXTURES_DIR
#define MAGIC4_FIXTURES_DIR "fixtures"
#endif

namespace {

using namespace magic4;

struct Criterion {
  int id;
  std::string label;
  double budget_s;
  std::function<bool(std::string&)> run;
};

bool all_pass(std::initializer_list<CheckResult> rs, std::string& detail) {
  for (const auto& r : rs)
    if (!r.pass) {
      detail += r.name + ": " + r.witness + "; ";
      return false;
    }
  return true;
}

}  // namespace

int main() {
  using namespace magic4;
  KTables tables;
  DeltaData data;
  try {
    tables = load_ktables(MAGIC4_FIXTURES_DIR);
    data = delta_data_from_fixtures(tables);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "fixture error: %s\n", e.what());
    return 2;
  }

  const long geom_samples = 100000;
  const long degree_samples = 1000000;
  const std::uint64_t seed = 42;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "exact relation battery (pauli/cocycle/U)", 1.0, [&](std::string& d) {
    return all_pass({check_epsilon_table(tables.t1), check_epsilon_symmetrization(tables.t2),
                     check_pauli_relation(), check_cocycle_identity(), check_u_display(),
                     check_u_twist(), check_intertwine(), check_scalar_inverse_identity()},
                    d);
  }});

  criteria.push_back({2, "representation battery (projections over the sphere)", 30.0,
                      [&](std::string& d) {
    return all_pass({check_f_relations(), check_p_display(), check_p_projections(),
                     check_p_conjugation(), check_p_sums(), check_phi_matrix_units(),
                     check_phi_functions(), check_rf_bridge(), check_beta_fixes_p(),
                     check_beta_scales_u()},
                    d);
  }});

  criteria.push_back({3, "integer K-theory battery (tables, kernel, cokernel, eta)", 5.0,
                      [&](std::string& d) {
    return all_pass({check_delta_table(tables), check_p_class_table(tables),
                     check_kernel_rank(data), check_cokernel(data), check_p_class_lattice(data),
                     check_eta(data)},
                    d);
  }});

  criteria.push_back({4, "positive cone sweep at height 6", 120.0, [&](std::string& d) {
    return all_pass({check_positive_cone(data, 6)}, d);
  }});

  criteria.push_back({5, "3x3 sign lemma, all 512 patterns", 1.0, [&](std::string& d) {
    return all_pass({check_three_by_three()}, d);
  }});

  criteria.push_back({6, "structure algebras (9 pairs, 6 triples)", 5.0, [&](std::string& d) {
    return all_pass({check_commutant_pairs(), check_commutant_triples()}, d);
  }});

  criteria.push_back({7, "fixed-point geometry with 1e5-sample open conditions", 60.0,
                      [&](std::string& d) {
    return all_pass({check_fixed_circles(), check_no_fixed_points(), check_special_points(),
                     check_papa(), check_hexahedron_vertices(),
                     check_hexahedron_sampling(geom_samples, seed),
                     check_v_disjointness(geom_samples, seed)},
                    d);
  }});

  criteria.push_back({8, "block factorization of the defining unitary", 60.0,
                      [&](std::string& d) {
    XiIotaResult xi = check_xi_iota();
    if (!xi.corrected_reading) {
      d += "embedding reading not resolved; ";
      return false;
    }
    return all_pass({xi.check, check_factorization_unitaries(), check_u_bar_unitary(),
                     check_factorization_identity()},
                    d);
  }});

  criteria.push_back({9, "winding numbers 1/8/8/16 and the 32 orientation signs", 600.0,
                      [&](std::string& d) {
    if (!all_pass({check_orientation_dets()}, d)) return false;
    struct Target {
      const char* label;
      MatFun fun;
      long expect;
    };
    std::vector<Target> targets;
    targets.push_back({"w", w_fun(), 1});
    targets.push_back({"iota4(w)", iota4_w(), 8});
    targets.push_back({"iota4'(w)", iota4p_w(), 8});
    targets.push_back({"block matrix of projections", u_bar(), 16});
    for (const auto& t : targets) {
      CompiledUnitary cu(t.fun);
      DegreeEstimate e = degree_of_unitary(cu, degree_samples, seed);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: %.4f +- %.4f; ", t.label, e.estimate, e.std_error);
      d += buf;
      if (std::fabs(e.estimate - (double)t.expect) > 0.2) {
        d += "outside +-0.2; ";
        return false;
      }
      if (!e.snapped || *e.snapped != t.expect) {
        d += "did not snap uniquely; ";
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({10, "presentations: characters and commutativity certificates", 10.0,
                      [&](std::string& d) {
    return all_pass({check_character_tables(), check_a3_rewrite_chain(), check_a3_commutator(4),
                     check_a2_commutator()},
                    d);
  }});

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s, budget %.0f s)%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.label.c_str(), secs, c.budget_s, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (ok && !in_budget) std::printf("       over budget\n");
  }
  std::printf("%d/%zu criteria passed\n", (int)criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
