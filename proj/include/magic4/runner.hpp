#pragma once

// Check registry and orchestration: builds the shared context (fixtures,
// integer tables), runs the selected suites with their dependency edges
// honored, and renders deterministic reports (ordering and content are
// canonical; only the timing fields vary run to run).

#include "magic4/commutant.hpp"
#include "magic4/csv.hpp"
#include "magic4/degree.hpp"
#include "magic4/factorization.hpp"
#include "magic4/geometry.hpp"
#include "magic4/ktheory.hpp"
#include "magic4/pauli.hpp"
#include "magic4/presentations.hpp"
#include "magic4/report.hpp"
#include "magic4/rp3.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace magic4 {

struct RunConfig {
  long samples = 1000000;
  std::uint64_t seed = 42;
  int cone_bound = 6;
  std::string fixtures_dir = "fixtures";
  int jobs = 0;                      // 0 = hardware concurrency
  std::vector<std::string> suites;   // empty = all
};

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"pauli",   "theorem-a", "theorem-b", "geometry",
                                             "ktheory", "degree",    "presentations"};
  return s;
}

struct RunEntry {
  std::string name, suite, status, claim, witness;
  double elapsed_ms = 0.0;
};

struct RunReport {
  std::vector<RunEntry> checks;
  int passed = 0, failed = 0, skipped = 0, errored = 0;
  bool ok() const { return failed == 0 && errored == 0; }
};

namespace detail_runner {

struct CheckSpec {
  std::string name, suite;
  std::vector<std::string> deps;
  bool heavy = false;  // runs sequentially with internal parallelism
  std::function<CheckResult()> fn;
};

inline std::string fmt_estimate(const char* label, const DegreeEstimate& e, long expect) {
  std::string s = std::string(label) + ": estimate " + std::to_string(e.estimate) +
                  " +- " + std::to_string(e.std_error) + " (";
  s += std::to_string(e.samples) + " samples, seed " + std::to_string(e.seed) + ")";
  if (e.snapped)
    s += ", snaps to " + std::to_string(*e.snapped);
  else
    s += ", no unique integer in the 3-sigma interval";
  s += ", expected " + std::to_string(expect);
  return s;
}

inline CheckResult winding_check(const char* name, const char* label, const MatFun& f,
                                 long expect, const RunConfig& cfg) {
  CompiledUnitary cu(f);
  DegreeEstimate e = degree_of_unitary(cu, cfg.samples, cfg.seed, 10, cfg.jobs);
  std::string detail = fmt_estimate(label, e, expect);
  bool close = std::fabs(e.estimate - (double)expect) <= 0.2;
  bool snapped = e.snapped && *e.snapped == expect;
  if (!close || !snapped)
    return CheckResult::fail(name, "degree", detail, "estimate did not pin the expected class");
  return CheckResult::ok(name, "degree", detail);
}

}  // namespace detail_runner

class Verifier {
 public:
  explicit Verifier(RunConfig cfg) : cfg_(std::move(cfg)) {
    tables_ = load_ktables(cfg_.fixtures_dir);  // throws ConfigError when absent
    delta_ = delta_data_from_fixtures(tables_);
    build_registry();
  }

  const RunConfig& config() const { return cfg_; }

  std::vector<std::string> check_names() const {
    std::vector<std::string> out;
    for (const auto& c : registry_) out.push_back(c.suite + "/" + c.name);
    return out;
  }

  RunReport run() const {
    std::set<std::string> selected_suites(cfg_.suites.begin(), cfg_.suites.end());
    if (selected_suites.empty() || selected_suites.count("all"))
      selected_suites = std::set<std::string>(all_suites().begin(), all_suites().end());
    for (const auto& s : selected_suites)
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end() &&
          s != "all")
        throw ConfigError("unknown suite: " + s);

    // select checks, pulling dependencies in transitively
    std::map<std::string, const detail_runner::CheckSpec*> by_name;
    for (const auto& c : registry_) by_name[c.name] = &c;
    std::set<std::string> selected;
    std::function<void(const detail_runner::CheckSpec&)> pull =
        [&](const detail_runner::CheckSpec& c) {
          if (!selected.insert(c.name).second) return;
          for (const auto& d : c.deps) pull(*by_name.at(d));
        };
    for (const auto& c : registry_)
      if (selected_suites.count(c.suite)) pull(c);

    // wave scheduling: a check runs once its dependencies are done
    std::map<std::string, RunEntry> results;
    std::set<std::string> done, failed_or_skipped;
    auto ready = [&](const detail_runner::CheckSpec& c) {
      for (const auto& d : c.deps)
        if (!done.count(d)) return false;
      return true;
    };
    // dep status is resolved before a wave launches, so it is passed by
    // value; the shared sets are touched only between waves
    auto execute = [](const detail_runner::CheckSpec& c, bool dep_bad) {
      RunEntry e;
      e.name = c.name;
      e.suite = c.suite;
      if (dep_bad) {
        e.status = "skipped";
        e.witness = "dependency failed";
        return e;
      }
      auto t0 = std::chrono::steady_clock::now();
      // a failing claim and an internal error are different outcomes
      try {
        CheckResult r = c.fn();
        e.status = r.pass ? "pass" : "fail";
        e.claim = r.claim;
        e.witness = r.witness;
      } catch (const std::exception& ex) {
        e.status = "error";
        e.witness = ex.what();
      }
      e.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      return e;
    };

    while (done.size() < selected.size()) {
      std::vector<const detail_runner::CheckSpec*> light, heavy;
      for (const auto& c : registry_) {
        if (!selected.count(c.name) || done.count(c.name)) continue;
        if (!ready(c)) continue;
        (c.heavy ? heavy : light).push_back(&c);
      }
      if (light.empty() && heavy.empty())
        throw std::logic_error("cyclic check dependencies");
      auto dep_bad = [&](const detail_runner::CheckSpec& c) {
        for (const auto& d : c.deps)
          if (failed_or_skipped.count(d)) return true;
        return false;
      };
      std::vector<std::pair<const detail_runner::CheckSpec*, std::future<RunEntry>>> futs;
      bool parallel = cfg_.jobs != 1;
      for (const auto* c : light)
        futs.emplace_back(
            c, std::async(parallel ? std::launch::async : std::launch::deferred, execute,
                          std::cref(*c), dep_bad(*c)));
      for (auto& [c, f] : futs) {
        RunEntry e = f.get();
        if (e.status != "pass") failed_or_skipped.insert(c->name);
        done.insert(c->name);
        results[c->name] = std::move(e);
      }
      // heavy checks one at a time; they parallelize internally
      for (const auto* c : heavy) {
        RunEntry e = execute(*c, dep_bad(*c));
        if (e.status != "pass") failed_or_skipped.insert(c->name);
        done.insert(c->name);
        results[c->name] = std::move(e);
      }
    }

    RunReport rep;
    for (auto& [name, e] : results) rep.checks.push_back(std::move(e));
    std::sort(rep.checks.begin(), rep.checks.end(), [](const RunEntry& a, const RunEntry& b) {
      return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
    });
    for (const auto& e : rep.checks) {
      if (e.status == "pass") ++rep.passed;
      if (e.status == "fail") ++rep.failed;
      if (e.status == "skipped") ++rep.skipped;
      if (e.status == "error") ++rep.errored;
    }
    return rep;
  }

 private:
  void build_registry() {
    using detail_runner::CheckSpec;
    auto add = [this](std::string suite, std::string name, std::function<CheckResult()> fn,
                      std::vector<std::string> deps = {}, bool heavy = false) {
      registry_.push_back(CheckSpec{std::move(name), std::move(suite), std::move(deps), heavy,
                                    std::move(fn)});
    };
    const RunConfig& cfg = cfg_;
    const KTables& t = tables_;
    const DeltaData& d = delta_;

    add("pauli", "epsilon-table", [&t] { return check_epsilon_table(t.t1); });
    add("pauli", "epsilon-symmetrization", [&t] { return check_epsilon_symmetrization(t.t2); });
    add("pauli", "klein-group", [] { return check_klein_group(); });
    add("pauli", "sign-homomorphism", [] { return check_sign_homomorphism(); });
    add("pauli", "pauli-products", [] { return check_pauli_relation(); });
    add("pauli", "cocycle-identity", [] { return check_cocycle_identity(); });
    add("pauli", "u-display", [] { return check_u_display(); });
    add("pauli", "u-twist", [] { return check_u_twist(); }, {"u-display"});
    add("pauli", "u-squares", [] { return check_u_squares(); }, {"u-display"});
    add("pauli", "u-intertwine", [] { return check_intertwine(); }, {"u-display"});
    add("pauli", "scalar-inverse", [] { return check_scalar_inverse_identity(); });

    add("theorem-a", "f-relations", [] { return check_f_relations(); });
    add("theorem-a", "p-display", [] { return check_p_display(); });
    add("theorem-a", "p-projections", [] { return check_p_projections(); }, {"p-display"});
    add("theorem-a", "p-conjugation", [] { return check_p_conjugation(); }, {"p-display"});
    add("theorem-a", "p-row-col-sums", [] { return check_p_sums(); }, {"p-display"});
    add("theorem-a", "rf-bridge", [] { return check_rf_bridge(); }, {"p-display"});
    add("theorem-a", "phi-matrix-units", [] { return check_phi_matrix_units(); });
    add("theorem-a", "phi-functions", [] { return check_phi_functions(); }, {"p-display"});

    add("theorem-b", "beta-fixes-p", [] { return check_beta_fixes_p(); });
    add("theorem-b", "beta-scales-u", [] { return check_beta_scales_u(); });
    add("theorem-b", "beta-action", [] { return check_beta_action_composition(); });
    add("theorem-b", "commutant-pairs", [] { return check_commutant_pairs(); });
    add("theorem-b", "commutant-triples", [] { return check_commutant_triples(); });

    add("geometry", "fixed-circles", [] { return check_fixed_circles(); });
    add("geometry", "no-fixed-points", [] { return check_no_fixed_points(); });
    add("geometry", "special-points", [] { return check_special_points(); }, {"fixed-circles"});
    add("geometry", "papa-equalities", [] { return check_papa(); }, {"special-points"});
    add("geometry", "hexahedron-vertices", [] { return check_hexahedron_vertices(); });
    add("geometry", "hexahedron-sampling",
        [&cfg] { return check_hexahedron_sampling(cfg.samples / 10, cfg.seed); }, {}, true);
    add("geometry", "v-disjointness",
        [&cfg] { return check_v_disjointness(cfg.samples / 10, cfg.seed); }, {}, true);

    add("ktheory", "delta-table", [&t] { return check_delta_table(t); });
    add("ktheory", "p-class-table", [&t] { return check_p_class_table(t); });
    add("ktheory", "kernel-rank", [&d] { return check_kernel_rank(d); }, {"delta-table"});
    add("ktheory", "cokernel-invariants", [&d] { return check_cokernel(d); }, {"delta-table"});
    add("ktheory", "p-class-lattice", [&d] { return check_p_class_lattice(d); },
        {"delta-table", "p-class-table"});
    add("ktheory", "eta-kernel-image", [&d] { return check_eta(d); }, {"delta-table"});
    add("ktheory", "three-by-three", [] { return check_three_by_three(); });
    add("ktheory", "positive-cone",
        [&d, &cfg] { return check_positive_cone(d, cfg.cone_bound); },
        {"p-class-lattice", "three-by-three"}, true);

    add("degree", "orientation-dets", [] { return check_orientation_dets(); });
    add("degree", "xi-iota", [] { return check_xi_iota().check; });
    add("degree", "factorization-unitaries", [] { return check_factorization_unitaries(); },
        {"xi-iota"});
    add("degree", "u-bar-unitary", [] { return check_u_bar_unitary(); });
    add("degree", "factorization-identity", [] { return check_factorization_identity(); },
        {"xi-iota", "factorization-unitaries", "u-bar-unitary"});
    add("degree", "winding-w",
        [&cfg] { return detail_runner::winding_check("winding-w", "[w]", w_fun(), 1, cfg); }, {},
        true);
    add("degree", "winding-iota4",
        [&cfg] {
          return detail_runner::winding_check("winding-iota4", "[iota_4(w)]", iota4_w(), 8, cfg);
        },
        {"xi-iota"}, true);
    add("degree", "winding-iota4p",
        [&cfg] {
          return detail_runner::winding_check("winding-iota4p", "[iota'_4(w)]", iota4p_w(), 8,
                                              cfg);
        },
        {"xi-iota"}, true);
    add("degree", "winding-u-bar",
        [&cfg] { return detail_runner::winding_check("winding-u-bar", "[UBar]", u_bar(), 16, cfg); },
        {"u-bar-unitary"}, true);

    add("presentations", "character-tables", [] { return check_character_tables(); });
    add("presentations", "a2-commutator", [] { return check_a2_commutator(); }, {}, true);
    add("presentations", "a3-rewrite-chain", [] { return check_a3_rewrite_chain(); }, {}, true);
    add("presentations", "derived-orthogonality", [] { return check_derived_orthogonality(); },
        {}, true);
    add("presentations", "a3-commutator", [] { return check_a3_commutator(4); },
        {"a3-rewrite-chain"}, true);
  }

  RunConfig cfg_;
  KTables tables_;
  DeltaData delta_;
  std::vector<detail_runner::CheckSpec> registry_;
};

}  // namespace magic4
