// Command-line front end for the verification battery.
//
//   verify [suites...]            run everything or the named suites
//   verify ktheory --cone-bound 6
//   verify degree --samples 2000000 --seed 42
//
// Exit codes: 0 all checks pass, 1 at least one verification failure,
// 2 configuration error (missing fixtures, unknown suite, bad flags).

#include "magic4/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::ordered_json;

ordered_json report_to_json(const magic4::RunConfig& cfg, const magic4::RunReport& rep) {
  ordered_json out;
  out["flags"] = {{"samples", cfg.samples},
                  {"seed", cfg.seed},
                  {"cone_bound", cfg.cone_bound},
                  {"fixtures", cfg.fixtures_dir}};
  ordered_json checks = ordered_json::array();
  for (const auto& e : rep.checks) {
    ordered_json c;
    c["suite"] = e.suite;
    c["name"] = e.name;
    c["status"] = e.status;
    c["claim"] = e.claim;
    if (!e.witness.empty()) c["witness"] = e.witness;
    c["elapsed_ms"] = e.elapsed_ms;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["summary"] = {{"pass", rep.passed},
                    {"fail", rep.failed},
                    {"error", rep.errored},
                    {"skipped", rep.skipped}};
  return out;
}

void print_human(const magic4::RunReport& rep) {
  for (const auto& e : rep.checks) {
    const char* tag = e.status == "pass" ? "PASS"
                      : e.status == "fail" ? "FAIL"
                      : e.status == "error" ? "ERR " : "SKIP";
    std::printf("[%s] %s/%s (%.1f ms)\n", tag, e.suite.c_str(), e.name.c_str(), e.elapsed_ms);
    if (!e.claim.empty()) std::printf("       %s\n", e.claim.c_str());
    if (!e.witness.empty()) {
      // a failed check contradicts a stated claim; an error is ours
      const char* kind = e.status == "fail" ? "claim discrepancy" : "detail";
      std::printf("       %s: %s\n", kind, e.witness.c_str());
    }
  }
  std::printf("\n%d passed, %d failed, %d errored, %d skipped\n", rep.passed, rep.failed,
              rep.errored, rep.skipped);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification battery for the 4x4 magic square algebra"};
  magic4::RunConfig cfg;
  std::vector<std::string> positional;
  std::string json_path;
  bool list_only = false;
  app.add_option("suites", positional,
                 "suites to run: pauli theorem-a theorem-b geometry ktheory degree "
                 "presentations, or all");
  app.add_option("--suite", cfg.suites, "suite selector (repeatable)");
  app.add_option("--samples", cfg.samples, "sample count for the sampled checks")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all sampled checks")->capture_default_str();
  app.add_option("--cone-bound", cfg.cone_bound, "height bound for the positive-cone sweep")
      ->capture_default_str();
  app.add_option("--json", json_path, "write the machine-readable report here");
  app.add_option("--fixtures", cfg.fixtures_dir, "directory with the six CSV tables")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = hardware, 1 = serial)")
      ->capture_default_str();
  app.add_flag("--list", list_only, "list registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto& s : positional) cfg.suites.push_back(s);

  try {
    magic4::Verifier verifier(cfg);
    if (list_only) {
      for (const auto& n : verifier.check_names()) std::printf("%s\n", n.c_str());
      return 0;
    }
    magic4::RunReport rep = verifier.run();
    print_human(rep);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::fprintf(stderr, "cannot write %s\n", json_path.c_str());
        return 2;
      }
      out << report_to_json(verifier.config(), rep).dump(2) << "\n";
    }
    return rep.ok() ? 0 : 1;
  } catch (const magic4::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  }
}
