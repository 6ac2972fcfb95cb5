// Runs the CLI twice with identical flags and checks that the JSON reports
// agree byte-for-byte once the timing fields are stripped.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <verify-binary> <fixtures-dir>\n", argv[0]);
    return 2;
  }
  std::string verify = argv[1], fixtures = argv[2];
  auto run = [&](const std::string& out) {
    std::string cmd = verify + " pauli ktheory --fixtures " + fixtures + " --json " + out +
                      " > /dev/null";
    return std::system(cmd.c_str());
  };
  if (run("det_a.json") != 0 || run("det_b.json") != 0) {
    std::fprintf(stderr, "verify run failed\n");
    return 1;
  }
  auto load = [](const std::string& path) {
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    for (auto& c : j["checks"]) c.erase("elapsed_ms");
    return j;
  };
  nlohmann::json a = load("det_a.json"), b = load("det_b.json");
  std::remove("det_a.json");
  std::remove("det_b.json");
  if (a != b) {
    std::fprintf(stderr, "reports differ after stripping timing\n");
    return 1;
  }
  std::printf("reports identical modulo timing\n");
  return 0;
}
