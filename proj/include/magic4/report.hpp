#pragma once

#include <string>
#include <vector>

namespace magic4 {

// Outcome of a single named check.  `claim` states the identity or fact
// being verified; `witness` carries failure details and stays empty on pass.
struct CheckResult {
  std::string name;
  std::string suite;
  bool pass = false;
  std::string claim;
  std::string witness;

  static CheckResult ok(std::string name, std::string suite, std::string claim) {
    return {std::move(name), std::move(suite), true, std::move(claim), ""};
  }
  static CheckResult fail(std::string name, std::string suite, std::string claim,
                          std::string witness) {
    return {std::move(name), std::move(suite), false, std::move(claim), std::move(witness)};
  }
};

// Tiny helper used by the check implementations: collects the first few
// failing cases so the report shows a usable witness instead of a wall.
class WitnessLog {
 public:
  void note(const std::string& w) {
    ++failures_;
    if (failures_ <= 5) {
      if (!text_.empty()) text_ += "; ";
      text_ += w;
    }
  }
  bool clean() const { return failures_ == 0; }
  int failures() const { return failures_; }
  std::string text() const {
    if (failures_ > 5) return text_ + "; (+" + std::to_string(failures_ - 5) + " more)";
    return text_;
  }

 private:
  int failures_ = 0;
  std::string text_;
};

}  // namespace magic4
