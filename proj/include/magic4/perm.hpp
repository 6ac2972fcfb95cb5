#pragma once

// Permutations in one-line notation: a Perm p stores the images
// (p(1) p(2) ... p(n)) and acts on 1-based indices.  Composition is
// (s * t)(j) = s(t(j)), i.e. t acts first.

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <vector>

namespace magic4 {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    assert(is_bijection(img_));
  }
  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  int n() const { return (int)img_.size(); }
  int operator()(int j) const { return img_[j - 1]; }  // 1-based

  friend Perm operator*(const Perm& s, const Perm& t) {
    assert(s.n() == t.n());
    std::vector<int> v(s.n());
    for (int j = 1; j <= s.n(); ++j) v[j - 1] = s(t(j));
    return Perm(std::move(v));
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  Perm inverse() const {
    std::vector<int> v(n());
    for (int j = 1; j <= n(); ++j) v[img_[j - 1] - 1] = j;
    return Perm(std::move(v));
  }

  int sign() const {
    int inv = 0;
    for (size_t i = 0; i < img_.size(); ++i)
      for (size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }

  std::string str() const {
    std::string s = "(";
    for (int x : img_) s += std::to_string(x);
    return s + ")";
  }

  static std::vector<Perm> symmetric_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

 private:
  static bool is_bijection(const std::vector<int>& v) {
    std::vector<int> w = v;
    std::sort(w.begin(), w.end());
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] != (int)i + 1) return false;
    return true;
  }
  std::vector<int> img_;
};

}  // namespace magic4
