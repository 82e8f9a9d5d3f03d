#pragma once
// Gelfand-Tsetlin patterns for gl(3).
#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sp3gk {

struct Dominant {
  int l1 = 0, l2 = 0, l3 = 0;
  bool is_dominant() const { return l1 >= l2 && l2 >= l3; }
  int spread() const { return l1 - l3; }
  auto operator<=>(const Dominant&) const = default;
  std::string str() const;
};

struct WeightVec {
  int w1 = 0, w2 = 0, w3 = 0;
  int operator[](int i) const { return i == 1 ? w1 : i == 2 ? w2 : w3; }
  auto operator<=>(const WeightVec&) const = default;
};

struct SigmaChar {
  int s1 = 0, s2 = 0, s3 = 0;
  int operator[](int i) const { return i == 1 ? s1 : i == 2 ? s2 : s3; }
  bool valid() const;
  // 0 for (1,0,0),(0,1,0),(0,0,1); 1 for (1,1,0),(1,0,1),(0,1,1).
  int epsilon() const;
  // delta_{sigma;i} = 0 iff epsilon == sigma_i.
  int delta(int i) const { return epsilon() == (*this)[i] ? 0 : 1; }
  auto operator<=>(const SigmaChar&) const = default;
  std::string str() const;
};

struct Pattern {
  int m13 = 0, m23 = 0, m33 = 0;
  int m12 = 0, m22 = 0;
  int m11 = 0;

  static Pattern constant(int l) { return {l, l, l, l, l, l}; }
  Dominant type() const { return {m13, m23, m33}; }
  bool valid() const;
  WeightVec weight() const;
  int wt(int p) const { return weight()[p]; }

  // Piecewise-linear pattern functions; defined on raw arrays.
  int delta() const { return m12 + m22 - m11 - m23; }
  int chip(int r = 0) const { return delta() > r ? 1 : 0; }
  int chim(int r = 0) const { return delta() < -r ? 1 : 0; }
  int C1() const { return std::min(m11 - m22, m12 - m23); }
  int C1bar() const { return std::min(m23 - m22, m12 - m11); }
  int C2() const { return C1() * C1bar(); }

  Pattern dual() const { return {-m33, -m23, -m13, -m22, -m12, -m11}; }
  // Raw increment M(top; mid; bot)[k] without validity check.
  Pattern add(int i13, int i23, int i33, int i12, int i22, int i11,
              int k = 0) const {
    return {m13 + i13, m23 + i23, m33 + i33,
            m12 + i12 + k, m22 + i22 - k, m11 + i11};
  }
  Pattern add_mid(int i12, int i22, int i11, int k = 0) const {
    return add(0, 0, 0, i12, i22, i11, k);
  }
  Pattern bracket(int k) const { return add(0, 0, 0, 0, 0, 0, k); }

  auto operator<=>(const Pattern&) const = default;
  std::array<int, 6> as_array() const { return {m13, m23, m33, m12, m22, m11}; }
  std::string str() const;
};

bool validate(const std::array<int, 6>& p);

// M(top; mid; bot)[k]; nullopt if the result violates interlacing.
std::optional<Pattern> shift(const Pattern& m, std::array<int, 3> top,
                             std::array<int, 2> mid, int bot, int k);

// Weyl dimension of V_lambda.
long weyl_dim(const Dominant& lam);

// All patterns of the given type in index order (position i has index i+1).
std::vector<Pattern> enumerate(const Dominant& lam);
std::vector<Pattern> sigma_enumerate(const Dominant& lam, const SigmaChar& s);
bool in_sigma(const Pattern& m, const SigmaChar& s);

// Index maps built from an enumeration.
class PatternIndex {
 public:
  PatternIndex() = default;
  explicit PatternIndex(std::vector<Pattern> pats);
  int size() const { return static_cast<int>(pats_.size()); }
  const std::vector<Pattern>& patterns() const { return pats_; }
  const Pattern& at(int i) const { return pats_.at(i); }
  // 0-based position or -1.
  int find(const Pattern& p) const;

 private:
  std::vector<Pattern> pats_;
};

Dominant parse_dominant(const std::string& s);
SigmaChar parse_sigma(const std::string& s);
// Accepts "m13,m23,m33;m12,m22;m11" or six comma-separated integers.
Pattern parse_pattern(const std::string& s);

}  // namespace sp3gk
