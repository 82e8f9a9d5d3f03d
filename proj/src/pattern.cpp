#include "sp3gk/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sp3gk {

std::string Dominant::str() const {
  std::ostringstream os;
  os << "(" << l1 << "," << l2 << "," << l3 << ")";
  return os.str();
}

bool SigmaChar::valid() const {
  for (int s : {s1, s2, s3})
    if (s != 0 && s != 1) return false;
  return true;
}

int SigmaChar::epsilon() const { return (s1 + s2 + s3) >= 2 ? 1 : 0; }

std::string SigmaChar::str() const {
  std::ostringstream os;
  os << "(" << s1 << "," << s2 << "," << s3 << ")";
  return os.str();
}

bool Pattern::valid() const {
  return m13 >= m12 && m12 >= m23 && m23 >= m22 && m22 >= m33 &&
         m12 >= m11 && m11 >= m22;
}

WeightVec Pattern::weight() const {
  int w1 = m11;
  int w2 = m12 + m22 - w1;
  int w3 = m13 + m23 + m33 - m12 - m22;
  return {w1, w2, w3};
}

std::string Pattern::str() const {
  std::ostringstream os;
  os << "(" << m13 << "," << m23 << "," << m33 << ";" << m12 << "," << m22
     << ";" << m11 << ")";
  return os.str();
}

bool validate(const std::array<int, 6>& p) {
  return Pattern{p[0], p[1], p[2], p[3], p[4], p[5]}.valid();
}

std::optional<Pattern> shift(const Pattern& m, std::array<int, 3> top,
                             std::array<int, 2> mid, int bot, int k) {
  Pattern r = m.add(top[0], top[1], top[2], mid[0], mid[1], bot, k);
  if (!r.valid()) return std::nullopt;
  return r;
}

long weyl_dim(const Dominant& lam) {
  if (!lam.is_dominant()) return 0;
  long a = lam.l1 - lam.l2, b = lam.l2 - lam.l3;
  return (a + 1) * (b + 1) * (a + b + 2) / 2;
}

std::vector<Pattern> enumerate(const Dominant& lam) {
  if (!lam.is_dominant()) throw std::invalid_argument("not dominant");
  std::vector<Pattern> out;
  for (int m12 = lam.l2; m12 <= lam.l1; ++m12)
    for (int m22 = lam.l3; m22 <= lam.l2; ++m22)
      for (int m11 = m22; m11 <= m12; ++m11)
        out.push_back({lam.l1, lam.l2, lam.l3, m12, m22, m11});
  std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
    WeightVec wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa > wb;
    return a.m12 > b.m12;
  });
  return out;
}

bool in_sigma(const Pattern& m, const SigmaChar& s) {
  WeightVec w = m.weight();
  for (int p = 1; p <= 3; ++p)
    if (((w[p] - s[p]) % 2 + 2) % 2 != 0) return false;
  return true;
}

std::vector<Pattern> sigma_enumerate(const Dominant& lam, const SigmaChar& s) {
  std::vector<Pattern> out;
  for (auto& m : enumerate(lam))
    if (in_sigma(m, s)) out.push_back(m);
  return out;
}

PatternIndex::PatternIndex(std::vector<Pattern> pats) : pats_(std::move(pats)) {}

int PatternIndex::find(const Pattern& p) const {
  // Patterns are few; linear scan keeps ordering logic in one place.
  for (int i = 0; i < size(); ++i)
    if (pats_[i] == p) return i;
  return -1;
}

namespace {
std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      size_t pos = 0;
      int x = std::stoi(cur, &pos);
      if (pos != cur.size()) throw std::invalid_argument("bad integer: " + cur);
      v.push_back(x);
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ';' || c == ' ' || c == '(' || c == ')' || c == '[' ||
        c == ']')
      flush();
    else
      cur += c;
  }
  flush();
  return v;
}
}  // namespace

Dominant parse_dominant(const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != 3) throw std::invalid_argument("expected three integers");
  return {v[0], v[1], v[2]};
}

SigmaChar parse_sigma(const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != 3) throw std::invalid_argument("expected three integers");
  SigmaChar sc{v[0], v[1], v[2]};
  if (!sc.valid()) throw std::invalid_argument("sigma entries must be 0 or 1");
  return sc;
}

Pattern parse_pattern(const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != 6) throw std::invalid_argument("expected six integers");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace sp3gk
