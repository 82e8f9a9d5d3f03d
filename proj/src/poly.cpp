#include "sp3gk/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sp3gk {

std::string to_string(const Q& q) { return q.get_str(); }

GQ GQ::operator/(const GQ& o) const {
  Q n = o.re * o.re + o.im * o.im;
  if (n == 0) throw std::domain_error("division by zero");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string to_string(const GQ& z) {
  if (z.im == 0) return z.re.get_str();
  if (z.re == 0) return z.im.get_str() + "i";
  std::string s = z.re.get_str();
  s += (z.im > 0 ? "+" : "");
  return s + z.im.get_str() + "i";
}

Poly::Poly(const Q& c) {
  if (c != 0) t_[Mono{0, 0, 0, 0}] = c;
}

Poly Poly::var(int i) {
  Poly p;
  Mono m{0, 0, 0, 0};
  m.at(i) = 1;
  p.t_[m] = 1;
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0, 0, 0});
}

Q Poly::constant() const {
  auto it = t_.find(Mono{0, 0, 0, 0});
  return it == t_.end() ? Q(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
  return d;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m[v]);
  return d;
}

bool Poly::even_in_nu() const {
  for (auto& [m, c] : t_)
    for (int i = 0; i < 3; ++i)
      if (m[i] % 2) return false;
  return true;
}

void Poly::add_term(const Mono& m, const Q& c) {
  if (c == 0) return;
  auto [it, ins] = t_.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
Poly Poly::operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [a, ca] : t_)
    for (auto& [b, cb] : o.t_) {
      Mono m;
      for (int i = 0; i < 4; ++i) m[i] = a[i] + b[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly operator*(const Q& c, const Poly& p) { return Poly(c) * p; }

Poly pow(const Poly& p, int e) {
  Poly r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Poly Poly::subs(int v, const Q& q) const {
  Poly r;
  for (auto& [m, c] : t_) {
    Mono mm = m;
    Q f = c;
    for (int k = 0; k < m[v]; ++k) f *= q;
    mm[v] = 0;
    r.add_term(mm, f);
  }
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  static const char* names[4] = {"nu1", "nu2", "nu3", "l"};
  std::ostringstream os;
  bool first = true;
  // Highest degree first for readability.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Q a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (m == Mono{0, 0, 0, 0});
    if (a != 1 || unit) {
      os << a.get_str();
      if (!unit) os << "*";
    }
    bool need = false;
    for (int i = 0; i < 4; ++i) {
      if (!m[i]) continue;
      if (need) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      need = true;
    }
  }
  return os.str();
}

}  // namespace sp3gk
