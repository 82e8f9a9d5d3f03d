#include "sp3gk/whittaker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sp3gk {

KType parse_ktype(const std::string& s) {
  if (s == "lll") return KType::Lll;
  if (s == "l+1ll") return KType::Up;
  if (s == "lll-1") return KType::Down;
  throw std::invalid_argument("unknown K-type '" + s + "' (expected lll, l+1ll or lll-1)");
}

std::string ktype_name(KType t) {
  switch (t) {
    case KType::Lll: return "lll";
    case KType::Up: return "l+1ll";
    case KType::Down: return "lll-1";
  }
  return "";
}

Dominant ktype_weight(KType t, int l) {
  switch (t) {
    case KType::Lll: return {l, l, l};
    case KType::Up: return {l + 1, l, l};
    case KType::Down: return {l, l, l - 1};
  }
  return {};
}

int ktype_dim(KType t) { return t == KType::Lll ? 1 : 3; }

std::vector<Pattern> ktype_basis(KType t, int l) {
  Pattern m = Pattern::constant(l);
  switch (t) {
    case KType::Lll: return {m};
    case KType::Up:
      return {m.add(1, 0, 0, 1, 0, 1), m.add(1, 0, 0, 1, 0, 0), m.add(1, 0, 0, 0, 0, 0)};
    case KType::Down:
      return {m.add(0, 0, -1, 0, 0, 0), m.add(0, 0, -1, 0, -1, 0),
              m.add(0, 0, -1, 0, -1, -1)};
  }
  return {};
}

namespace {

bool is_diagonal_sigma(const SigmaChar& s) { return s.s1 == s.s2 && s.s2 == s.s3; }

int mod2(int l) { return ((l % 2) + 2) % 2; }

}  // namespace

void check_admissible(const SigmaChar& s, KType t, int l) {
  if (!s.valid()) throw std::invalid_argument("sigma entries must be 0 or 1");
  if (is_diagonal_sigma(s) != (t == KType::Lll))
    throw std::invalid_argument("K-type " + ktype_name(t) + " is not peripheral for sigma " +
                                s.str());
  if (mod2(l) != s.epsilon())
    throw std::invalid_argument("parity mismatch: l must be congruent to epsilon_sigma = " +
                                std::to_string(s.epsilon()) + " mod 2");
}

// ---------------------------------------------------------------- eigenvalues

namespace {

NuPoly sq(const NuPoly& p) { return p * p; }
NuPoly nu2(int i) { return sq(NuPoly::nu(i)); }
NuPoly lsh(int c) { return NuPoly::l() + NuPoly(c); }  // l + c

void check_kind(const SigmaChar& s, KType t, int i) {
  if (!s.valid()) throw std::invalid_argument("sigma entries must be 0 or 1");
  if (is_diagonal_sigma(s) != (t == KType::Lll))
    throw std::invalid_argument("K-type " + ktype_name(t) + " is not peripheral for sigma " +
                                s.str());
  if (i < 0 || i > 3) throw std::invalid_argument("operator index must be 0..3");
  if (i == 0 && t == KType::Lll)
    throw std::invalid_argument("the D-relation eigenvalue needs a three-dimensional K-type");
}

}  // namespace

NuPoly chi(const SigmaChar& s, KType t, int i) {
  check_kind(s, t, i);
  if (i == 0) {
    NuPoly r = -sq(NuPoly::l());
    for (int k = 1; k <= 3; ++k)
      if (s.delta(k)) r += nu2(k);
    return r;
  }
  // Shifts a_k added to each factor nu_k^2 - (l - c)^2.
  NuPoly lin(0);
  if (t == KType::Up) lin = NuPoly(1) - NuPoly(2) * NuPoly::l();
  if (t == KType::Down) lin = NuPoly(2) * NuPoly::l() - NuPoly(i == 2 ? 5 : 3);
  std::array<NuPoly, 4> a;
  for (int k = 1; k <= 3; ++k) a[k] = s.delta(k) ? lin : NuPoly(0);
  auto f = [&](int k, int c) { return nu2(k) - sq(lsh(-c)) + a[k]; };
  if (i == 1) {
    NuPoly r = (nu2(1) - sq(lsh(-3))) + (nu2(2) - sq(lsh(-2))) + (nu2(3) - sq(lsh(-1)));
    if (t == KType::Up) r += NuPoly(1) - NuPoly(2) * NuPoly::l();
    if (t == KType::Down) r += NuPoly(2) * NuPoly::l() - NuPoly(7);
    return r;
  }
  if (i == 2) return f(1, 2) * f(2, 2) + f(1, 2) * f(3, 1) + f(2, 1) * f(3, 1);
  return f(1, 1) * f(2, 1) * f(3, 1);
}

NuPoly chi_at(const SigmaChar& s, KType t, int i, int l) {
  return chi(s, t, i).subs(3, Q(l));
}

namespace {

using NuMat = std::vector<std::vector<NuPoly>>;

struct Factor {
  int sign, i, j;
  Dominant source;
};

struct Route {
  Q coeff;
  std::vector<Factor> chain;  // leftmost factor first
};

NuMat to_mat(const RMatrix& r) { return r.e; }

NuMat mat_mul(const NuMat& a, const NuMat& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  NuMat c(n, std::vector<NuPoly>(m));
  for (size_t r = 0; r < n; ++r) {
    if (a[r].size() != k) throw std::logic_error("matrix size mismatch");
    for (size_t q = 0; q < m; ++q)
      for (size_t p = 0; p < k; ++p) c[r][q] += a[r][p] * b[p][q];
  }
  return c;
}

std::vector<Route> routes(KType t, int i, int l) {
  auto D = [](int a, int b, int c) { return Dominant{a, b, c}; };
  auto F = [](int sign, int i, int j, Dominant d) { return Factor{sign, i, j, d}; };
  const int L = l;
  switch (t) {
    case KType::Lll:
      if (i == 1)
        return {{Q(1, 12), {F(1, 3, 3, D(L, L, L - 2)), F(-1, 3, 3, D(L, L, L))}}};
      if (i == 2)
        return {{Q(1, 192),
                 {F(1, 3, 3, D(L, L, L - 2)), F(1, 2, 2, D(L, L - 2, L - 2)),
                  F(-1, 2, 2, D(L, L, L - 2)), F(-1, 3, 3, D(L, L, L))}}};
      return {{Q(1, 20736),
               {F(1, 3, 3, D(L, L, L - 2)), F(1, 2, 2, D(L, L - 2, L - 2)),
                F(1, 1, 1, D(L - 2, L - 2, L - 2)), F(-1, 1, 1, D(L, L - 2, L - 2)),
                F(-1, 2, 2, D(L, L, L - 2)), F(-1, 3, 3, D(L, L, L))}}};
    case KType::Up:
      if (i == 0)
        return {{Q(1, 4), {F(1, 1, 3, D(L, L, L - 1)), F(-1, 1, 3, D(L + 1, L, L))}}};
      if (i == 1)
        return {{Q(1, 24), {F(1, 3, 3, D(L + 1, L, L - 2)), F(-1, 3, 3, D(L + 1, L, L))}},
                {Q(3, 24), {F(1, 1, 3, D(L, L, L - 1)), F(-1, 1, 3, D(L + 1, L, L))}}};
      if (i == 2)
        return {{Q(1, 1152),
                 {F(1, 3, 3, D(L + 1, L, L - 2)), F(1, 2, 2, D(L + 1, L - 2, L - 2)),
                  F(-1, 2, 2, D(L + 1, L, L - 2)), F(-1, 3, 3, D(L + 1, L, L))}},
                {Q(-64, 1152),
                 {F(1, 1, 3, D(L, L, L - 1)), F(1, 2, 3, D(L, L - 1, L - 2)),
                  F(-1, 2, 3, D(L, L, L - 1)), F(-1, 1, 3, D(L + 1, L, L))}}};
      return {{Q(1, 144),
               {F(1, 1, 3, D(L, L, L - 1)), F(1, 2, 3, D(L, L - 1, L - 2)),
                F(1, 1, 2, D(L - 1, L - 2, L - 2)), F(-1, 1, 2, D(L, L - 1, L - 2)),
                F(-1, 2, 3, D(L, L, L - 1)), F(-1, 1, 3, D(L + 1, L, L))}}};
    case KType::Down:
      if (i == 0)
        return {{Q(1, 4), {F(-1, 1, 3, D(L + 1, L, L)), F(1, 1, 3, D(L, L, L - 1))}}};
      if (i == 1)
        return {{Q(1, 72), {F(1, 3, 3, D(L, L, L - 3)), F(-1, 3, 3, D(L, L, L - 1))}},
                {Q(-16, 72), {F(1, 2, 3, D(L, L - 1, L - 2)), F(-1, 2, 3, D(L, L, L - 1))}}};
      if (i == 2)
        return {{Q(1, 72),
                 {F(1, 2, 3, D(L, L - 1, L - 2)), F(1, 1, 2, D(L - 1, L - 2, L - 2)),
                  F(-1, 1, 2, D(L, L - 1, L - 2)), F(-1, 2, 3, D(L, L, L - 1))}},
                {Q(3, 72),
                 {F(1, 2, 3, D(L, L - 1, L - 2)), F(1, 2, 3, D(L, L - 2, L - 3)),
                  F(-1, 2, 3, D(L, L - 1, L - 2)), F(-1, 2, 3, D(L, L, L - 1))}}};
      return {{Q(1, 144),
               {F(1, 2, 3, D(L, L - 1, L - 2)), F(1, 1, 2, D(L - 1, L - 2, L - 2)),
                F(1, 1, 3, D(L - 2, L - 2, L - 3)), F(-1, 1, 3, D(L - 1, L - 2, L - 2)),
                F(-1, 1, 2, D(L, L - 1, L - 2)), F(-1, 2, 3, D(L, L, L - 1))}}};
  }
  return {};
}

}  // namespace

NuPoly chi_oracle(const SigmaChar& s, KType t, int i, int l) {
  check_kind(s, t, i);
  check_admissible(s, t, l);
  const Dominant w = ktype_weight(t, l);
  NuMat total;
  for (const Route& r : routes(t, i, l)) {
    NuMat acc;
    Dominant expect_target = w;
    for (const Factor& f : r.chain) {
      RMatrix m = rmatrix(s, f.source, f.sign, f.i, f.j);
      if (m.target != expect_target) throw std::logic_error("route does not compose");
      expect_target = m.source;
      acc = acc.empty() ? to_mat(m) : mat_mul(acc, to_mat(m));
    }
    if (expect_target != w) throw std::logic_error("route does not close");
    Q coeff = r.coeff;
    coeff.canonicalize();
    for (auto& row : acc)
      for (auto& e : row) e = coeff * e;
    if (total.empty()) {
      total = acc;
    } else {
      for (size_t a = 0; a < total.size(); ++a)
        for (size_t b = 0; b < total[a].size(); ++b) total[a][b] += acc[a][b];
    }
  }
  if (total.size() != 1 || total[0].size() != 1)
    throw std::logic_error("composition is not scalar");
  return total[0][0];
}

// ---------------------------------------------------------------- WeylOp

WeylOp::WeylOp(const GQ& c) {
  if (!c.is_zero()) t_[{{0, 0, 0}, {0, 0, 0}}] = c;
}

WeylOp WeylOp::z(int i) {
  WeylOp r;
  Exp3 a{0, 0, 0};
  a.at(i - 1) = 1;
  r.t_[{a, {0, 0, 0}}] = GQ(1);
  return r;
}

WeylOp WeylOp::theta(int i) {
  WeylOp r;
  Exp3 b{0, 0, 0};
  b.at(i - 1) = 1;
  r.t_[{{0, 0, 0}, b}] = GQ(1);
  return r;
}

void WeylOp::add_term(const Exp3& zdeg, const Exp3& tdeg, const GQ& c) {
  if (c.is_zero()) return;
  for (int k = 0; k < 3; ++k)
    if (zdeg[k] < 0 || tdeg[k] < 0) throw std::invalid_argument("negative exponent");
  auto key = std::make_pair(zdeg, tdeg);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

std::vector<std::pair<WeylOp::Key, GQ>> WeylOp::sorted_terms() const {
  std::vector<std::pair<Key, GQ>> v(t_.begin(), t_.end());
  auto deg = [](const Key& k) {
    int d = 0;
    for (int i = 0; i < 3; ++i) d += k.first[i] + k.second[i];
    return d;
  };
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int da = deg(a.first), db = deg(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return v;
}

WeylOp operator+(const WeylOp& a, const WeylOp& b) {
  WeylOp r = a;
  r += b;
  return r;
}

WeylOp operator-(const WeylOp& a, const WeylOp& b) {
  WeylOp r = a;
  r -= b;
  return r;
}

WeylOp WeylOp::operator-() const {
  WeylOp r;
  for (auto& [k, c] : t_) r.t_[k] = -c;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

namespace {

// Coefficients of (theta + c)^b as a polynomial in theta.
std::vector<Q> shifted_power(int b, int c) {
  std::vector<Q> p{Q(1)};
  for (int s = 0; s < b; ++s) {
    std::vector<Q> n(p.size() + 1);
    for (size_t k = 0; k < p.size(); ++k) {
      n[k] += p[k] * c;
      n[k + 1] += p[k];
    }
    p = std::move(n);
  }
  return p;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  WeylOp r;
  for (auto& [ka, ca] : a.t_) {
    for (auto& [kb, cb] : b.t_) {
      // theta^p z^q = z^q (theta + q)^p, one coordinate at a time.
      std::array<std::vector<Q>, 3> f;
      for (int i = 0; i < 3; ++i) f[i] = shifted_power(ka.second[i], kb.first[i]);
      Exp3 zdeg;
      for (int i = 0; i < 3; ++i) zdeg[i] = ka.first[i] + kb.first[i];
      GQ c = ca * cb;
      for (size_t i0 = 0; i0 < f[0].size(); ++i0) {
        if (f[0][i0] == 0) continue;
        for (size_t i1 = 0; i1 < f[1].size(); ++i1) {
          if (f[1][i1] == 0) continue;
          for (size_t i2 = 0; i2 < f[2].size(); ++i2) {
            if (f[2][i2] == 0) continue;
            Exp3 tdeg{static_cast<int>(i0) + kb.second[0], static_cast<int>(i1) + kb.second[1],
                      static_cast<int>(i2) + kb.second[2]};
            r.add_term(zdeg, tdeg, c * GQ(f[0][i0] * f[1][i1] * f[2][i2]));
          }
        }
      }
    }
  }
  return r;
}

WeylOp pow(const WeylOp& a, int e) {
  WeylOp r(1L);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

WeylOp::ZPoly WeylOp::apply(const ZPoly& f) const {
  ZPoly out;
  for (auto& [k, c] : t_) {
    for (auto& [m, fc] : f) {
      Q s(1);
      for (int i = 0; i < 3; ++i)
        for (int p = 0; p < k.second[i]; ++p) s *= m[i];
      if (s == 0) continue;
      Exp3 d{m[0] + k.first[0], m[1] + k.first[1], m[2] + k.first[2]};
      GQ v = c * fc * GQ(s);
      auto it = out.find(d);
      if (it == out.end()) {
        out.emplace(d, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::string WeylOp::str(char var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int i = 0; i < 3; ++i) {
      if (k.first[i]) os << "*" << var << i + 1 << (k.first[i] > 1 ? "^" + std::to_string(k.first[i]) : "");
    }
    for (int i = 0; i < 3; ++i) {
      if (k.second[i])
        os << "*d" << var << i + 1 << (k.second[i] > 1 ? "^" + std::to_string(k.second[i]) : "");
    }
  }
  return os.str();
}

namespace {

std::string latex_q(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  Q a = abs(q);
  return std::string(q < 0 ? "-" : "") + "\\frac{" + a.get_num().get_str() + "}{" +
         a.get_den().get_str() + "}";
}

std::string latex_gq(const GQ& c) {
  if (c.im == 0) return latex_q(c.re);
  if (c.re == 0) {
    if (c.im == 1) return "\\sqrt{-1}";
    if (c.im == -1) return "-\\sqrt{-1}";
    return latex_q(c.im) + "\\sqrt{-1}";
  }
  return "(" + latex_q(c.re) + "+" + latex_q(c.im) + "\\sqrt{-1})";
}

}  // namespace

std::string WeylOp::latex(char var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : sorted_terms()) {
    std::string s = latex_gq(c);
    bool unit = k.first != Exp3{0, 0, 0} || k.second != Exp3{0, 0, 0};
    if (!first) {
      if (s[0] == '-') {
        os << " - ";
        s = s.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (unit && s == "1") s = "";
    if (unit && s == "-1") s = "-";
    os << s;
    for (int i = 0; i < 3; ++i)
      if (k.first[i]) {
        os << var << "_{" << i + 1 << "}";
        if (k.first[i] > 1) os << "^{" << k.first[i] << "}";
      }
    for (int i = 0; i < 3; ++i)
      if (k.second[i]) {
        os << "\\partial_{" << var << "_{" << i + 1 << "}}";
        if (k.second[i] > 1) os << "^{" << k.second[i] << "}";
      }
  }
  return os.str();
}

WeylOp y_to_x(const WeylOp& op) {
  WeylOp r;
  for (auto& [k, c] : op.terms()) {
    Exp3 zdeg = k.first, tdeg = k.second;
    Q s(1);
    for (int i = 0; i < 2; ++i) {
      if (zdeg[i] % 2) throw std::domain_error("odd power of y" + std::to_string(i + 1) +
                                               " has no x-coordinate form");
      for (int p = 0; p < zdeg[i]; ++p) s *= 2;
      zdeg[i] /= 2;
      for (int p = 0; p < tdeg[i]; ++p) s *= 2;
    }
    r.add_term(zdeg, tdeg, c * GQ(s));
  }
  return r;
}

// ---------------------------------------------------------------- radial reduction

QMatrix kaction_table(KType t, int l, int p, int q) {
  const int d = ktype_dim(t);
  QMatrix a(d, std::vector<Q>(d));
  if (t == KType::Lll) {
    if (p == q) a[0][0] = l;
    return a;
  }
  if (t == KType::Up) {
    if (p == q) {
      for (int i = 1; i <= 3; ++i) a[i - 1][i - 1] = l + (i == p ? 1 : 0);
    } else {
      a[p - 1][q - 1] = 1;  // kappa(E_pq) phi_q = phi_p
    }
    return a;
  }
  if (p == q) {
    for (int i = 1; i <= 3; ++i) a[i - 1][i - 1] = l - (4 - i == p ? 1 : 0);
  } else {
    // kappa(E_pq) phi_{4-p} = (-1)^{p+q+1} phi_{4-q}
    a[4 - q - 1][4 - p - 1] = ((p + q + 1) % 2) ? -1 : 1;
  }
  return a;
}

namespace {

QMatrix qmul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size();
  QMatrix c(n, std::vector<Q>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Images in the y-coordinates.
WeylOp y_image(int g) {
  const GQ I = GQ::I();
  if (g == gen_root(kE12)) return WeylOp(I) * WeylOp::z(1);
  if (g == gen_root(kE23m)) return WeylOp(I) * WeylOp::z(2);
  if (g == gen_root(k2E3)) return WeylOp(GQ(0, Q(1, 2))) * WeylOp::z(3);
  if (g == gen_H(1)) return WeylOp::theta(1);
  if (g == gen_H(2)) return WeylOp::theta(2) - WeylOp::theta(1);
  if (g == gen_H(3)) return WeylOp(2L) * WeylOp::theta(3) - WeylOp::theta(2);
  throw std::domain_error("generator " + gen_name(g) +
                          " has no radial image; reduce modulo [n,n] first");
}

}  // namespace

OpMatrix radial_reduce(const UEA& u, KType t, int l, Coords c) {
  const int d = ktype_dim(t);
  std::map<int, QMatrix> table;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) table[gen_kappa(p, q)] = kaction_table(t, l, p, q);
  std::map<int, WeylOp> image;
  OpMatrix w(d, std::vector<WeylOp>(d));
  for (auto& [mono, coef] : u.terms()) {
    WeylOp na(coef);
    QMatrix k(d, std::vector<Q>(d));
    for (int i = 0; i < d; ++i) k[i][i] = 1;
    for (int g = 0; g < kNumGen; ++g) {
      for (int e = 0; e < mono[g]; ++e) {
        if (g >= gen_kappa(1, 1)) {
          k = qmul(k, table.at(g));
        } else {
          auto it = image.find(g);
          if (it == image.end()) it = image.emplace(g, y_image(g)).first;
          na = na * it->second;
        }
      }
    }
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < d; ++col)
        if (k[col][row] != 0) w[row][col] += na * WeylOp(GQ(k[col][row]));
  }
  if (c == Coords::X)
    for (auto& r : w)
      for (auto& e : r) e = y_to_x(e);
  return w;
}

// ---------------------------------------------------------------- systems

namespace {

const UEA& cached_c(int i) {
  static std::map<int, UEA> cache;
  auto it = cache.find(i);
  if (it == cache.end()) it = cache.emplace(i, reduce_mod_nn(c_operator(i))).first;
  return it->second;
}

const UEA& cached_d(int first_sign, int k, int i) {
  static std::map<std::array<int, 3>, UEA> cache;
  std::array<int, 3> key{first_sign, k, i};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, reduce_mod_nn(d_operator(first_sign, k, i))).first;
  return it->second;
}

std::vector<std::vector<int>> identity_pattern(int d) {
  std::vector<std::vector<int>> p(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) p[i][i] = 1;
  return p;
}

}  // namespace

RadialSystem holonomic_system(const SigmaChar& s, int l, KType t) {
  check_admissible(s, t, l);
  RadialSystem sys;
  sys.ktype = t;
  sys.sigma = s;
  sys.l = l;
  sys.coords = t == KType::Lll ? Coords::X : Coords::Y;
  const int d = ktype_dim(t);
  if (t != KType::Lll) {
    Equation eq;
    eq.name = "D";
    eq.op.assign(d, std::vector<WeylOp>(d));
    eq.pattern.assign(d, std::vector<int>(d, 0));
    eq.rhs = chi_at(s, t, 0, l);
    for (int i = 1; i <= 3; ++i) {
      if (t == KType::Up) {
        // sum_k D^{(+,-)}_{ik} phi_k = chi~ phi_i
        for (int k = 1; k <= 3; ++k) {
          OpMatrix w = radial_reduce(cached_d(1, i, k), t, l, sys.coords);
          for (int j = 0; j < d; ++j) eq.op[i - 1][j] += w[k - 1][j];
        }
        eq.pattern[i - 1][i - 1] = 1;
      } else {
        // -D_{i3} phi_1 + D_{i2} phi_2 - D_{i1} phi_3 = (-1)^i chi~ phi_{4-i}
        for (int k = 1; k <= 3; ++k) {
          int sgn = k == 2 ? 1 : -1;
          OpMatrix w = radial_reduce(cached_d(-1, i, 4 - k), t, l, sys.coords);
          for (int j = 0; j < d; ++j) eq.op[i - 1][j] += WeylOp(static_cast<long>(sgn)) * w[k - 1][j];
        }
        eq.pattern[i - 1][3 - i] = i % 2 ? -1 : 1;
      }
    }
    sys.equations.push_back(std::move(eq));
  }
  for (int i = 1; i <= 3; ++i) {
    Equation eq;
    eq.name = "C" + std::to_string(2 * i);
    eq.op = radial_reduce(cached_c(i), t, l, sys.coords);
    eq.rhs = chi_at(s, t, i, l);
    eq.pattern = identity_pattern(d);
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

namespace {

std::string gq_str(const GQ& c) { return to_string(c); }

bool find_scale(const RadialSystem& a, const RadialSystem& b, GQ& scale) {
  for (size_t e = 0; e < b.equations.size(); ++e)
    for (size_t r = 0; r < b.equations[e].op.size(); ++r)
      for (size_t c = 0; c < b.equations[e].op[r].size(); ++c) {
        const WeylOp& db = b.equations[e].op[r][c];
        if (db.is_zero()) continue;
        auto key = db.sorted_terms().back();
        auto it = a.equations[e].op[r][c].terms().find(key.first);
        if (it == a.equations[e].op[r][c].terms().end()) return false;
        scale = it->second / key.second;
        return true;
      }
  return false;
}

}  // namespace

SystemComparison compare_systems(const RadialSystem& mech, const RadialSystem& disp) {
  SystemComparison out;
  std::ostringstream diff;
  if (mech.equations.size() != disp.equations.size()) {
    out.diff = "different number of equations";
    return out;
  }
  if (!find_scale(mech, disp, out.scale)) {
    out.diff = "no common leading term";
    return out;
  }
  const char var = mech.coords == Coords::X ? 'x' : 'y';
  for (size_t e = 0; e < mech.equations.size(); ++e) {
    const Equation& a = mech.equations[e];
    const Equation& b = disp.equations[e];
    if (a.name != b.name || a.op.size() != b.op.size()) {
      out.diff = "equation " + a.name + " does not match " + b.name;
      return out;
    }
    if (a.rhs != b.rhs) {
      out.diff = a.name + ": eigenvalue " + a.rhs.str() + " vs " + b.rhs.str();
      return out;
    }
    for (size_t r = 0; r < a.op.size(); ++r)
      for (size_t c = 0; c < a.op[r].size(); ++c) {
        WeylOp scaled = b.op[r][c] * WeylOp(out.scale);
        if (a.op[r][c] != scaled) {
          diff << a.name << " row " << r + 1 << " column " << c + 1 << ":\n  mechanical "
               << a.op[r][c].str(var) << "\n  displayed  " << scaled.str(var)
               << "\n  difference " << (a.op[r][c] - scaled).str(var);
          out.diff = diff.str();
          return out;
        }
        if (GQ(a.pattern[r][c]) != out.scale * GQ(b.pattern[r][c])) {
          diff << a.name << " row " << r + 1 << " column " << c + 1
               << ": eigenvalue placement differs (scale " << gq_str(out.scale) << ")";
          out.diff = diff.str();
          return out;
        }
      }
  }
  out.equal = true;
  return out;
}

}  // namespace sp3gk
