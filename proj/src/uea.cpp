#include "sp3gk/uea.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sp3gk {

namespace {
const char* kRootNames[9] = {"e1-e2", "e1-e3", "e2-e3", "e1+e2", "e1+e3",
                             "e2+e3", "2e1",   "2e2",   "2e3"};
// (j,k) data per root kind; for 2e_i both are i.
const int kRootJK[9][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3},
                           {2, 3}, {1, 1}, {2, 2}, {3, 3}};
const int kKappaPQ[9][2] = {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1},
                            {2, 3}, {3, 2}, {1, 3}, {3, 1}};
}  // namespace

int gen_root(int kind) { return kind; }
int gen_H(int i) { return 8 + i; }
int gen_kappa(int p, int q) {
  for (int k = 0; k < 9; ++k)
    if (kKappaPQ[k][0] == p && kKappaPQ[k][1] == q) return 12 + k;
  throw std::invalid_argument("bad kappa index");
}

std::string gen_name(int g) {
  if (g < 9) return std::string("E[") + kRootNames[g] + "]";
  if (g < 12) return "H" + std::to_string(g - 8);
  int k = g - 12;
  return "k(E" + std::to_string(kKappaPQ[k][0]) + std::to_string(kKappaPQ[k][1]) + ")";
}

bool in_nn(int g) {
  return g == kE13m || g == kE12p || g == kE13p || g == kE23p || g == k2E1 ||
         g == k2E2;
}

Mat6 mat_zero() {
  Mat6 m;
  for (auto& r : m)
    for (auto& x : r) x = GQ(0);
  return m;
}

Mat6 mat_mul(const Mat6& a, const Mat6& b) {
  Mat6 r = mat_zero();
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 6; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat6 mat_add(const Mat6& a, const Mat6& b, const GQ& s) {
  Mat6 r = a;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r[i][j] += b[i][j] * s;
  return r;
}

Mat6 mat_bracket(const Mat6& a, const Mat6& b) {
  return mat_add(mat_mul(a, b), mat_mul(b, a), GQ(-1));
}

bool in_sp3(const Mat6& x) {
  // J X + X^t J = 0 with J = [[0,1],[-1,0]].
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const GQ &A = x[i][j], &B = x[i][j + 3], &C = x[i + 3][j],
               &D = x[i + 3][j + 3];
      if (B != x[j][i + 3]) return false;
      if (C != x[j + 3][i]) return false;
      if (D != -x[j][i]) return false;
      (void)A;
    }
  return true;
}

LieElement LieElement::gen(int g) {
  LieElement e;
  e.c.at(g) = GQ(1);
  return e;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r = *this;
  for (int k = 0; k < kNumGen; ++k) r.c[k] += o.c[k];
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement r = *this;
  for (int k = 0; k < kNumGen; ++k) r.c[k] -= o.c[k];
  return r;
}

LieElement LieElement::operator*(const GQ& s) const {
  LieElement r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool LieElement::is_zero() const {
  for (auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

std::string LieElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kNumGen; ++k) {
    if (c[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c[k]) << ")*" << gen_name(k);
  }
  return first ? "0" : os.str();
}

Mat6 root_matrix(int kind, int sign) {
  Mat6 m = mat_zero();
  int j = kRootJK[kind][0] - 1, k = kRootJK[kind][1] - 1;
  if (kind <= kE23m) {
    m[j][k] = GQ(1);
    m[k + 3][j + 3] = GQ(-1);
  } else if (kind <= kE23p) {
    m[j][k + 3] = GQ(1);
    m[k][j + 3] = GQ(1);
  } else {
    m[j][j + 3] = GQ(1);
  }
  if (sign > 0) return m;
  Mat6 t = mat_zero();  // theta(X) = -X^t
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = -m[b][a];
  return t;
}

Mat6 H_matrix(int i) {
  Mat6 m = mat_zero();
  m[i - 1][i - 1] = GQ(1);
  m[i + 2][i + 2] = GQ(-1);
  return m;
}

Mat6 kappa_matrix(int p, int q) {
  // E_pq = A + iB with A skew, B symmetric; kappa(A+iB) = [[A,B],[-B,A]].
  Mat6 m = mat_zero();
  int a = p - 1, b = q - 1;
  Q h(1, 2);
  auto add = [&](int r, int c, const GQ& v) { m[r][c] += v; };
  // A = (E_pq - E_qp)/2 on both diagonal blocks.
  add(a, b, GQ(h));
  add(b, a, GQ(-h));
  add(a + 3, b + 3, GQ(h));
  add(b + 3, a + 3, GQ(-h));
  // B = -i (E_pq + E_qp)/2 in the upper-right block, -B lower-left.
  GQ mb(0, -h);
  add(a, b + 3, mb);
  add(b, a + 3, mb);
  add(a + 3, b, -mb);
  add(b + 3, a, -mb);
  return m;
}

Mat6 X_matrix(int sign, int i, int j) {
  Mat6 m = mat_zero();
  Q y[3][3] = {};
  y[i - 1][j - 1] += Q(1, 2);
  y[j - 1][i - 1] += Q(1, 2);
  GQ s(0, sign);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (y[a][b] == 0) continue;
      GQ v(y[a][b]);
      m[a][b] = v;
      m[a][b + 3] = s * v;
      m[a + 3][b] = s * v;
      m[a + 3][b + 3] = -v;
    }
  return m;
}

Mat6 gen_matrix(int g) {
  if (g < 9) return root_matrix(g, 1);
  if (g < 12) return H_matrix(g - 8);
  int k = g - 12;
  return kappa_matrix(kKappaPQ[k][0], kKappaPQ[k][1]);
}

Mat6 to_matrix(const LieElement& x) {
  Mat6 m = mat_zero();
  for (int g = 0; g < kNumGen; ++g)
    if (!x.c[g].is_zero()) m = mat_add(m, gen_matrix(g), x.c[g]);
  return m;
}

LieElement decompose(const Mat6& x) {
  if (!in_sp3(x)) throw std::invalid_argument("matrix not in sp(3,C)");
  LieElement e;
  GQ A[3][3], B[3][3], C[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      A[i][j] = x[i][j];
      B[i][j] = x[i][j + 3];
      C[i][j] = x[i + 3][j];
    }
  // k-part [[S,T],[-T,S]]: T = -C, S skew with S_ij = A_ij below the diagonal.
  GQ S[3][3], T[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T[i][j] = -C[i][j];
      if (i > j) S[i][j] = A[i][j];
      else if (i < j) S[i][j] = -A[j][i];
    }
  // kappa coordinates: Z = S + iT.
  GQ I = GQ::I();
  for (int k = 0; k < 9; ++k) {
    int p = kKappaPQ[k][0] - 1, q = kKappaPQ[k][1] - 1;
    e.c[12 + k] = S[p][q] + I * T[p][q];
  }
  for (int i = 0; i < 3; ++i) e.c[9 + i] = A[i][i];
  // n-part: U_jk = A_jk + A_kj, V = B + C.
  e.c[kE12] = A[0][1] + A[1][0];
  e.c[kE13m] = A[0][2] + A[2][0];
  e.c[kE23m] = A[1][2] + A[2][1];
  e.c[kE12p] = B[0][1] + C[0][1];
  e.c[kE13p] = B[0][2] + C[0][2];
  e.c[kE23p] = B[1][2] + C[1][2];
  e.c[k2E1] = B[0][0] + C[0][0];
  e.c[k2E2] = B[1][1] + C[1][1];
  e.c[k2E3] = B[2][2] + C[2][2];
  if (to_matrix(e) != x) throw std::logic_error("Iwasawa decomposition failed");
  return e;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  return decompose(mat_bracket(to_matrix(a), to_matrix(b)));
}

LieElement root_vector(int kind, int sign) {
  return decompose(root_matrix(kind, sign));
}

LieElement X_elem(int sign, int i, int j) { return decompose(X_matrix(sign, i, j)); }

LieElement X_iwasawa_formula(int sign, int i, int j) {
  if (i > j) std::swap(i, j);
  GQ s(sign);
  GQ I = GQ::I();
  if (i == j) {
    int two = k2E1 + i - 1;
    return LieElement::gen(two) * (s * I * GQ(2)) + LieElement::gen(gen_H(i)) +
           LieElement::gen(gen_kappa(i, i)) * s;
  }
  int minus = (i == 1 && j == 2) ? kE12 : (i == 1 ? kE13m : kE23m);
  int plus = (i == 1 && j == 2) ? kE12p : (i == 1 ? kE13p : kE23p);
  LieElement k = sign > 0 ? LieElement::gen(gen_kappa(j, i))
                          : LieElement::gen(gen_kappa(i, j)) * GQ(-1);
  return LieElement::gen(minus) + LieElement::gen(plus) * (s * I) + k;
}

// ---------------------------------------------------------------------------
// Universal enveloping algebra.

namespace {

struct BracketTable {
  // table[a][b] = [gen a, gen b] as sparse list.
  std::vector<std::pair<int, GQ>> t[kNumGen][kNumGen];
  BracketTable() {
    for (int a = 0; a < kNumGen; ++a)
      for (int b = 0; b < kNumGen; ++b) {
        LieElement r = bracket(LieElement::gen(a), LieElement::gen(b));
        for (int k = 0; k < kNumGen; ++k)
          if (!r.c[k].is_zero()) t[a][b].push_back({k, r.c[k]});
      }
  }
};

const BracketTable& table() {
  static const BracketTable t;
  return t;
}

struct KeyHash {
  size_t operator()(const std::pair<Monomial, int>& k) const {
    size_t h = 1469598103934665603ull;
    for (auto x : k.first) h = (h ^ x) * 1099511628211ull;
    return (h ^ static_cast<size_t>(k.second)) * 1099511628211ull;
  }
};

using Terms = std::map<Monomial, GQ>;

void add_into(Terms& t, const Monomial& m, const GQ& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

const Terms& mul_mono_gen(const Monomial& m, int g);

Terms mul_terms_gen(const Terms& e, int g) {
  Terms r;
  for (auto& [m, c] : e)
    for (auto& [mm, cc] : mul_mono_gen(m, g)) add_into(r, mm, c * cc);
  return r;
}

// Normal form of (monomial m) * (generator g), memoized.
const Terms& mul_mono_gen(const Monomial& m, int g) {
  static std::unordered_map<std::pair<Monomial, int>, Terms, KeyHash> memo;
  auto key = std::make_pair(m, g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int h = -1;
  for (int k = kNumGen - 1; k >= 0; --k)
    if (m[k]) { h = k; break; }
  Terms r;
  if (h <= g) {
    Monomial mm = m;
    ++mm[g];
    r[mm] = GQ(1);
  } else {
    // m = m' h, and h g = g h + [h, g].
    Monomial mp = m;
    --mp[h];
    Terms first = mul_terms_gen(mul_mono_gen(mp, g), h);
    for (auto& [mm, c] : first) add_into(r, mm, c);
    for (auto& [k, c] : table().t[h][g])
      for (auto& [mm, cc] : mul_mono_gen(mp, k)) add_into(r, mm, c * cc);
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

UEA::UEA(const GQ& c) {
  if (!c.is_zero()) t_[Monomial{}] = c;
}

UEA UEA::gen(int g) {
  UEA u;
  Monomial m{};
  m.at(g) = 1;
  u.t_[m] = GQ(1);
  return u;
}

UEA UEA::lie(const LieElement& x) {
  UEA u;
  for (int g = 0; g < kNumGen; ++g)
    if (!x.c[g].is_zero()) {
      Monomial m{};
      m[g] = 1;
      u.t_[m] = x.c[g];
    }
  return u;
}

void UEA::add_term(const Monomial& m, const GQ& c) { add_into(t_, m, c); }

UEA& UEA::operator+=(const UEA& o) {
  for (auto& [m, c] : o.t_) add_into(t_, m, c);
  return *this;
}

UEA& UEA::operator-=(const UEA& o) {
  for (auto& [m, c] : o.t_) add_into(t_, m, -c);
  return *this;
}

UEA UEA::operator+(const UEA& o) const { UEA r = *this; r += o; return r; }
UEA UEA::operator-(const UEA& o) const { UEA r = *this; r -= o; return r; }
UEA UEA::operator-() const { return *this * GQ(-1); }

UEA UEA::operator*(const GQ& s) const {
  UEA r;
  if (s.is_zero()) return r;
  for (auto& [m, c] : t_) r.t_[m] = c * s;
  return r;
}

UEA UEA::operator*(const UEA& o) const {
  UEA r;
  for (auto& [mb, cb] : o.t_) {
    // Expand the right monomial as a word and fold it in from the left.
    Terms cur = t_;
    for (int g = 0; g < kNumGen; ++g)
      for (int e = 0; e < mb[g]; ++e) cur = mul_terms_gen(cur, g);
    for (auto& [m, c] : cur) add_into(r.t_, m, c * cb);
  }
  return r;
}

std::string UEA::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int g = 0; g < kNumGen; ++g)
      if (m[g]) {
        os << "*" << gen_name(g);
        if (m[g] > 1) os << "^" << int(m[g]);
      }
  }
  return os.str();
}

UEA commutator(const UEA& a, const UEA& b) { return a * b - b * a; }

UEA normal_order(const std::vector<LieElement>& word) {
  UEA r(1);
  for (auto& x : word) r = r * UEA::lie(x);
  return r;
}

UEA reduce_mod_nn(const UEA& u) {
  UEA r;
  for (auto& [m, c] : u.terms()) {
    bool drop = false;
    for (int g = 0; g < 9; ++g)
      if (m[g] && in_nn(g)) drop = true;
    if (!drop) r.add_term(m, c);
  }
  return r;
}

UEA minor_elem(int sign, int i, int j) {
  auto X = [&](int a, int b) { return UEA::X(sign, a, b); };
  auto det2 = [](const UEA& a, const UEA& b, const UEA& c, const UEA& d) {
    return a * d - b * c;
  };
  if (i > j) std::swap(i, j);
  switch (i * 10 + j) {
    case 11: return det2(X(2, 2), X(2, 3), X(2, 3), X(3, 3));
    case 22: return det2(X(1, 1), X(1, 3), X(1, 3), X(3, 3));
    case 33: return det2(X(1, 1), X(1, 2), X(1, 2), X(2, 2));
    case 12: return det2(X(1, 2), X(2, 3), X(1, 3), X(3, 3));
    case 13: return det2(X(1, 2), X(2, 2), X(1, 3), X(2, 3));
    case 23: return det2(X(1, 1), X(1, 2), X(1, 3), X(2, 3));
  }
  throw std::invalid_argument("bad minor index");
}

UEA m3(int sign) {
  // p_+- is abelian, so the determinant is unambiguous; expand along row 1.
  auto X = [&](int a, int b) { return UEA::X(sign, a, b); };
  return X(1, 1) * minor_elem(sign, 1, 1) - X(1, 2) * minor_elem(sign, 1, 2) +
         X(1, 3) * minor_elem(sign, 1, 3);
}

UMat3 chirality(int i, int sign) {
  UMat3 m;
  if (i == 1) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) m[a - 1][b - 1] = UEA::X(sign, a, b);
  } else if (i == 2) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        UEA v = minor_elem(sign, a, b);
        m[a - 1][b - 1] = ((a + b) % 2) ? -v : v;
      }
  } else if (i == 3) {
    m[0][0] = m3(sign);
  } else {
    throw std::invalid_argument("chirality index must be 1, 2 or 3");
  }
  return m;
}

UEA c_operator(int i) {
  if (i == 3) return m3(1) * m3(-1);
  UMat3 p = chirality(i, 1), n = chirality(i, -1);
  UEA r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r += p[a][b] * n[b][a];
  return r;
}

UEA d_operator(int first_sign, int k, int i) {
  UEA r;
  for (int j = 1; j <= 3; ++j)
    r += UEA::X(first_sign, k, j) * UEA::X(-first_sign, j, i);
  return r;
}

}  // namespace sp3gk
