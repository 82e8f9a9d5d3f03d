#include "sp3gk/glmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace sp3gk {

std::string Gen::str() const { return "E" + std::to_string(p) + std::to_string(q); }

Gen parse_gen(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'E' || t[0] == 'e')) t = t.substr(1);
  if (t.size() != 2 || t[0] < '1' || t[0] > '3' || t[1] < '1' || t[1] > '3')
    throw std::invalid_argument("generator must be Epq with 1<=p,q<=3");
  return {t[0] - '0', t[1] - '0'};
}

std::vector<Gen> all_gens() {
  std::vector<Gen> g;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) g.push_back({p, q});
  return g;
}

ModuleElement ModuleElement::basis(const Pattern& m) {
  ModuleElement e;
  e.type = m.type();
  e.terms[m] = 1;
  return e;
}

void ModuleElement::add(const Pattern& m, const Q& c) {
  if (c == 0 || !m.valid()) return;
  auto [it, ins] = terms.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (auto& [m, c] : o.terms) add(m, c);
  return *this;
}

ModuleElement ModuleElement::operator*(const Q& c) const {
  ModuleElement r;
  r.type = type;
  if (c == 0) return r;
  for (auto& [m, v] : terms) r.terms[m] = v * c;
  return r;
}

ModuleElement act(const Gen& g, const Pattern& M) {
  ModuleElement r;
  r.type = M.type();
  const int m13 = M.m13, m23 = M.m23, m33 = M.m33, m12 = M.m12, m22 = M.m22,
            m11 = M.m11;
  const int d = M.delta();
  if (g.p == g.q) {
    r.add(M, M.wt(g.p));
    return r;
  }
  switch (g.p * 10 + g.q) {
    case 12:
      r.add(M.add_mid(0, 0, 1), m12 - m11);
      r.add(M.add_mid(0, 0, 1, -1), Q((m23 - m22) * M.chip()));
      break;
    case 21:
      r.add(M.add_mid(0, 0, -1), m11 - m22);
      r.add(M.add_mid(0, 0, -1, -1), Q((m12 - m23) * M.chim()));
      break;
    case 23:
      r.add(M.add_mid(1, 0, 0), m13 - m12);
      r.add(M.add_mid(1, 0, 0, -1), Q((m13 - m12 - d) * M.chim()));
      break;
    case 32:
      r.add(M.add_mid(0, -1, 0), m22 - m33);
      r.add(M.add_mid(0, -1, 0, -1), Q((m22 - m33 + d) * M.chip()));
      break;
    case 13:
      r.add(M.add_mid(1, 0, 1), m13 - m12);
      r.add(M.add_mid(1, 0, 1, -1), -M.C1bar());
      break;
    case 31:
      r.add(M.add_mid(0, -1, -1), m33 - m22);
      r.add(M.add_mid(0, -1, -1, -1), M.C1());
      break;
  }
  return r;
}

ModuleElement act(const Gen& g, const ModuleElement& v) {
  ModuleElement r;
  r.type = v.type;
  for (auto& [m, c] : v.terms) r += act(g, m) * c;
  return r;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i][i] = 1;
  return m;
}

void SparseMat::add(int r, int c, const Q& v) {
  if (v == 0) return;
  auto& cc = col.at(c);
  auto [it, ins] = cc.try_emplace(r, v);
  if (!ins) {
    it->second += v;
    if (it->second == 0) cc.erase(it);
  }
}

Q SparseMat::get(int r, int c) const {
  auto it = col.at(c).find(r);
  return it == col[c].end() ? Q(0) : it->second;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("dimension mismatch");
  SparseMat r(rows, o.cols);
  for (int j = 0; j < o.cols; ++j)
    for (auto& [k, b] : o.col[j])
      for (auto& [i, a] : col[k]) r.add(i, j, a * b);
  return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  SparseMat r = *this;
  for (int j = 0; j < o.cols; ++j)
    for (auto& [i, v] : o.col[j]) r.add(i, j, v);
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  return *this + o.scaled(-1);
}

SparseMat SparseMat::scaled(const Q& s) const {
  SparseMat r(rows, cols);
  if (s == 0) return r;
  for (int j = 0; j < cols; ++j)
    for (auto& [i, v] : col[j]) r.col[j][i] = v * s;
  return r;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && col == o.col;
}

bool SparseMat::is_zero() const {
  for (auto& c : col)
    if (!c.empty()) return false;
  return true;
}

SparseMat matrix_of(const Gen& g, const Dominant& lam) {
  PatternIndex idx(enumerate(lam));
  SparseMat m(idx.size(), idx.size());
  for (int j = 0; j < idx.size(); ++j)
    for (auto& [p, c] : act(g, idx.at(j)).terms) m.add(idx.find(p), j, c);
  return m;
}

bool dual_intertwiner_check(const Dominant& lam) {
  Dominant dl{-lam.l3, -lam.l2, -lam.l1};
  PatternIndex src(enumerate(lam)), dst(enumerate(dl));
  int n = src.size();
  SparseMat T(n, n);
  for (int j = 0; j < n; ++j) T.add(dst.find(src.at(j).dual()), j, 1);
  struct Pair { Gen x; Gen wx; int sign; };
  std::vector<Pair> gens = {
      {{1, 1}, {1, 1}, -1}, {{2, 2}, {2, 2}, -1}, {{3, 3}, {3, 3}, -1},
      {{1, 2}, {2, 1}, 1},  {{2, 1}, {1, 2}, 1},  {{2, 3}, {3, 2}, 1},
      {{3, 2}, {2, 3}, 1}};
  for (auto& g : gens) {
    SparseMat lhs = matrix_of(g.x, dl) * T;
    SparseMat rhs = T * matrix_of(g.wx, lam).scaled(g.sign);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::string PIndex::str() const {
  return std::string("X") + (sign > 0 ? "+" : "-") + std::to_string(i) +
         std::to_string(j);
}

int pair_pos(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int t[4][4] = {{0, 0, 0, 0}, {0, 0, 1, 2}, {0, 1, 3, 4}, {0, 2, 4, 5}};
  return t[i][j];
}

std::pair<int, int> pos_pair(int pos) {
  static const std::pair<int, int> t[6] = {{1, 1}, {1, 2}, {1, 3},
                                           {2, 2}, {2, 3}, {3, 3}};
  return t[pos];
}

bool PVector::is_zero() const {
  for (auto& x : c)
    if (x != 0) return false;
  return true;
}

PVector& PVector::operator+=(const PVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) sign = o.sign;
  if (sign != o.sign) throw std::invalid_argument("mixed p+ and p- vectors");
  for (int k = 0; k < 6; ++k) c[k] += o.c[k];
  return *this;
}

PVector PVector::operator*(const Q& s) const {
  PVector r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string PVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 6; ++k) {
    if (c[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    auto [i, j] = pos_pair(k);
    if (c[k] != 1) os << c[k].get_str() << "*";
    os << PIndex{sign, i, j}.str();
  }
  return first ? "0" : os.str();
}

Marking marking(const PIndex& x) {
  int pos = pair_pos(x.i, x.j);
  if (x.sign > 0) {
    static const Pattern t[6] = {{2, 0, 0, 2, 0, 2}, {2, 0, 0, 2, 0, 1},
                                 {2, 0, 0, 1, 0, 1}, {2, 0, 0, 2, 0, 0},
                                 {2, 0, 0, 1, 0, 0}, {2, 0, 0, 0, 0, 0}};
    return {t[pos], 1};
  }
  // (X-33, -X-23, X-22, X-13, -X-12, X-11) <-> listed patterns.
  static const Pattern t[6] = {{0, 0, -2, 0, -2, -2}, {0, 0, -2, 0, -2, -1},
                               {0, 0, -2, 0, -1, -1}, {0, 0, -2, 0, -2, 0},
                               {0, 0, -2, 0, -1, 0},  {0, 0, -2, 0, 0, 0}};
  static const int s[6] = {1, -1, 1, 1, -1, 1};
  return {t[pos], s[pos]};
}

PVector from_pattern(int sign, const Pattern& m) {
  for (int pos = 0; pos < 6; ++pos) {
    auto [i, j] = pos_pair(pos);
    Marking mk = marking({sign, i, j});
    if (mk.pattern == m) {
      PVector v;
      v.sign = sign;
      v.c[pos] = mk.coeff;  // f(M) = coeff * X since coeff = +-1
      return v;
    }
  }
  throw std::invalid_argument("pattern is not a marked basis vector");
}

namespace {
// The printed tables swap the kappa(E13), kappa(E31) entries of rows 13 and
// 22; the rows below carry the bracket-verified values.
// Entry (row X, column kappa(E_pq)) as (coefficient, target position) or
// coefficient 0. Columns ordered E11,E22,E33,E12,E21,E23,E32,E13,E31.
struct Cell { int c; int pos; };
int col_of(const Gen& g) {
  static const int t[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 7}, {0, 4, 1, 5}, {0, 8, 6, 2}};
  return t[g.p][g.q];
}
// Table for p_+: row X_{+ij} gives [kappa(E), X_{+ij}].
const Cell kPlus[6][9] = {
    {{2, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 1}, {0, 0}, {0, 0}, {0, 0}, {2, 2}},
    {{1, 1}, {1, 1}, {0, 0}, {1, 0}, {1, 3}, {0, 0}, {1, 2}, {0, 0}, {1, 4}},
    {{1, 2}, {0, 0}, {1, 2}, {0, 0}, {1, 4}, {1, 1}, {0, 0}, {1, 0}, {1, 5}},
    {{0, 0}, {2, 3}, {0, 0}, {2, 1}, {0, 0}, {0, 0}, {2, 4}, {0, 0}, {0, 0}},
    {{0, 0}, {1, 4}, {1, 4}, {1, 2}, {0, 0}, {1, 3}, {1, 5}, {1, 1}, {0, 0}},
    {{0, 0}, {0, 0}, {2, 5}, {0, 0}, {0, 0}, {2, 4}, {0, 0}, {2, 2}, {0, 0}}};
// Table for p_-: row -X_{-ij} gives [kappa(E), -X_{-ij}].
const Cell kMinus[6][9] = {
    {{2, 0}, {0, 0}, {0, 0}, {2, 1}, {0, 0}, {0, 0}, {0, 0}, {2, 2}, {0, 0}},
    {{1, 1}, {1, 1}, {0, 0}, {1, 3}, {1, 0}, {1, 2}, {0, 0}, {1, 4}, {0, 0}},
    {{1, 2}, {0, 0}, {1, 2}, {1, 4}, {0, 0}, {0, 0}, {1, 1}, {1, 5}, {1, 0}},
    {{0, 0}, {2, 3}, {0, 0}, {0, 0}, {2, 1}, {2, 4}, {0, 0}, {0, 0}, {0, 0}},
    {{0, 0}, {1, 4}, {1, 4}, {0, 0}, {1, 2}, {1, 5}, {1, 3}, {0, 0}, {1, 1}},
    {{0, 0}, {0, 0}, {2, 5}, {0, 0}, {0, 0}, {0, 0}, {2, 4}, {0, 0}, {2, 2}}};
}  // namespace

PVector adjoint_action(const Gen& g, const PIndex& x) {
  int row = pair_pos(x.i, x.j);
  int c = col_of(g);
  const Cell& cell = (x.sign > 0 ? kPlus : kMinus)[row][c];
  PVector v;
  v.sign = x.sign;
  if (cell.c == 0) return v;
  v.c[cell.pos] = x.sign > 0 ? Q(cell.c) : Q(-cell.c);
  return v;
}

}  // namespace sp3gk
