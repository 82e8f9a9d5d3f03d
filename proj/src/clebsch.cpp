#include "sp3gk/clebsch.hpp"

#include <sstream>
#include <stdexcept>

namespace sp3gk {

void TensorElement::add(const Pattern& a, const Pattern& b, const Q& c) {
  if (c == 0 || !a.valid() || !b.valid()) return;
  auto [it, ins] = terms.try_emplace({a, b}, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

TensorElement TensorElement::operator*(const Q& c) const {
  TensorElement r;
  r.left_type = left_type;
  r.right_type = right_type;
  if (c == 0) return r;
  for (auto& [k, v] : terms) r.terms[k] = v * c;
  return r;
}

std::string TensorElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*f" << k.first.str() << "(x)f" << k.second.str();
  }
  return first ? "0" : os.str();
}

TensorElement act(const Gen& g, const TensorElement& t) {
  TensorElement r;
  r.left_type = t.left_type;
  r.right_type = t.right_type;
  for (auto& [k, c] : t.terms) {
    for (auto& [p, v] : act(g, k.first).terms) r.add(p, k.second, c * v);
    for (auto& [p, v] : act(g, k.second).terms) r.add(k.first, p, c * v);
  }
  return r;
}

WeightVec Direction::shift() const {
  int e[4] = {0, 0, 0, 0};
  if (kind == DirKind::Vec) {
    e[i] += 1;
  } else {
    int s = kind == DirKind::Pos ? 1 : -1;
    e[i] += s;
    e[j] += s;
  }
  return {e[1], e[2], e[3]};
}

Dominant Direction::right_type() const {
  switch (kind) {
    case DirKind::Vec: return {1, 0, 0};
    case DirKind::Pos: return {2, 0, 0};
    default: return {0, 0, -2};
  }
}

std::string Direction::str() const {
  if (kind == DirKind::Vec) return "e" + std::to_string(i);
  return std::string(kind == DirKind::Pos ? "+" : "-") + std::to_string(i) +
         std::to_string(j);
}

Direction parse_direction(const std::string& s) {
  if (s.size() == 2 && (s[0] == 'e' || s[0] == 'E') && s[1] >= '1' && s[1] <= '3')
    return {DirKind::Vec, s[1] - '0', s[1] - '0'};
  if (s.size() == 3 && (s[0] == '+' || s[0] == '-') && s[1] >= '1' &&
      s[1] <= '3' && s[2] >= '1' && s[2] <= '3' && s[1] <= s[2])
    return {s[0] == '+' ? DirKind::Pos : DirKind::Neg, s[1] - '0', s[2] - '0'};
  throw std::invalid_argument("direction must be e1|e2|e3|+ij|-ij with i<=j");
}

Dominant target_type(const Dominant& lam, const Direction& d) {
  WeightVec s = d.shift();
  return {lam.l1 + s.w1, lam.l2 + s.w2, lam.l3 + s.w3};
}

bool component_occurs(const Dominant& lam, const Direction& d) {
  if (!lam.is_dominant()) return false;
  Dominant t = target_type(lam, d);
  if (!t.is_dominant()) return false;
  if (d.kind == DirKind::Vec) return true;
  // Horizontal strip: the added (or removed) boxes lie in distinct columns.
  const Dominant& big = d.kind == DirKind::Pos ? t : lam;
  const Dominant& small = d.kind == DirKind::Pos ? lam : t;
  return big.l2 <= small.l1 && big.l3 <= small.l2;
}

Q Ebar(const Pattern& m) {
  return Q(m.C1()) * Q(m.m13 - m.m33 + 1 - m.C1bar());
}

Q Fbar(const Pattern& m) {
  return Q(-m.C2() - m.chip() * ((m.m13 - m.m12) * (m.m22 - m.m33) +
                                 (m.m13 - m.m33 + 1) * m.delta()));
}

Q Dbar(const Pattern& m) { return Q(-m.m22 + m.m33 + m.delta()); }

int vec_bound(int i, int j, int k) {
  // Order (jk) = 11, 01, 00.
  static const int b[4][3] = {{0, 0, 0}, {1, 2, 1}, {1, 1, 1}, {0, 1, 0}};
  int pos = (j == 1 && k == 1) ? 0 : (j == 0 && k == 1) ? 1 : 2;
  return b[i][pos];
}

Q vec_coeff(int i, int j, int k, int l, const Pattern& M) {
  if (l < 0 || l > vec_bound(i, j, k)) return 0;
  const Q m13 = M.m13, m23 = M.m23, m33 = M.m33, m12 = M.m12, m22 = M.m22;
  const Q C1b = M.C1bar(), C2 = M.C2();
  const Q chip = M.chip(), chim = M.chim();
  const int jk = j * 10 + k;
  switch (i) {
    case 1:
      if (jk == 11) return l == 0 ? (m13 - m12) * (m22 - m33) : Q(-Ebar(M));
      if (jk == 1) {
        if (l == 0) return -(m13 - m12) * (m22 - m33);
        if (l == 1) return Fbar(M);
        return -C2 * chip;
      }
      return l == 0 ? Q(-(m13 - m12) * (m13 - m22 + 1)) : C2;
    case 2:
      if (jk == 11) return l == 0 ? Q(m22 - m33) : Q(-Dbar(M) * chim);
      if (jk == 1) return l == 0 ? Q(-(m22 - m33)) : C1b;
      return l == 0 ? Q(-(m23 - m22)) : Q(-C1b * chim);
    case 3:
      if (jk == 11) return 1;
      if (jk == 1) return l == 0 ? Q(-1) : Q(-chip);
      return 1;
  }
  throw std::invalid_argument("bad injector index");
}

namespace {
int block_pos(int l, int k) {
  // Order (l,k) = (2,2),(2,1),(1,1),(2,0),(1,0),(0,0).
  static const int t[3][3] = {{5, -1, -1}, {4, 2, -1}, {3, 1, 0}};
  return t[l][k];
}
}  // namespace

int pos_bound(int i, int j, int l, int k) {
  static const int b[4][4][6] = {
      {},
      {{}, {2, 3, 2, 4, 3, 2}, {2, 2, 2, 3, 2, 2}, {1, 2, 1, 3, 2, 1}},
      {{}, {}, {2, 2, 2, 2, 2, 2}, {1, 1, 1, 2, 1, 1}},
      {{}, {}, {}, {0, 1, 0, 2, 1, 0}}};
  return b[i][j][block_pos(l, k)];
}

Q pos_coeff(int i, int j, int l, int k, int m, const Pattern& M) {
  if (m < 0 || m > pos_bound(i, j, l, k)) return 0;
  const Q m13 = M.m13, m23 = M.m23, m33 = M.m33, m12 = M.m12, m22 = M.m22;
  const Q a = m13 - m12, b = m22 - m33, c = m13 - m22, d23 = m23 - m22;
  const Q C1 = M.C1(), C1b = M.C1bar(), C2 = M.C2(), dl = M.delta();
  const Q chip = M.chip(), chim = M.chim(), chip1 = M.chip(1), chim1 = M.chim(1);
  const Q E = Ebar(M), F = Fbar(M), D = Dbar(M);
  auto S = [&](int i13, int i23, int i33, int i12, int i22, int i11) {
    return M.add(i13, i23, i33, i12, i22, i11);
  };
  const int key = l * 100 + k * 10 + m;
  switch (i * 10 + j) {
    case 11:
      switch (key) {
        case 220: return a * (a - 1) * b * (b - 1);
        case 221: return -2 * a * b * (E - C1);
        case 222: return E * (C1 - 1) * (m13 - m33 - C1b);
        case 210: return -2 * a * (a - 1) * b * (b - 1);
        case 211: return 2 * a * b * (Fbar(S(-1, 0, 0, 0, -1, -1)) + E);
        case 212:
          return -2 * (E * Fbar(S(-1, 0, 0, -1, 0, -1)) +
                       a * b * C1 * (C1b + 1) * chip);
        case 213: return 2 * (C1 - 1) * C1b * E * chip;
        case 110: return -2 * a * (a - 1) * b * (c + 1);
        case 111: return 2 * a * (b * C1 * (C1b + 1) + c * E);
        case 112: return -2 * E * (C1 - 1) * C1b;
        case 200: return a * (a - 1) * b * (b - 1);
        case 201: return -a * b * (F + Fbar(S(-1, 0, 0, 0, -1, 0)));
        case 202:
          return (a + 1) * (b + 1) * C2 * chip +
                 a * b * (C1 + 1) * (C1b + 1) * chip1 +
                 F * Fbar(S(-1, 0, 0, -1, 0, 0));
        case 203: return -C2 * (chip1 * F + chip * Fbar(S(-1, 0, 0, -2, 1, 0)));
        case 204: return C2 * (C1 - 1) * (C1b - 1) * chip1;
        case 100: return 2 * a * (a - 1) * b * (c + 1);
        case 101: return -2 * a * (c * F + b * Q(S(-1, 0, 0, 0, -1, 0).C2()));
        case 102:
          return 2 * (Q(S(-1, 0, 0, -1, 0, 0).C2()) * F +
                      chip * (a + 1) * (c - 1) * C2);
        case 103: return -2 * C2 * (C1 - 1) * (C1b - 1) * chip;
        case 0: return a * (a - 1) * (c + 1) * c;
        case 1: return -2 * a * c * C2;
        case 2: return C2 * (C1 - 1) * (C1b - 1);
      }
      break;
    case 22:
      switch (key) {
        case 220: return b * (b - 1);
        case 221: return -b * (D * chim + (D + 2) * chim1);
        case 222: return D * (D + 1) * chim1;
        case 210: return -2 * b * (b - 1);
        case 211: return 2 * b * (C1b + (D + 1) * chim);
        case 212: return -2 * C1b * D * chim;
        case 110: return -2 * b * d23;
        case 111: return 2 * (D * (d23 - 1) * chim - b * (C1b + 1) * chim1);
        case 112: return 2 * C1b * D * chim1;
        case 200: return b * (b - 1);
        case 201: return -2 * b * C1b;
        case 202: return C1b * (C1b - 1);
        case 100: return 2 * b * d23;
        case 101: return 2 * C1b * (b * chim - (d23 - 1));
        case 102: return -2 * C1b * (C1b - 1) * chim;
        case 0: return d23 * (d23 - 1);
        case 1: return C1b * ((d23 - 2) * chim + d23 * chim1);
        case 2: return C1b * (C1b - 1) * chim1;
      }
      break;
    case 33:
      switch (key) {
        case 220: return 1;
        case 210: return -2;
        case 211: return -2 * chip;
        case 110: return 2;
        case 200: return 1;
        case 201: return chip1 + chip;
        case 202: return chip1;
        case 100: return -2;
        case 101: return -2 * chip;
        case 0: return 1;
      }
      break;
    case 12:
      switch (key) {
        case 220: return a * b * (b - 1);
        case 221: return -b * (E + chim * a * (D + 1));
        case 222: return D * E * chim;
        case 210: return -2 * a * b * (b - 1);
        case 211: return b * (E + F + a * (C1b + 1 + D * (1 - chip)));
        case 212: return -C1b * E - C2 * (1 - D + dl * chip);
        case 110: return a * b * (2 * m22 - m13 - m23 - 2);
        case 111:
          return E * d23 + C2 * (b + 1) +
                 a * chim * (D * (c + 1) - b * (C1b + 1));
        case 112: return C2 * chim * (m13 - m33 + 2 - C1b - D);
        case 200: return a * b * (b - 1);
        case 201: return -b * (F + a * (C1b + chip));
        case 202: return (C1b + chip - 1) * F + (b + 1) * C2 * chip;
        case 203: return -C2 * (C1b - 1) * chip;
        case 100: return -a * b * (2 * m22 - m13 - m23 - 2);
        case 101:
          return a * C1b * (b * (1 - chip) - (c + 1)) - d23 * F - (b + 1) * C2;
        case 102: return 2 * C2 * (C1b - 1);
        case 0: return a * (c + 1) * d23;
        case 1: return a * (c + 1) * C1b * chim - (d23 - 1) * C2;
        case 2: return -C2 * (C1b - 1) * chim;
      }
      break;
    case 13:
      switch (key) {
        case 220: return a * b;
        case 221: return -E;
        case 210: return -2 * a * b;
        case 211: return E + F - a * b * chip;
        case 212: return (E - C2) * chip;
        case 110: return a * (2 * m22 - m13 - m33 - 1);
        case 111: return C2 - E;
        case 200: return a * b;
        case 201: return a * b * chip1 - F;
        case 202: return C2 * chip - F * chip1;
        case 203: return C2 * chip1;
        case 100: return -a * (2 * m22 - m13 - m33 - 1);
        case 101: return F - C2 + a * (c + 1) * chip;
        case 102: return -2 * C2 * chip;
        case 0: return -a * (c + 1);
        case 1: return C2;
      }
      break;
    case 23:
      switch (key) {
        case 220: return b;
        case 221: return -D * chim;
        case 210: return -2 * b;
        case 211: return C1b - b + dl * chim;
        case 110: return 2 * m22 - m23 - m33;
        case 111: return -(C1b + D) * chim;
        case 200: return b;
        case 201: return -(C1b - b * chip);
        case 202: return -C1b * chip;
        case 100: return -(2 * m22 - m23 - m33);
        case 101: return 2 * C1b;
        case 0: return -d23;
        case 1: return -C1b * chim;
      }
      break;
  }
  throw std::logic_error("coefficient index outside the printed tables");
}

namespace {
void require_component(const Dominant& lam, const Direction& d, const Pattern& M) {
  if (!component_occurs(lam, d)) throw std::invalid_argument("component absent");
  if (!M.valid() || !(M.type() == target_type(lam, d)))
    throw std::invalid_argument("pattern " + M.str() + " is not of type " +
                                target_type(lam, d).str());
}
}  // namespace

TensorElement inject_vec(const Dominant& lam, int i, const Pattern& M) {
  require_component(lam, {DirKind::Vec, i, i}, M);
  TensorElement t;
  t.left_type = lam;
  t.right_type = {1, 0, 0};
  int ei[4] = {0, 0, 0, 0};
  ei[i] = 1;
  for (int k = 0; k <= 1; ++k)
    for (int j = 0; j <= k; ++j)
      for (int l = 0; l <= vec_bound(i, j, k); ++l) {
        Pattern left = M.add(-ei[1], -ei[2], -ei[3], 0, -k, -j, -l);
        t.add(left, Pattern{1, 0, 0, k, 0, j}, vec_coeff(i, j, k, l, M));
      }
  return t;
}

ModuleElement project_e1(const TensorElement& t) {
  const Dominant e1{1, 0, 0};
  if (!(t.left_type == e1) || !(t.right_type == e1))
    throw std::invalid_argument("projector needs both factors of type (1,0,0)");
  ModuleElement r;
  r.type = {2, 0, 0};
  for (auto& [k, c] : t.terms)
    r.add(Pattern{2, 0, 0, k.first.m12 + k.second.m12, 0,
                  k.first.m11 + k.second.m11},
          c);
  return r;
}

TensorElement inject_pos(const Dominant& lam, int i, int j, const Pattern& M,
                         Mode mode) {
  if (i > j) std::swap(i, j);
  require_component(lam, {DirKind::Pos, i, j}, M);
  TensorElement t;
  t.left_type = lam;
  t.right_type = {2, 0, 0};
  if (mode == Mode::Closed) {
    int e[4] = {0, 0, 0, 0};
    e[i] += 1;
    e[j] += 1;
    for (int l = 0; l <= 2; ++l)
      for (int k = 0; k <= l; ++k)
        for (int m = 0; m <= pos_bound(i, j, l, k); ++m) {
          Pattern left = M.add(-e[1], -e[2], -e[3], 0, -l, -k, -m);
          t.add(left, Pattern{2, 0, 0, l, 0, k}, pos_coeff(i, j, l, k, m, M));
        }
    return t;
  }
  // (id (x) P) o (i^lambda_{e_j} (x) id) o i^{lambda+e_j}_{e_i}.
  Dominant mid = target_type(lam, {DirKind::Vec, j, j});
  TensorElement first = inject_vec(mid, i, M);
  for (auto& [k1, c1] : first.terms) {
    TensorElement second = inject_vec(lam, j, k1.first);
    for (auto& [k2, c2] : second.terms) {
      Pattern p{2, 0, 0, k2.second.m12 + k1.second.m12, 0,
                k2.second.m11 + k1.second.m11};
      t.add(k2.first, p, c1 * c2);
    }
  }
  return t;
}

TensorElement inject_neg(const Dominant& lam, int i, int j, const Pattern& M) {
  if (i > j) std::swap(i, j);
  require_component(lam, {DirKind::Neg, i, j}, M);
  TensorElement t;
  t.left_type = lam;
  t.right_type = {0, 0, -2};
  const Pattern Mh = M.dual();
  const int ii = 4 - j, jj = 4 - i;
  int e[4] = {0, 0, 0, 0};
  e[i] += 1;
  e[j] += 1;
  for (int l = 0; l <= 2; ++l)
    for (int k = 0; k <= l; ++k)
      for (int m = 0; m <= pos_bound(ii, jj, l, k); ++m) {
        Pattern left = M.add(e[1], e[2], e[3], l, 0, k, -m);
        t.add(left, Pattern{0, 0, -2, 0, -l, -k}, pos_coeff(ii, jj, l, k, m, Mh));
      }
  return t;
}

TensorElement inject(const Dominant& lam, const Direction& d, const Pattern& M,
                     Mode mode) {
  switch (d.kind) {
    case DirKind::Vec: return inject_vec(lam, d.i, M);
    case DirKind::Pos: return inject_pos(lam, d.i, d.j, M, mode);
    default: return inject_neg(lam, d.i, d.j, M);
  }
}

EquivarianceReport verify_equivariance(const InjectorSpec& spec) {
  return verify_equivariance(spec, [&](const Pattern& M) {
    return inject(spec.source, spec.dir, M);
  });
}

EquivarianceReport verify_equivariance(const InjectorSpec& spec,
                                       const InjectorFn& fn) {
  if (!component_occurs(spec.source, spec.dir))
    throw std::invalid_argument("component absent");
  EquivarianceReport rep;
  static const Gen gens[7] = {{1, 1}, {2, 2}, {3, 3}, {1, 2},
                              {2, 1}, {2, 3}, {3, 2}};
  for (auto& M : enumerate(target_type(spec.source, spec.dir))) {
    TensorElement im = fn(M);
    for (auto& g : gens) {
      ++rep.checked;
      TensorElement lhs = act(g, im);
      TensorElement rhs;
      for (auto& [N, c] : act(g, M).terms) rhs += fn(N) * c;
      if (!(lhs == rhs)) rep.violations.push_back({g, M});
    }
  }
  return rep;
}

}  // namespace sp3gk
