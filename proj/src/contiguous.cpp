#include "sp3gk/contiguous.hpp"

#include <sstream>
#include <stdexcept>

#include "sp3gk/uea.hpp"

namespace sp3gk {

int rho(int p) { return 4 - p; }

PVector PMatrix::get(int r, int c) const {
  auto it = row[r].find(c);
  if (it != row[r].end()) return it->second;
  PVector z;
  z.sign = sign;
  return z;
}

namespace {

Direction dir_of(int sign, int i, int j) {
  if (i > j) std::swap(i, j);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  return {sign > 0 ? DirKind::Pos : DirKind::Neg, i, j};
}

void require_sigma(const Dominant& lam, const Dominant& tgt, const SigmaChar& s) {
  if (sigma_enumerate(lam, s).empty() || sigma_enumerate(tgt, s).empty())
    throw std::invalid_argument("empty sigma subset");
}

// Real part of a Gaussian rational that must be real.
Q real(const GQ& z) {
  if (z.im != 0) throw std::logic_error("unexpected imaginary coefficient");
  return z.re;
}

// Coordinates of X_{+-pq} on H_1..H_3 and kappa(E_ab), read off mechanically
// from the Iwasawa decomposition of the 6x6 matrix.
struct XParts {
  Q h[4];
  std::vector<std::pair<Gen, Q>> k;
};

const XParts& x_parts(const PIndex& x) {
  static std::map<PIndex, XParts> cache;
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  LieElement d = decompose(X_matrix(x.sign, x.i, x.j));
  XParts r;
  for (int p = 1; p <= 3; ++p) r.h[p] = real(d.c[gen_H(p)]);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      Q c = real(d.c[gen_kappa(a, b)]);
      if (c != 0) r.k.push_back({Gen{a, b}, c});
    }
  return cache.emplace(x, r).first->second;
}

// Full identity-evaluation matrix B[M][N] = {X s(M,N)}(1) for all M, N in G(lam).
using NuMat = std::vector<std::map<int, NuPoly>>;

NuMat boundary_matrix(const Dominant& lam, const PIndex& x) {
  const XParts& xp = x_parts(x);
  auto pats = enumerate(lam);
  PatternIndex idx(pats);
  NuMat b(pats.size());
  for (size_t n = 0; n < pats.size(); ++n) {
    NuPoly hp;
    for (int p = 1; p <= 3; ++p)
      if (xp.h[p] != 0) hp += Poly(xp.h[p]) * (Poly::nu(p) + Poly(rho(p)));
    if (!hp.is_zero()) b[n][n] += hp;
    for (auto& [g, c] : xp.k)
      for (auto& [m, v] : act(g, pats[n]).terms) b[idx.find(m)][n] += Poly(c * v);
  }
  for (auto& r : b)
    for (auto it = r.begin(); it != r.end();)
      it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return b;
}

}  // namespace

PMatrix pmatrix(const Dominant& lam, int sign, int i, int j) {
  Direction d = dir_of(sign, i, j);
  if (!component_occurs(lam, d)) throw std::invalid_argument("component absent");
  PMatrix P;
  P.sign = sign;
  P.source = lam;
  P.target = target_type(lam, d);
  auto rows = enumerate(P.target);
  PatternIndex cols(enumerate(lam));
  P.rows = rows.size();
  P.cols = cols.size();
  P.row.resize(P.rows);
  for (int r = 0; r < P.rows; ++r)
    for (auto& [k, c] : inject(lam, d, rows[r]).terms) {
      int col = cols.find(k.first);
      auto [it, ins] = P.row[r].try_emplace(col);
      if (ins) it->second.sign = sign;
      it->second += from_pattern(sign, k.second) * c;
      if (it->second.is_zero()) P.row[r].erase(it);
    }
  return P;
}

std::vector<std::pair<Pattern, NuPoly>> boundary_eval(const Dominant& lam,
                                                      const SigmaChar& sigma,
                                                      const PIndex& x,
                                                      const Pattern& M) {
  if (!M.valid() || !(M.type() == lam) || !in_sigma(M, sigma))
    throw std::invalid_argument("pattern not in G_sigma(lambda)");
  const XParts& xp = x_parts(x);
  std::map<Pattern, NuPoly> out;
  for (int p = 1; p <= 3; ++p)
    if (xp.h[p] != 0) out[M] += Poly(xp.h[p]) * (Poly::nu(p) + Poly(rho(p)));
  // {kappa(E) s(M,N)}(1) is the coefficient of f(M) in E f(N).  Only N close to
  // M can contribute; scan the module.
  for (auto& N : enumerate(lam))
    for (auto& [g, c] : xp.k) {
      auto v = act(g, N);
      auto it = v.terms.find(M);
      if (it != v.terms.end()) out[N] += Poly(c * it->second);
    }
  std::vector<std::pair<Pattern, NuPoly>> r;
  for (auto& [n, p] : out)
    if (!p.is_zero()) r.push_back({n, p});
  return r;
}

int k_coeff(int i, int j, const Pattern& M) {
  if (i > j) std::swap(i, j);
  const int a = M.m11, t1 = M.m13, t2 = M.m23, t3 = M.m33;
  switch (i * 10 + j) {
    case 11: return -2 * a + 2 * t1;
    case 12: return -2 * a + t1 + t2 - 2;
    case 22: return -2 * a + 2 * t2 - 2;
    case 13: return -2 * a + t1 + t3 - 3;
    case 33: return -2 * a + 2 * t3 - 4;
    case 23: return -2 * a + t2 + t3 - 4;
  }
  throw std::invalid_argument("bad (i,j)");
}

namespace {
Pattern up(const Pattern& M, int i, int j, int l, int k, int m) {
  int e[4] = {0, 0, 0, 0};
  e[i] += 1;
  e[j] += 1;
  return M.add(e[1], e[2], e[3], 0, l, k, m);
}
}  // namespace

NuPoly h_coeff(int i, int j, int m, const Pattern& M) {
  Pattern N = up(M, i, j, 2, 0, m);
  NuPoly r = (Poly::nu(2) + Poly(rho(2) + M.wt(2))) * Poly(pos_coeff(i, j, 2, 0, m, N));
  r += Poly(Q((M.m22 - M.m33 + 1 + M.delta()) * M.chip(-1)) *
            pos_coeff(i, j, 1, 0, m - 1, N));
  r += Poly(Q(M.m22 - M.m33 + 1) * pos_coeff(i, j, 1, 0, m, N));
  return r;
}

RMatrix rmatrix(const SigmaChar& sigma, const Dominant& lam, int sign, int i,
                int j, const KFn& k) {
  Direction d = dir_of(sign, i, j);
  i = d.i;
  j = d.j;
  if (!component_occurs(lam, d)) throw std::invalid_argument("component absent");
  RMatrix R;
  R.sigma = sigma;
  R.source = lam;
  R.target = target_type(lam, d);
  require_sigma(lam, R.target, sigma);
  auto cols = sigma_enumerate(lam, sigma);
  PatternIndex rows(sigma_enumerate(R.target, sigma));
  R.rows = rows.size();
  R.cols = cols.size();
  R.e.assign(R.rows, std::vector<NuPoly>(R.cols));
  for (int c = 0; c < R.cols; ++c) {
    const Pattern& M = cols[c];
    // Entry for the target pattern N (given on the + side directly, on the -
    // side through its dual).
    auto put = [&](const Pattern& N, const NuPoly& v) {
      if (!N.valid()) return;
      int r = rows.find(N);
      if (r >= 0) R.e[r][c] += v;
    };
    if (sign > 0) {
      NuPoly a1 = Poly::nu(1) + Poly(rho(1) + M.wt(1) + k(i, j, M));
      NuPoly a3 = Poly::nu(3) + Poly(rho(3) + M.wt(3));
      for (int m = 0; m <= pos_bound(i, j, 2, 2); ++m) {
        Pattern N = up(M, i, j, 2, 2, m);
        put(N, a1 * Poly(pos_coeff(i, j, 2, 2, m, N)));
      }
      for (int m = 0; m <= pos_bound(i, j, 2, 0); ++m)
        put(up(M, i, j, 2, 0, m), h_coeff(i, j, m, M));
      for (int m = 0; m <= pos_bound(i, j, 0, 0); ++m) {
        Pattern N = up(M, i, j, 0, 0, m);
        put(N, a3 * Poly(pos_coeff(i, j, 0, 0, m, N)));
      }
    } else {
      const int ii = 4 - j, jj = 4 - i;
      const Pattern Mh = M.dual();
      NuPoly a1 = Poly::nu(1) + Poly(rho(1) - M.wt(1) + k(ii, jj, Mh));
      NuPoly a3 = Poly::nu(3) + Poly(rho(3) - M.wt(3));
      // The target pattern is the dual of the + side shift of M^.
      for (int m = 0; m <= pos_bound(ii, jj, 2, 2); ++m) {
        Pattern Nh = up(Mh, ii, jj, 2, 2, m);
        put(Nh.dual(), a1 * Poly(pos_coeff(ii, jj, 2, 2, m, Nh)));
      }
      for (int m = 0; m <= pos_bound(ii, jj, 2, 0); ++m)
        put(up(Mh, ii, jj, 2, 0, m).dual(), h_coeff(ii, jj, m, Mh));
      for (int m = 0; m <= pos_bound(ii, jj, 0, 0); ++m) {
        Pattern Nh = up(Mh, ii, jj, 0, 0, m);
        put(Nh.dual(), a3 * Poly(pos_coeff(ii, jj, 0, 0, m, Nh)));
      }
    }
  }
  return R;
}

std::string RMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows; ++r) {
    os << "[";
    for (int c = 0; c < cols; ++c) os << (c ? ", " : "") << e[r][c].str();
    os << "]\n";
  }
  return os.str();
}

std::vector<std::vector<NuPoly>> lhs_at_identity(const SigmaChar& sigma,
                                                 const Dominant& lam, int sign,
                                                 int i, int j) {
  return lhs_at_identity(sigma, pmatrix(lam, sign, i, j));
}

std::vector<std::vector<NuPoly>> lhs_at_identity(const SigmaChar& sigma,
                                                 const PMatrix& P) {
  const Dominant& lam = P.source;
  const int sign = P.sign;
  auto all = enumerate(lam);
  auto cols = sigma_enumerate(lam, sigma);
  PatternIndex idx(all);
  std::vector<NuMat> B(6);
  for (int pos = 0; pos < 6; ++pos) {
    auto [a, b] = pos_pair(pos);
    B[pos] = boundary_matrix(lam, PIndex{sign, a, b});
  }
  std::vector<std::vector<NuPoly>> out(P.rows, std::vector<NuPoly>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    int mi = idx.find(cols[c]);
    for (int r = 0; r < P.rows; ++r)
      for (auto& [n, pv] : P.row[r])
        for (int pos = 0; pos < 6; ++pos) {
          if (pv.c[pos] == 0) continue;
          auto it = B[pos][mi].find(n);
          if (it != B[pos][mi].end()) out[r][c] += Poly(pv.c[pos]) * it->second;
        }
  }
  return out;
}

bool verify_theorem_main(const SigmaChar& sigma, const Dominant& lam, int sign,
                         int i, int j) {
  return verify_theorem_main(sigma, lam, sign, i, j, rmatrix(sigma, lam, sign, i, j));
}

bool verify_theorem_main(const SigmaChar& sigma, const Dominant& lam, int sign,
                         int i, int j, const RMatrix& R) {
  return verify_theorem_main(sigma, pmatrix(lam, sign, i, j), R);
}

bool verify_theorem_main(const SigmaChar& sigma, const PMatrix& P,
                         const RMatrix& R) {
  auto lhs = lhs_at_identity(sigma, P);
  if (lhs.size() != static_cast<size_t>(P.rows) || R.cols != static_cast<int>(
      sigma_enumerate(P.source, sigma).size()))
    return false;
  auto rows = enumerate(R.target);
  PatternIndex srows(sigma_enumerate(R.target, sigma));
  // E(lambda[+-ij]) * R at the identity places row l^sigma(N) of R at l(N).
  for (size_t r = 0; r < rows.size(); ++r) {
    int s = srows.find(rows[r]);
    for (int c = 0; c < R.cols; ++c) {
      NuPoly want = s >= 0 ? R.e[s][c] : NuPoly();
      if (lhs[r][c] != want) return false;
    }
  }
  return true;
}

}  // namespace sp3gk
