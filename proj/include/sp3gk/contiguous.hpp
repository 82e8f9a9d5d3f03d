#pragma once
// p+--matrices, identity evaluation of elementary-function blocks and the
// contiguous-relation matrices R(Gamma^lambda_{+-ij}).
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sp3gk/clebsch.hpp"

namespace sp3gk {

using NuPoly = Poly;

// rho = (3,2,1).
int rho(int p);

struct PMatrix {
  int sign = 1;
  Dominant source, target;
  int rows = 0, cols = 0;
  std::vector<std::map<int, PVector>> row;  // row r: column -> entry
  PVector get(int r, int c) const;
};

// P^lambda_{+-ij}: rows indexed by G(lambda[+-ij]), columns by G(lambda).
PMatrix pmatrix(const Dominant& lam, int sign, int i, int j);

// Value at the identity of X s(M,N), listed over the N in G(lambda) where it
// is nonzero.  M is the fixed left index of the block column.
std::vector<std::pair<Pattern, NuPoly>> boundary_eval(const Dominant& lam,
                                                      const SigmaChar& sigma,
                                                      const PIndex& x,
                                                      const Pattern& M);

struct RMatrix {
  SigmaChar sigma;
  Dominant source, target;
  int rows = 0, cols = 0;
  std::vector<std::vector<NuPoly>> e;  // e[row][col]
  bool operator==(const RMatrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
  std::string str() const;
};

int k_coeff(int i, int j, const Pattern& M);
// h_{[ij;m]}(nu2, M).
NuPoly h_coeff(int i, int j, int m, const Pattern& M);

using KFn = std::function<int(int, int, const Pattern&)>;
RMatrix rmatrix(const SigmaChar& sigma, const Dominant& lam, int sign, int i,
                int j, const KFn& k = k_coeff);

// Left-hand side P * E(lambda) evaluated at the identity, restricted to rows of
// G(lambda[+-ij]) and columns of G_sigma(lambda).
std::vector<std::vector<NuPoly>> lhs_at_identity(const SigmaChar& sigma,
                                                 const Dominant& lam, int sign,
                                                 int i, int j);

std::vector<std::vector<NuPoly>> lhs_at_identity(const SigmaChar& sigma,
                                                 const PMatrix& P);

bool verify_theorem_main(const SigmaChar& sigma, const Dominant& lam, int sign,
                         int i, int j);
bool verify_theorem_main(const SigmaChar& sigma, const Dominant& lam, int sign,
                         int i, int j, const RMatrix& r);
// Same identity with an explicitly given p-matrix.
bool verify_theorem_main(const SigmaChar& sigma, const PMatrix& P,
                         const RMatrix& r);

}  // namespace sp3gk
