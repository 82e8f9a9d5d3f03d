#pragma once
// gl(3,C)-modules V_lambda in the monomial basis f(M).
#include <map>
#include <string>
#include <vector>

#include "sp3gk/pattern.hpp"
#include "sp3gk/poly.hpp"

namespace sp3gk {

// Elementary generator E_pq, 1 <= p,q <= 3.
struct Gen {
  int p = 1, q = 1;
  auto operator<=>(const Gen&) const = default;
  std::string str() const;
};
Gen parse_gen(const std::string& s);
std::vector<Gen> all_gens();

struct ModuleElement {
  Dominant type;
  std::map<Pattern, Q> terms;

  static ModuleElement basis(const Pattern& m);
  void add(const Pattern& m, const Q& c);
  bool is_zero() const { return terms.empty(); }
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement operator*(const Q& c) const;
  bool operator==(const ModuleElement& o) const { return terms == o.terms; }
};

// Action of E_pq on f(M); shifted arrays that are not patterns contribute 0.
ModuleElement act(const Gen& g, const Pattern& m);
ModuleElement act(const Gen& g, const ModuleElement& v);

// Sparse square or rectangular matrix, stored by columns.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::map<int, Q>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
  static SparseMat identity(int n);
  void add(int r, int c, const Q& v);
  Q get(int r, int c) const;
  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const Q& s) const;
  bool operator==(const SparseMat& o) const;
  bool is_zero() const;
};

// Column l(N) holds the coordinates of E_pq f(N).
SparseMat matrix_of(const Gen& g, const Dominant& lam);

// Checks X o T = T o omega(X) for E_ii and simple root vectors.
bool dual_intertwiner_check(const Dominant& lam);

// Basis vectors X_{+ij}, X_{-ij} of p_+ and p_-.
struct PIndex {
  int sign = 1;  // +1 or -1
  int i = 1, j = 1;
  auto operator<=>(const PIndex&) const = default;
  std::string str() const;
};
// Positions 0..5 for (11,12,13,22,23,33).
int pair_pos(int i, int j);
std::pair<int, int> pos_pair(int pos);

struct PVector {
  int sign = 1;
  std::array<Q, 6> c{};
  bool is_zero() const;
  PVector& operator+=(const PVector& o);
  PVector operator*(const Q& s) const;
  bool operator==(const PVector& o) const { return sign == o.sign && c == o.c; }
  std::string str() const;
};

// Pattern attached to X_{+-ij}; coeff is the scalar so that X = coeff * f(pattern).
struct Marking {
  Pattern pattern;
  Q coeff;
};
Marking marking(const PIndex& x);
// Inverse: the element of p_+- corresponding to f(M), M of type (2,0,0) or (0,0,-2).
PVector from_pattern(int sign, const Pattern& m);

// [kappa(E_pq), X] from the printed adjoint-action tables.
PVector adjoint_action(const Gen& g, const PIndex& x);

}  // namespace sp3gk
