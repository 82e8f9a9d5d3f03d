#pragma once
// Peripheral K-types, eigenvalues of C_2, C_4, C_6, radial reduction of
// normal-ordered operators to Euler-Weyl operators on A and the holonomic
// systems satisfied by radial Whittaker functions.
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sp3gk/contiguous.hpp"
#include "sp3gk/uea.hpp"

namespace sp3gk {

// (l,l,l), (l+1,l,l) and (l,l,l-1).
enum class KType { Lll, Up, Down };

KType parse_ktype(const std::string& s);  // "lll", "l+1ll", "lll-1"
std::string ktype_name(KType t);
Dominant ktype_weight(KType t, int l);
int ktype_dim(KType t);
// Ordered basis of G(lambda): M_l, or M^{(1)}_{l;j}, or M^{(2)}_{l;j} (j = 1,2,3).
std::vector<Pattern> ktype_basis(KType t, int l);
// Throws unless t is a multiplicity one K-type for sigma and l = epsilon mod 2.
void check_admissible(const SigmaChar& s, KType t, int l);

// Eigenvalue of C_{2i} (i = 1,2,3) or of the D-relation (i = 0) as a
// polynomial in nu1, nu2, nu3 and l.
NuPoly chi(const SigmaChar& s, KType t, int i);
NuPoly chi_at(const SigmaChar& s, KType t, int i, int l);
// The same value composed from contiguous-relation matrices at a fixed l.
NuPoly chi_oracle(const SigmaChar& s, KType t, int i, int l);

using Exp3 = std::array<int, 3>;

// Polynomial differential operator sum c * z^a * theta^b with theta_i = z_i d/dz_i
// kept to the right of the coordinates.
class WeylOp {
 public:
  using Key = std::pair<Exp3, Exp3>;
  WeylOp() = default;
  WeylOp(const GQ& c);
  WeylOp(long c) : WeylOp(GQ(c)) {}
  WeylOp(int c) : WeylOp(GQ(static_cast<long>(c))) {}
  static WeylOp z(int i);
  static WeylOp theta(int i);

  const std::map<Key, GQ>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Exp3& zdeg, const Exp3& tdeg, const GQ& c);
  // Terms in graded lexicographic order on (zdeg, thetadeg).
  std::vector<std::pair<Key, GQ>> sorted_terms() const;

  friend WeylOp operator+(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  bool operator==(const WeylOp& o) const { return t_ == o.t_; }
  bool operator!=(const WeylOp& o) const { return t_ != o.t_; }

  // Polynomials in z as exponent -> coefficient.
  using ZPoly = std::map<Exp3, GQ>;
  ZPoly apply(const ZPoly& f) const;

  std::string str(char var = 'y') const;
  std::string latex(char var = 'y') const;

 private:
  std::map<Key, GQ> t_;
};

WeylOp pow(const WeylOp& a, int e);

enum class Coords { X, Y };
// y-operator to x-coordinates: y1 = 2 sqrt(x1), y2 = 2 sqrt(x2), y3 = x3.
// Throws on an odd power of y1 or y2.
WeylOp y_to_x(const WeylOp& op);

using OpMatrix = std::vector<std::vector<WeylOp>>;
using QMatrix = std::vector<std::vector<Q>>;

// kappa(E_pq) acting on the radial functions of a K-type: kappa phi_k = sum_j A[j][k] phi_j.
QMatrix kaction_table(KType t, int l, int p, int q);

// Row k, column j: u phi_k = sum_j W[k][j] phi_j.  u must be reduced mod [n,n].
OpMatrix radial_reduce(const UEA& u, KType t, int l, Coords c);

// One equation family: sum_c op[r][c] phi_c = rhs * sum_c pattern[r][c] phi_c.
struct Equation {
  std::string name;
  OpMatrix op;
  NuPoly rhs;
  std::vector<std::vector<int>> pattern;
};

struct RadialSystem {
  KType ktype = KType::Lll;
  SigmaChar sigma;
  int l = 0;
  Coords coords = Coords::X;
  std::vector<Equation> equations;
  static constexpr int cited_rank = 48;
};

// Mechanical system: radial reduction of C_2, C_4, C_6 (and the D-relations for
// the three-dimensional K-types) with the eigenvalues chi.
RadialSystem holonomic_system(const SigmaChar& s, int l, KType t);
// The printed systems instantiated at (s, l, t).  One constant of the printed
// C4 relation for (l+1,l,l) is corrected unless as_printed is set.
RadialSystem displayed_system(const SigmaChar& s, int l, KType t, bool as_printed = false);

struct SystemComparison {
  bool equal = false;
  GQ scale;             // mechanical = scale * displayed
  std::string diff;     // first mismatch when not equal
};
SystemComparison compare_systems(const RadialSystem& mech, const RadialSystem& disp);

}  // namespace sp3gk
