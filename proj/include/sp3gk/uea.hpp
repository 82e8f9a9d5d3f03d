#pragma once
// sp(3,C) in 6x6 matrices and U(sp(3,C)) in PBW normal form over Gaussian
// rationals. Generators follow the Iwasawa order n, a, k.
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sp3gk/poly.hpp"

namespace sp3gk {

constexpr int kNumGen = 21;

// Positive restricted roots in PBW order.
enum RootKind {
  kE12 = 0,  // e1-e2
  kE13m,     // e1-e3
  kE23m,     // e2-e3
  kE12p,     // e1+e2
  kE13p,     // e1+e3
  kE23p,     // e2+e3
  k2E1,
  k2E2,
  k2E3
};

// Generator indices: 0..8 root vectors E_alpha (alpha > 0) in RootKind order,
// 9..11 H1..H3, 12..20 kappa(E11),(E22),(E33),(E12),(E21),(E23),(E32),(E13),(E31).
int gen_root(int kind);
int gen_H(int i);
int gen_kappa(int p, int q);
std::string gen_name(int g);
// Generators whose root lies in [n,n].
bool in_nn(int g);

using Mat6 = std::array<std::array<GQ, 6>, 6>;
Mat6 mat_zero();
Mat6 mat_mul(const Mat6& a, const Mat6& b);
Mat6 mat_add(const Mat6& a, const Mat6& b, const GQ& s = GQ(1));
Mat6 mat_bracket(const Mat6& a, const Mat6& b);
bool in_sp3(const Mat6& x);

struct LieElement {
  std::array<GQ, kNumGen> c{};
  static LieElement gen(int g);
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator*(const GQ& s) const;
  bool operator==(const LieElement& o) const { return c == o.c; }
  bool is_zero() const;
  std::string str() const;
};

Mat6 gen_matrix(int g);
Mat6 to_matrix(const LieElement& x);
// Iwasawa coordinates of an element of sp(3,C); throws if x is not in sp(3,C).
LieElement decompose(const Mat6& x);
LieElement bracket(const LieElement& a, const LieElement& b);

// Matrix realizations.
Mat6 root_matrix(int kind, int sign);     // E_alpha, E_{-alpha} = theta(E_alpha)
Mat6 H_matrix(int i);
Mat6 kappa_matrix(int p, int q);          // kappa(E_pq), C-linear extension
Mat6 X_matrix(int sign, int i, int j);    // X_{+-ij} = p_{+-}((E_ij+E_ji)/2)

LieElement root_vector(int kind, int sign);
LieElement X_elem(int sign, int i, int j);
// Printed Iwasawa expansion of X_{+-ij}.
LieElement X_iwasawa_formula(int sign, int i, int j);

using Monomial = std::array<std::uint8_t, kNumGen>;

class UEA {
 public:
  UEA() = default;
  UEA(const GQ& c);
  UEA(long c) : UEA(GQ(c)) {}
  static UEA gen(int g);
  static UEA lie(const LieElement& x);
  static UEA X(int sign, int i, int j) { return lie(X_elem(sign, i, j)); }
  static UEA H(int i) { return gen(gen_H(i)); }
  static UEA kappa(int p, int q) { return gen(gen_kappa(p, q)); }
  static UEA E(int kind) { return gen(gen_root(kind)); }

  const std::map<Monomial, GQ>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  void add_term(const Monomial& m, const GQ& c);

  UEA operator+(const UEA& o) const;
  UEA operator-(const UEA& o) const;
  UEA operator-() const;
  UEA operator*(const UEA& o) const;  // product, result in normal form
  UEA operator*(const GQ& s) const;
  UEA& operator+=(const UEA& o);
  UEA& operator-=(const UEA& o);
  bool operator==(const UEA& o) const { return t_ == o.t_; }
  bool operator!=(const UEA& o) const { return t_ != o.t_; }

  std::string str() const;

 private:
  std::map<Monomial, GQ> t_;
};

UEA commutator(const UEA& a, const UEA& b);
// Normal form of a product of Lie elements, left to right.
UEA normal_order(const std::vector<LieElement>& word);
// Drops monomials whose n-part has a generator in [n,n].
UEA reduce_mod_nn(const UEA& u);

// Chirality matrices and the invariant operators.
using UMat3 = std::array<std::array<UEA, 3>, 3>;
UEA minor_elem(int sign, int i, int j);  // M_{+-ij}
UMat3 chirality(int i, int sign);        // m_1, m_2 (3x3); m_3 in entry (0,0)
UEA m3(int sign);
UEA c_operator(int i);                   // C_{2i} = Tr(m_i(C+) m_i(C-))
// D^{(+,-)} = m1(C+) m1(C-), D^{(-,+)} = m1(C-) m1(C+).
UEA d_operator(int first_sign, int k, int i);

}  // namespace sp3gk
