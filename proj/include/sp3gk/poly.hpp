#pragma once
// Exact scalars and sparse polynomials in (nu1, nu2, nu3, l).
#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

namespace sp3gk {

using Q = mpq_class;

std::string to_string(const Q& q);

// Gaussian rational re + i*im.
struct GQ {
  Q re, im;
  GQ() = default;
  GQ(const Q& r) : re(r) {}
  GQ(long r) : re(r) {}
  GQ(const Q& r, const Q& i) : re(r), im(i) {}
  static GQ I() { return GQ(0, 1); }
  bool is_zero() const { return re == 0 && im == 0; }
  GQ operator+(const GQ& o) const { return {re + o.re, im + o.im}; }
  GQ operator-(const GQ& o) const { return {re - o.re, im - o.im}; }
  GQ operator-() const { return {-re, -im}; }
  GQ operator*(const GQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GQ operator/(const GQ& o) const;
  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) { return *this = *this * o; }
  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GQ& o) const { return !(*this == o); }
};

std::string to_string(const GQ& z);

// Variables: 0..2 are nu1..nu3, 3 is l.
using Mono = std::array<int, 4>;

class Poly {
 public:
  Poly() = default;
  Poly(const Q& c);
  Poly(long c) : Poly(Q(c)) {}
  static Poly var(int i);
  static Poly nu(int i) { return var(i - 1); }
  static Poly l() { return var(3); }

  const std::map<Mono, Q>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Q constant() const;
  int total_degree() const;
  int degree_in(int v) const;
  // True iff every monomial has even exponent in each of nu1..nu3.
  bool even_in_nu() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return t_ != o.t_; }

  // Substitute variable v by the value q.
  Poly subs(int v, const Q& q) const;
  void add_term(const Mono& m, const Q& c);

  std::string str() const;

 private:
  std::map<Mono, Q> t_;
};

Poly operator*(const Q& c, const Poly& p);
Poly pow(const Poly& p, int e);

}  // namespace sp3gk
