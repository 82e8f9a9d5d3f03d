#pragma once
// Clebsch-Gordan injectors V_{lambda+dir} -> V_lambda (x) V_mu and the
// projector V_{e1} (x) V_{e1} -> V_{2e1}, in the monomial basis.
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sp3gk/glmodule.hpp"

namespace sp3gk {

struct TensorElement {
  Dominant left_type, right_type;
  std::map<std::pair<Pattern, Pattern>, Q> terms;

  void add(const Pattern& a, const Pattern& b, const Q& c);
  bool is_zero() const { return terms.empty(); }
  TensorElement& operator+=(const TensorElement& o);
  TensorElement operator*(const Q& c) const;
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
  std::string str() const;
};

// Leibniz action E(a (x) b) = Ea (x) b + a (x) Eb.
TensorElement act(const Gen& g, const TensorElement& t);

// Direction of an injector.
enum class DirKind { Vec, Pos, Neg };
struct Direction {
  DirKind kind = DirKind::Vec;
  int i = 1, j = 1;  // Vec uses i only
  WeightVec shift() const;
  Dominant right_type() const;  // (1,0,0), (2,0,0) or (0,0,-2)
  std::string str() const;
};
Direction parse_direction(const std::string& s);  // e1|e2|e3|+ij|-ij

// True iff V_{lambda+dir} is a constituent of V_lambda (x) V_mu (Pieri rule).
bool component_occurs(const Dominant& lam, const Direction& d);
Dominant target_type(const Dominant& lam, const Direction& d);

// Auxiliary pattern functions (evaluated on raw arrays).
Q Ebar(const Pattern& m);
Q Fbar(const Pattern& m);
Q Dbar(const Pattern& m);

// c^lambda_{[i;jk;l]}(M) and bound R^{(i)}_{jk}, 0 <= j <= k <= 1.
int vec_bound(int i, int j, int k);
Q vec_coeff(int i, int j, int k, int l, const Pattern& m);
// C^lambda_{[ij]}(M; l, k, m) and bound, 0 <= k <= l <= 2.
int pos_bound(int i, int j, int l, int k);
Q pos_coeff(int i, int j, int l, int k, int m, const Pattern& M);

TensorElement inject_vec(const Dominant& lam, int i, const Pattern& M);
ModuleElement project_e1(const TensorElement& t);

enum class Mode { Closed, Composed };
TensorElement inject_pos(const Dominant& lam, int i, int j, const Pattern& M,
                         Mode mode = Mode::Closed);
TensorElement inject_neg(const Dominant& lam, int i, int j, const Pattern& M);
TensorElement inject(const Dominant& lam, const Direction& d, const Pattern& M,
                     Mode mode = Mode::Closed);

struct InjectorSpec {
  Dominant source;  // left tensor factor; the domain is V_{source+dir}
  Direction dir;
};

struct Violation {
  Gen gen;
  Pattern pattern;
};
struct EquivarianceReport {
  int checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

using InjectorFn = std::function<TensorElement(const Pattern&)>;
// Checks E o i = i o E on every basis pattern for E in {E_mm, simple roots}.
EquivarianceReport verify_equivariance(const InjectorSpec& spec);
EquivarianceReport verify_equivariance(const InjectorSpec& spec,
                                       const InjectorFn& fn);

}  // namespace sp3gk
