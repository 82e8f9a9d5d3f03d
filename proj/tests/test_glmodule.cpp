#include "doctest.h"
#include "sp3gk/glmodule.hpp"
#include "sp3gk/uea.hpp"

using namespace sp3gk;

TEST_CASE("act examples") {
  auto r = act(Gen{1, 2}, Pattern{1, 0, 0, 1, 0, 0});
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms.begin()->first == Pattern{1, 0, 0, 1, 0, 1});
  CHECK(r.terms.begin()->second == 1);
  for (auto& m : enumerate({3, 1, -1}))
    for (int p = 1; p <= 3; ++p) {
      auto e = act(Gen{p, p}, m);
      if (m.wt(p) == 0) {
        CHECK(e.is_zero());
      } else {
        CHECK(e.terms.size() == 1);
        CHECK(e.terms.at(m) == m.wt(p));
      }
    }
  CHECK(act(Gen{2, 3}, Pattern{}).is_zero());
}

TEST_CASE("matrix_of examples") {
  auto m = matrix_of(Gen{1, 1}, {1, 0, 0});
  CHECK(m.get(0, 0) == 1);
  CHECK(m.get(1, 1) == 0);
  CHECK(m.get(2, 2) == 0);
  CHECK(matrix_of(Gen{1, 2}, {0, 0, 0}).is_zero());
  auto e12 = matrix_of(Gen{1, 2}, {2, 1, 0}), e23 = matrix_of(Gen{2, 3}, {2, 1, 0});
  CHECK(e12 * e23 - e23 * e12 == matrix_of(Gen{1, 3}, {2, 1, 0}));
}

TEST_CASE("gl3 relations on small modules") {
  for (auto lam : std::vector<Dominant>{{2, 1, 0}, {3, 0, -1}, {1, 1, 1}}) {
    std::map<Gen, SparseMat> mats;
    for (auto g : all_gens()) mats[g] = matrix_of(g, lam);
    int n = static_cast<int>(weyl_dim(lam));
    for (auto a : all_gens())
      for (auto b : all_gens()) {
        SparseMat lhs = mats[a] * mats[b] - mats[b] * mats[a];
        SparseMat rhs(n, n);
        if (a.q == b.p) rhs = rhs + mats[Gen{a.p, b.q}];
        if (b.q == a.p) rhs = rhs - mats[Gen{b.p, a.q}];
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("raising operators kill the highest pattern") {
  Dominant lam{4, 2, -1};
  Pattern top{4, 2, -1, 4, 2, 4};
  CHECK(act(Gen{1, 2}, top).is_zero());
  CHECK(act(Gen{2, 3}, top).is_zero());
  CHECK(enumerate(lam).front() == top);
}

TEST_CASE("dual intertwiner") {
  CHECK(dual_intertwiner_check({0, 0, 0}));
  CHECK(dual_intertwiner_check({2, 0, 0}));
  CHECK(dual_intertwiner_check({3, 1, 0}));
  CHECK(dual_intertwiner_check({4, 2, -1}));
}

TEST_CASE("marking") {
  CHECK(marking({1, 1, 1}).pattern == Pattern{2, 0, 0, 2, 0, 2});
  CHECK(marking({-1, 3, 3}).pattern == Pattern{0, 0, -2, 0, 0, 0});
  CHECK(marking({1, 3, 3}).pattern == Pattern{2, 0, 0, 0, 0, 0});
  CHECK(marking({-1, 2, 3}).pattern == Pattern{0, 0, -2, 0, -1, 0});
  CHECK(marking({-1, 2, 3}).coeff == -1);
}

namespace {
// [kappa(E_pq), X] through 6x6 matrices, as a PVector.
PVector bracket_oracle(const Gen& g, const PIndex& x) {
  Mat6 b = mat_bracket(kappa_matrix(g.p, g.q), X_matrix(x.sign, x.i, x.j));
  PVector v;
  v.sign = x.sign;
  // Solve against the X basis (they are linearly independent with disjoint
  // supports in the upper-left block entries (i,j),(j,i)).
  for (int pos = 0; pos < 6; ++pos) {
    auto [i, j] = pos_pair(pos);
    GQ c = b[i - 1][j - 1];
    if (i != j) c = c * GQ(2);
    REQUIRE(c.im == 0);
    v.c[pos] = c.re;
  }
  Mat6 re = mat_zero();
  for (int pos = 0; pos < 6; ++pos) {
    auto [i, j] = pos_pair(pos);
    re = mat_add(re, X_matrix(x.sign, i, j), GQ(v.c[pos]));
  }
  REQUIRE(re == b);
  return v;
}

PVector act_through_marking(const Gen& g, const PIndex& x) {
  Marking mk = marking(x);
  ModuleElement e = act(g, mk.pattern);
  PVector v;
  v.sign = x.sign;
  for (auto& [p, c] : e.terms) v += from_pattern(x.sign, p) * (c * mk.coeff);
  return v;
}
}  // namespace

TEST_CASE("adjoint action: printed table entries that match the bracket") {
  int mismatches = 0;
  for (int sign : {1, -1})
    for (int pos = 0; pos < 6; ++pos)
      for (auto g : all_gens()) {
        auto [i, j] = pos_pair(pos);
        PIndex x{sign, i, j};
        PVector o = bracket_oracle(g, x);
        CHECK(o == act_through_marking(g, x));
        if (!(adjoint_action(g, x) == o)) ++mismatches;
      }
  CHECK(mismatches == 0);
}

TEST_CASE("adjoint action examples") {
  PVector a = adjoint_action({2, 1}, {1, 1, 1});
  CHECK(a.c[pair_pos(1, 2)] == 2);
  CHECK(adjoint_action({1, 1}, {1, 3, 3}).is_zero());
}
