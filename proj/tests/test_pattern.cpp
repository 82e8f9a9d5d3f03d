#include <random>

#include "doctest.h"
#include "sp3gk/pattern.hpp"

using namespace sp3gk;

namespace {
// Independent brute-force oracle: count integer arrays satisfying interlacing.
long brute_count(const Dominant& l) {
  long n = 0;
  for (int a = l.l3 - 1; a <= l.l1 + 1; ++a)
    for (int b = l.l3 - 1; b <= l.l1 + 1; ++b)
      for (int c = l.l3 - 1; c <= l.l1 + 1; ++c)
        if (validate({l.l1, l.l2, l.l3, a, b, c})) ++n;
  return n;
}
}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate({2, 0, 0, 2, 0, 2}));
  CHECK_FALSE(validate({1, 0, 0, 0, 0, 1}));
  CHECK(validate({1, 1, 0, 1, 1, 1}));
}

TEST_CASE("enumerate examples and ordering") {
  auto p = enumerate({2, 0, 0});
  REQUIRE(p.size() == 6);
  CHECK(p.front() == Pattern{2, 0, 0, 2, 0, 2});
  CHECK(p.back() == Pattern{2, 0, 0, 0, 0, 0});
  // Marked order of p_+ basis: 11,12,13,22,23,33.
  std::vector<Pattern> marked = {{2, 0, 0, 2, 0, 2}, {2, 0, 0, 2, 0, 1},
                                 {2, 0, 0, 1, 0, 1}, {2, 0, 0, 2, 0, 0},
                                 {2, 0, 0, 1, 0, 0}, {2, 0, 0, 0, 0, 0}};
  CHECK(p == marked);
  CHECK(enumerate({0, 0, 0}).size() == 1);
  CHECK(enumerate({2, 1, 0}).size() == 8);
  CHECK_THROWS_WITH(enumerate({0, 1, 0}), "not dominant");
}

TEST_CASE("enumeration order is weight-lex descending then m12 descending") {
  auto p = enumerate({3, 1, -1});
  for (size_t i = 1; i < p.size(); ++i) {
    auto a = p[i - 1].weight(), b = p[i].weight();
    CHECK((a > b || (a == b && p[i - 1].m12 > p[i].m12)));
  }
}

TEST_CASE("dimension matches Weyl formula and brute count") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int l3 = -2; l3 <= 1; ++l3) {
        Dominant lam{l3 + a + b, l3 + b, l3};
        long n = static_cast<long>(enumerate(lam).size());
        CHECK(n == weyl_dim(lam));
        CHECK(n == brute_count(lam));
      }
}

TEST_CASE("weight") {
  CHECK(Pattern{2, 0, 0, 2, 0, 2}.weight() == WeightVec{2, 0, 0});
  CHECK(Pattern::constant(5).weight() == WeightVec{5, 5, 5});
  for (auto& m : enumerate({4, 1, -2})) {
    auto w = m.weight(), wd = m.dual().weight();
    CHECK(wd == WeightVec{-w.w1, -w.w2, -w.w3});
  }
}

TEST_CASE("stats examples") {
  Pattern a{2, 0, 0, 1, 0, 1};
  CHECK(a.delta() == 0);
  CHECK(a.chip(0) == 0);
  CHECK(a.chim(0) == 0);
  CHECK(a.C1() == 1);
  CHECK(a.C1bar() == 0);
  CHECK(a.C2() == 0);
  Pattern b{2, 0, 0, 2, 0, 1};
  CHECK(b.delta() == 1);
  CHECK(b.chip(0) == 1);
  CHECK(b.C1() == 1);
  CHECK(b.C1bar() == 0);
  Pattern z{};
  CHECK(z.delta() == 0);
  CHECK(z.C1() == 0);
  CHECK(z.C1bar() == 0);
  CHECK(z.C2() == 0);
}

TEST_CASE("piecewise definitions agree with min forms") {
  for (int s = 0; s <= 5; ++s)
    for (auto& lam : std::vector<Dominant>{{s, 0, 0}, {s, s / 2, 0}, {s, s, 0}})
      for (auto& m : enumerate(lam)) {
        int d = m.delta();
        int c1 = d >= 0 ? m.m11 - m.m22 : m.m12 - m.m23;
        int c1b = d >= 0 ? m.m23 - m.m22 : m.m12 - m.m11;
        CHECK(m.C1() == c1);
        CHECK(m.C1bar() == c1b);
        if (d == 0) CHECK(m.m11 - m.m22 == m.m12 - m.m23);
        // Alternative expressions with chi.
        CHECK(m.C1() == m.m11 - m.m22 + d * m.chim());
        CHECK(m.C1() == m.m12 - m.m23 - d * m.chip());
        CHECK(m.C1bar() == m.m23 - m.m22 + d * m.chim());
        CHECK(m.C1bar() == m.m12 - m.m11 - d * m.chip());
        CHECK(m.C2() == (m.m12 - m.m23) * (m.m12 - m.m11) -
                            (m.m12 - m.m22) * d * m.chip());
        CHECK(m.C2() == (m.m11 - m.m22) * (m.m23 - m.m22) +
                            (m.m12 - m.m22) * d * m.chim());
      }
}

TEST_CASE("chi relations and C1 identities") {
  for (auto& lam : std::vector<Dominant>{{4, 1, 0}, {3, 3, 0}, {5, 2, -1}})
    for (auto& m : enumerate(lam))
      for (int r = -4; r <= 4; ++r) {
        int d = m.delta();
        CHECK(m.chip(r) + m.chim(-r - 1) == 1);
        CHECK((d - r) * m.chip(r) == (d - r) * m.chip(r - 1));
        CHECK((d + r) * m.chim(r) == (d + r) * m.chim(r - 1));
        for (int r2 = -4; r2 <= 4; ++r2) {
          if (r + r2 > -2) CHECK(m.chip(r) * m.chim(r2) == 0);
          if (r > r2) {
            CHECK(m.chip(r) * m.chip(r2) == m.chip(r));
            CHECK(m.chim(r) * m.chim(r2) == m.chim(r));
          }
        }
        if (r >= -1) {
          CHECK(m.C1() * m.chip(r) == (m.m11 - m.m22) * m.chip(r));
          CHECK(m.C1() * m.chim(r) == (m.m12 - m.m23) * m.chim(r));
          CHECK(m.C1bar() * m.chip(r) == (m.m23 - m.m22) * m.chip(r));
          CHECK(m.C1bar() * m.chim(r) == (m.m12 - m.m11) * m.chim(r));
        }
      }
}

TEST_CASE("delta and chi under shifts") {
  for (auto& m : enumerate({4, 2, 0}))
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int t = -1; t <= 1; ++t)
            for (int k = -2; k <= 2; ++k) {
              auto s = shift(m, {0, t, 0}, {a, b}, c, k);
              if (!s) continue;
              Pattern inc{0, t, 0, a, b, c};
              int d = inc.delta();
              CHECK(s->delta() == m.delta() + d);
              for (int r = -3; r <= 3; ++r) {
                CHECK(s->chip(r) == m.chip(r - d));
                CHECK(s->chim(r) == m.chim(r + d));
              }
            }
}

TEST_CASE("dual") {
  CHECK(Pattern{2, 0, 0, 2, 0, 2}.dual() == Pattern{0, 0, -2, 0, -2, -2});
  Pattern z{};
  CHECK(z.dual() == z);
  for (auto& m : enumerate({3, 1, 0})) {
    CHECK(m.dual().dual() == m);
    CHECK(m.dual().valid());
    CHECK(m.dual().type() == Dominant{0, -1, -3});
  }
}

TEST_CASE("shift") {
  Pattern m{2, 1, 0, 2, 0, 1};
  CHECK(shift(m, {0, 0, 0}, {0, 0}, 0, 0) == m);
  CHECK_FALSE(shift(Pattern::constant(3), {0, 0, 0}, {0, 0}, 0, 1).has_value());
  CHECK(shift({2, 0, 0, 1, 0, 0}, {0, 0, 0}, {0, 0}, 1, 0) ==
        Pattern{2, 0, 0, 1, 0, 1});
}

TEST_CASE("sigma_enumerate") {
  auto a = sigma_enumerate({0, 0, 0}, {0, 0, 0});
  REQUIRE(a.size() == 1);
  auto b = sigma_enumerate({1, 0, 0}, {1, 0, 0});
  REQUIRE(b.size() == 1);
  CHECK(b[0].weight() == WeightVec{1, 0, 0});
  // (l+1,l,l) has a unique pattern in each mixed sigma class of matching parity.
  for (int s1 = 0; s1 <= 1; ++s1)
    for (int s2 = 0; s2 <= 1; ++s2)
      for (int s3 = 0; s3 <= 1; ++s3) {
        SigmaChar s{s1, s2, s3};
        int sum = s1 + s2 + s3;
        if (sum == 0 || sum == 3) continue;
        for (int l = -3; l <= 5; ++l) {
          if (((l - s.epsilon()) % 2 + 2) % 2) continue;
          CHECK(sigma_enumerate({l + 1, l, l}, s).size() == 1);
          CHECK(sigma_enumerate({l, l, l - 1}, s).size() == 1);
        }
      }
  // Inherited order.
  auto all = enumerate({3, 1, 0});
  auto sub = sigma_enumerate({3, 1, 0}, {0, 1, 1});
  size_t pos = 0;
  for (auto& m : sub) {
    while (pos < all.size() && !(all[pos] == m)) ++pos;
    CHECK(pos < all.size());
  }
}

TEST_CASE("random dimension oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-10, 10);
  for (int t = 0; t < 50; ++t) {
    int a[3] = {d(rng), d(rng), d(rng)};
    std::sort(a, a + 3, std::greater<int>());
    Dominant lam{a[0], a[1], a[2]};
    CHECK(static_cast<long>(enumerate(lam).size()) == weyl_dim(lam));
  }
}
