#include <vector>

#include "doctest.h"
#include "sp3gk/clebsch.hpp"

using namespace sp3gk;

namespace {

std::vector<Direction> all_directions() {
  std::vector<Direction> d;
  for (int i = 1; i <= 3; ++i) d.push_back({DirKind::Vec, i, i});
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      d.push_back({DirKind::Pos, i, j});
      d.push_back({DirKind::Neg, i, j});
    }
  return d;
}

std::vector<Dominant> sweep(int spread, int lo3, int hi3) {
  std::vector<Dominant> v;
  for (int l3 = lo3; l3 <= hi3; ++l3)
    for (int s = 0; s <= spread; ++s)
      for (int b = 0; b <= s; ++b) v.push_back({l3 + s, l3 + b, l3});
  return v;
}

// Rank over Q of a list of sparse vectors.
template <class K>
int rank(std::vector<std::map<K, Q>> rows) {
  int r = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    auto [piv, pv] = *rows[i].begin();
    ++r;
    for (size_t j = i + 1; j < rows.size(); ++j) {
      auto it = rows[j].find(piv);
      if (it == rows[j].end()) continue;
      Q f = it->second / pv;
      for (auto& [k, c] : rows[i]) {
        Q& t = rows[j][k];
        t -= f * c;
        if (t == 0) rows[j].erase(k);
      }
    }
  }
  return r;
}

Pattern P(int a, int b, int c, int d, int e, int f) { return {a, b, c, d, e, f}; }

}  // namespace

TEST_CASE("inject_vec examples") {
  auto t = inject_vec({1, 0, 0}, 1, P(2, 0, 0, 2, 0, 2));
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms.at({P(1, 0, 0, 1, 0, 1), P(1, 0, 0, 1, 0, 1)}) == -6);

  auto u = inject_vec({1, 0, 0}, 2, P(1, 1, 0, 1, 1, 1));
  REQUIRE(u.terms.size() == 2);
  CHECK(u.terms.at({P(1, 0, 0, 1, 0, 0), P(1, 0, 0, 1, 0, 1)}) == 1);
  CHECK(u.terms.at({P(1, 0, 0, 1, 0, 1), P(1, 0, 0, 1, 0, 0)}) == -1);

  auto w = inject_vec({0, 0, 0}, 1, P(1, 0, 0, 1, 0, 1));
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms.begin()->first.first == Pattern{});
  CHECK(w.terms.begin()->first.second == P(1, 0, 0, 1, 0, 1));
  CHECK(w.terms.begin()->second != 0);

  CHECK_THROWS_WITH(inject_vec({0, 0, 0}, 2, P(0, 1, 0, 1, 0, 0)),
                    "component absent");
}

TEST_CASE("projector examples and constants") {
  TensorElement t;
  t.left_type = t.right_type = {1, 0, 0};
  t.add(P(1, 0, 0, 1, 0, 1), P(1, 0, 0, 1, 0, 1), 1);
  auto r = project_e1(t);
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.at(P(2, 0, 0, 2, 0, 2)) == 1);

  TensorElement a = t, b = t;
  a.terms.clear();
  b.terms.clear();
  a.add(P(1, 0, 0, 1, 0, 1), P(1, 0, 0, 1, 0, 0), 1);
  b.add(P(1, 0, 0, 1, 0, 0), P(1, 0, 0, 1, 0, 1), 1);
  CHECK(project_e1(a).terms == project_e1(b).terms);
  CHECK(project_e1(a).terms.at(P(2, 0, 0, 2, 0, 1)) == 1);

  for (auto& M : enumerate({2, 0, 0})) {
    auto img = project_e1(inject_vec({1, 0, 0}, 1, M));
    REQUIRE(img.terms.size() == 1);
    CHECK(img.terms.at(M) == -6);
  }
  for (auto& M : enumerate({1, 1, 0}))
    CHECK(project_e1(inject_vec({1, 0, 0}, 2, M)).is_zero());

  TensorElement bad;
  bad.left_type = {2, 0, 0};
  bad.right_type = {1, 0, 0};
  CHECK_THROWS(project_e1(bad));
}

TEST_CASE("formula 3 leading coefficient") {
  for (auto& lam : sweep(4, -1, 0)) {
    Direction d{DirKind::Pos, 3, 3};
    if (!component_occurs(lam, d)) continue;
    for (auto& M : enumerate(target_type(lam, d)))
      CHECK(pos_coeff(3, 3, 2, 2, 0, M) == 1);
  }
}

TEST_CASE("equivariance of all injectors") {
  for (auto& lam : sweep(4, -1, 0))
    for (auto& d : all_directions()) {
      if (!component_occurs(lam, d)) {
        CHECK_THROWS_WITH(verify_equivariance({lam, d}), "component absent");
        continue;
      }
      auto rep = verify_equivariance({lam, d});
      INFO(lam.str(), " ", d.str());
      CHECK(rep.ok());
      CHECK(rep.checked == 7 * weyl_dim(target_type(lam, d)));
    }
}

TEST_CASE("mutated coefficient breaks equivariance") {
  Dominant lam{2, 1, 0};
  for (auto& d : all_directions()) {
    if (!component_occurs(lam, d)) continue;
    auto mutated = [&](const Pattern& M) {
      TensorElement t = inject(lam, d, M);
      // +1 on the leading term's coefficient.
      if (!t.is_zero()) {
        auto k = t.terms.begin()->first;
        t.add(k.first, k.second, 1);
      }
      return t;
    };
    INFO(d.str());
    CHECK_FALSE(verify_equivariance({lam, d}, mutated).ok());
  }
}

TEST_CASE("closed form equals composition") {
  for (auto& lam : sweep(4, -1, 0))
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        if (!component_occurs(lam, {DirKind::Pos, i, j})) continue;
        for (auto& M : enumerate(target_type(lam, {DirKind::Pos, i, j}))) {
          INFO(lam.str(), " ", i, j, " ", M.str());
          CHECK(inject_pos(lam, i, j, M, Mode::Closed) ==
                inject_pos(lam, i, j, M, Mode::Composed));
        }
      }
}

TEST_CASE("injectors are injective") {
  for (auto& lam : sweep(3, 0, 0))
    for (auto& d : all_directions()) {
      if (!component_occurs(lam, d)) continue;
      auto src = enumerate(target_type(lam, d));
      std::vector<std::map<std::pair<Pattern, Pattern>, Q>> rows;
      for (auto& M : src) rows.push_back(inject(lam, d, M).terms);
      INFO(lam.str(), " ", d.str());
      CHECK(rank(rows) == static_cast<int>(src.size()));
    }
  auto one = inject_neg({0, 0, 0}, 3, 3, P(0, 0, -2, 0, -2, -2));
  CHECK_FALSE(one.is_zero());
}

TEST_CASE("dimension bookkeeping") {
  for (auto& lam : sweep(6, -2, 1)) {
    long plus = 0, minus = 0, vec = 0;
    for (auto& d : all_directions()) {
      if (!component_occurs(lam, d)) continue;
      long n = weyl_dim(target_type(lam, d));
      (d.kind == DirKind::Pos ? plus : d.kind == DirKind::Neg ? minus : vec) += n;
    }
    CHECK(plus == 6 * weyl_dim(lam));
    CHECK(minus == 6 * weyl_dim(lam));
    CHECK(vec == 3 * weyl_dim(lam));
  }
}

TEST_CASE("dual injector matches positive injector on the dual module") {
  for (auto& lam : sweep(3, -1, 0))
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        Direction d{DirKind::Neg, i, j};
        if (!component_occurs(lam, d)) continue;
        Dominant lh{-lam.l3, -lam.l2, -lam.l1};
        for (auto& M : enumerate(target_type(lam, d))) {
          TensorElement back;
          for (auto& [k, c] : inject_neg(lam, i, j, M).terms)
            back.add(k.first.dual(), k.second.dual(), c);
          CHECK(back == inject_pos(lh, 4 - j, 4 - i, M.dual()));
        }
      }
}

TEST_CASE("coefficient relations with k_ij constants") {
  auto k = [](int i, int j, const Pattern& M) {
    const int a = M.m11, b = M.m13, c = M.m23, d = M.m33;
    switch (i * 10 + j) {
      case 11: return -2 * a + 2 * b;
      case 12: return -2 * a + b + c - 2;
      case 22: return -2 * a + 2 * c - 2;
      case 13: return -2 * a + b + d - 3;
      case 33: return -2 * a + 2 * d - 4;
      default: return -2 * a + c + d - 4;
    }
  };
  int checked = 0;
  for (auto& lam : sweep(4, -1, 0))
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        if (!component_occurs(lam, {DirKind::Pos, i, j})) continue;
        int e[4] = {0, 0, 0, 0};
        e[i] += 1;
        e[j] += 1;
        for (auto& M : enumerate(lam))
          for (int m = -1; m <= 5; ++m) {
            Pattern N = M.add(e[1], e[2], e[3], 0, 2, 2, m);
            if (!N.valid()) continue;
            Q lhs = Q(k(i, j, M)) * pos_coeff(i, j, 2, 2, m, N);
            Q rhs = Q((M.m12 - M.m23 + 1) * M.chim(-1)) * pos_coeff(i, j, 2, 1, m - 1, N) +
                    Q(M.m11 - M.m22 + 1) * pos_coeff(i, j, 2, 1, m, N) +
                    Q(M.C1() + 1) * pos_coeff(i, j, 1, 1, m - 1, N) +
                    Q(M.m33 - M.m22 - 1) * pos_coeff(i, j, 1, 1, m, N);
            INFO(i, j, " ", M.str(), " m=", m);
            CHECK(lhs == rhs);
            ++checked;
          }
      }
  CHECK(checked > 1000);
}

TEST_CASE("direction parsing") {
  CHECK(parse_direction("e2").str() == "e2");
  CHECK(parse_direction("+13").str() == "+13");
  CHECK(parse_direction("-23").kind == DirKind::Neg);
  CHECK_THROWS(parse_direction("+31"));
  CHECK_THROWS(parse_direction("e4"));
}
