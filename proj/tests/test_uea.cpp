#include "doctest.h"
#include "sp3gk/uea.hpp"

using namespace sp3gk;

TEST_CASE("basis matrices lie in sp(3) and decompose") {
  for (int g = 0; g < kNumGen; ++g) {
    CHECK(in_sp3(gen_matrix(g)));
    CHECK(decompose(gen_matrix(g)) == LieElement::gen(g));
  }
  for (int k = 0; k < 9; ++k) CHECK(in_sp3(root_matrix(k, -1)));
}

TEST_CASE("bracket examples") {
  auto e12 = LieElement::gen(gen_root(kE12)), e23 = LieElement::gen(gen_root(kE23m));
  CHECK(bracket(e12, e23) == LieElement::gen(gen_root(kE13m)));
  auto h1 = LieElement::gen(gen_H(1)), e2e1 = LieElement::gen(gen_root(k2E1));
  CHECK(bracket(h1, e2e1) == e2e1 * GQ(2));
  for (int k = 0; k < 9; ++k) {
    LieElement b = bracket(root_vector(k, 1), root_vector(k, -1));
    for (int g = 0; g < kNumGen; ++g)
      if (g < 9 || g >= 12) CHECK(b.c[g].is_zero());
  }
}

TEST_CASE("Jacobi identity") {
  for (int a = 0; a < kNumGen; ++a)
    for (int b = a + 1; b < kNumGen; ++b)
      for (int c = b + 1; c < kNumGen; ++c) {
        auto A = LieElement::gen(a), B = LieElement::gen(b), C = LieElement::gen(c);
        auto s = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) +
                 bracket(C, bracket(A, B));
        CHECK(s.is_zero());
      }
}

TEST_CASE("Iwasawa expansions of X") {
  for (int sign : {1, -1})
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j)
        CHECK(X_elem(sign, i, j) == X_iwasawa_formula(sign, i, j));
}

TEST_CASE("kappa is a Lie homomorphism on gl(3)") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s) {
          Mat6 lhs = mat_bracket(kappa_matrix(p, q), kappa_matrix(r, s));
          Mat6 rhs = mat_zero();
          if (q == r) rhs = mat_add(rhs, kappa_matrix(p, s));
          if (s == p) rhs = mat_add(rhs, kappa_matrix(r, q), GQ(-1));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("[n,n] is spanned by the six dropped root vectors") {
  // Brackets of positive root vectors land in the dropped span, and every
  // dropped root vector arises.
  std::array<bool, 9> hit{};
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      LieElement r = bracket(LieElement::gen(a), LieElement::gen(b));
      for (int g = 0; g < kNumGen; ++g)
        if (!r.c[g].is_zero()) {
          CHECK(g < 9);
          CHECK(in_nn(g));
          hit[g] = true;
        }
    }
  for (int g = 0; g < 9; ++g) CHECK(hit[g] == in_nn(g));
}

TEST_CASE("normal order basics") {
  UEA a = UEA::E(k2E3) * UEA::H(3);
  UEA b = UEA::H(3) * UEA::E(k2E3) - UEA::E(k2E3) * GQ(2);
  CHECK(a == b);
  // Already ordered product stays put.
  UEA c = UEA::E(kE12) * UEA::H(1);
  CHECK(c.size() == 1);
  CHECK(reduce_mod_nn(UEA::E(kE13m) * UEA::H(1)).is_zero());
  CHECK(reduce_mod_nn(c) == c);
}

TEST_CASE("normal order is associative") {
  UEA x = UEA::X(1, 1, 2), y = UEA::X(-1, 2, 3), z = UEA::kappa(3, 1) + UEA::H(2);
  CHECK((x * y) * z == x * (y * z));
  UEA w = UEA::X(-1, 1, 1) * UEA::X(1, 3, 3);
  CHECK(w * UEA(1) == w);
}

TEST_CASE("p+ and p- are abelian") {
  for (int s : {1, -1})
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        int i1 = a < 3 ? 1 : (a < 5 ? 2 : 3), j1 = a == 0 ? 1 : a == 1 ? 2 : a == 2 ? 3 : a == 3 ? 2 : 3;
        int i2 = b < 3 ? 1 : (b < 5 ? 2 : 3), j2 = b == 0 ? 1 : b == 1 ? 2 : b == 2 ? 3 : b == 3 ? 2 : 3;
        CHECK(bracket(X_elem(s, i1, j1), X_elem(s, i2, j2)).is_zero());
      }
}

namespace {

struct Ops {
  UEA H[4], K[4][4], E12 = UEA::E(kE12), E23 = UEA::E(kE23m),
                     I2E3 = UEA::E(k2E3) * GQ(0, 2);
  Ops() {
    for (int i = 1; i <= 3; ++i) H[i] = UEA::H(i);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) K[p][q] = UEA::kappa(p, q);
  }
  static UEA X(int s, int i, int j) { return UEA::X(s, std::min(i, j), std::max(i, j)); }
  static UEA M(int s, int i, int j) { return minor_elem(s, i, j); }
};

bool equiv(const UEA& a, const UEA& b) { return reduce_mod_nn(a - b).is_zero(); }

UEA c(long v) { return UEA(GQ(v)); }

}  // namespace

TEST_CASE("K-invariance of the invariant operators") {
  for (int i = 1; i <= 3; ++i) {
    UEA ci = c_operator(i);
    CHECK_FALSE(ci.is_zero());
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) {
        INFO("C", 2 * i, " kappa(E", p, q, ")");
        CHECK(commutator(UEA::kappa(p, q), ci).is_zero());
      }
  }
  // A non-invariant element is detected.
  CHECK_FALSE(commutator(UEA::kappa(2, 1), UEA::X(1, 1, 1)).is_zero());
}

TEST_CASE("reductions of X modulo [n,n]") {
  Ops o;
  CHECK(equiv(Ops::X(1, 1, 1), o.H[1] + o.K[1][1]));
  CHECK(equiv(Ops::X(1, 2, 2), o.H[2] + o.K[2][2]));
  CHECK(equiv(Ops::X(-1, 1, 1), o.H[1] - o.K[1][1]));
  CHECK(equiv(Ops::X(-1, 2, 2), o.H[2] - o.K[2][2]));
  CHECK(equiv(Ops::X(1, 1, 2), o.E12 + o.K[2][1]));
  CHECK(equiv(Ops::X(1, 2, 3), o.E23 + o.K[3][2]));
  CHECK(equiv(Ops::X(-1, 1, 2), o.E12 - o.K[1][2]));
  CHECK(equiv(Ops::X(-1, 2, 3), o.E23 - o.K[2][3]));
  CHECK(equiv(Ops::X(1, 3, 3), o.I2E3 + o.H[3] + o.K[3][3]));
  CHECK(equiv(Ops::X(-1, 3, 3), c(0) - o.I2E3 + o.H[3] - o.K[3][3]));
  CHECK(equiv(Ops::X(1, 1, 3), o.K[3][1]));
  CHECK(equiv(Ops::X(-1, 1, 3), c(0) - o.K[1][3]));
}

TEST_CASE("minors in normal order") {
  Ops o;
  auto X = Ops::X;
  auto& H = o.H;
  auto& K = o.K;
  CHECK(equiv(Ops::M(1, 1, 1), (H[2] - c(1)) * X(1, 3, 3) + X(1, 3, 3) * K[2][2] -
                                   o.E23 * X(1, 2, 3) - X(1, 2, 3) * K[3][2]));
  CHECK(equiv(Ops::M(1, 2, 2), (H[1] - c(1)) * X(1, 3, 3) + X(1, 3, 3) * K[1][1] -
                                   X(1, 1, 3) * K[3][1]));
  CHECK(equiv(Ops::M(1, 3, 3), (H[1] - c(1)) * X(1, 2, 2) + X(1, 2, 2) * K[1][1] -
                                   o.E12 * X(1, 1, 2) - X(1, 1, 2) * K[2][1]));
  CHECK(equiv(Ops::M(1, 1, 2),
              o.E12 * X(1, 3, 3) + X(1, 3, 3) * K[2][1] - X(1, 2, 3) * K[3][1]));
  CHECK(equiv(Ops::M(1, 2, 3), (H[1] - c(1)) * X(1, 2, 3) + X(1, 2, 3) * K[1][1] -
                                   X(1, 1, 2) * K[3][1]));
  CHECK(equiv(Ops::M(1, 1, 3),
              o.E12 * X(1, 2, 3) + X(1, 2, 3) * K[2][1] - X(1, 2, 2) * K[3][1]));

  CHECK(equiv(Ops::M(-1, 1, 1), (H[2] - c(1)) * X(-1, 3, 3) - X(-1, 3, 3) * K[2][2] -
                                    o.E23 * X(-1, 2, 3) + X(-1, 2, 3) * K[2][3]));
  CHECK(equiv(Ops::M(-1, 2, 2), (H[1] - c(1)) * X(-1, 3, 3) - X(-1, 3, 3) * K[1][1] +
                                    X(-1, 1, 3) * K[1][3]));
  CHECK(equiv(Ops::M(-1, 3, 3), (H[1] - c(1)) * X(-1, 2, 2) - X(-1, 2, 2) * K[1][1] -
                                    o.E12 * X(-1, 1, 2) + X(-1, 1, 2) * K[1][2]));
  CHECK(equiv(Ops::M(-1, 1, 2),
              o.E12 * X(-1, 3, 3) - X(-1, 3, 3) * K[1][2] + X(-1, 2, 3) * K[1][3]));
  CHECK(equiv(Ops::M(-1, 2, 3), (H[1] - c(1)) * X(-1, 2, 3) - X(-1, 2, 3) * K[1][1] +
                                    X(-1, 1, 2) * K[1][3]));
  CHECK(equiv(Ops::M(-1, 1, 3),
              o.E12 * X(-1, 2, 3) - X(-1, 2, 3) * K[1][2] + X(-1, 2, 2) * K[1][3]));
}

TEST_CASE("D operators in normal order") {
  Ops o;
  auto X = Ops::X;
  auto& H = o.H;
  auto& K = o.K;
  for (int i = 1; i <= 3; ++i) {
    const long d1 = i == 1, d2 = i == 2, d3 = i == 3;
    INFO("i=", i);
    CHECK(equiv(d_operator(1, 1, i),
                (H[1] - c(4)) * X(-1, 1, i) + X(-1, 1, i) * K[1][1] +
                    o.E12 * X(-1, 2, i) + X(-1, 2, i) * K[2][1] + X(-1, 3, i) * K[3][1]));
    // The delta_{2i} term carries X_{-11}.
    CHECK(equiv(d_operator(1, 2, i),
                o.E12 * X(-1, 1, i) + X(-1, 1, i) * K[2][1] +
                    (H[2] - c(3 - d1)) * X(-1, 2, i) + X(-1, 2, i) * K[2][2] +
                    o.E23 * X(-1, 3, i) + X(-1, 3, i) * K[3][2] - c(d2) * X(-1, 1, 1)));
    CHECK(equiv(d_operator(1, 3, i),
                X(-1, 1, i) * K[3][1] + o.E23 * X(-1, 2, i) + X(-1, 2, i) * K[3][2] +
                    (H[3] - c(1 + d3) + o.I2E3) * X(-1, 3, i) + X(-1, 3, i) * K[3][3] -
                    c(d3) * (X(-1, 1, 1) + X(-1, 2, 2))));

    CHECK(equiv(d_operator(-1, 1, i),
                (H[1] - c(4)) * X(1, 1, i) - X(1, 1, i) * K[1][1] + o.E12 * X(1, 2, i) -
                    X(1, 2, i) * K[1][2] - X(1, 3, i) * K[1][3]));
    CHECK(equiv(d_operator(-1, 2, i),
                o.E12 * X(1, 1, i) - X(1, 1, i) * K[1][2] +
                    (H[2] - c(3 - d1)) * X(1, 2, i) - X(1, 2, i) * K[2][2] +
                    o.E23 * X(1, 3, i) - X(1, 3, i) * K[2][3] - c(d2) * X(1, 1, 1)));
    CHECK(equiv(d_operator(-1, 3, i),
                c(0) - X(1, 1, i) * K[1][3] + o.E23 * X(1, 2, i) - X(1, 2, i) * K[2][3] +
                    (H[3] - c(1 + d3) - o.I2E3) * X(1, 3, i) - X(1, 3, i) * K[3][3] -
                    c(d3) * (X(1, 1, 1) + X(1, 2, 2))));
  }
  // The literal "X_{11}" reading (X_{+11}) of the delta_{2i} term fails.
  CHECK_FALSE(equiv(d_operator(1, 2, 2),
                    o.E12 * X(-1, 1, 2) + X(-1, 1, 2) * K[2][1] +
                        (H[2] - c(3)) * X(-1, 2, 2) + X(-1, 2, 2) * K[2][2] +
                        o.E23 * X(-1, 3, 2) + X(-1, 3, 2) * K[3][2] - X(1, 1, 1)));
}

TEST_CASE("C2, C4 and m3 in normal order") {
  Ops o;
  auto X = Ops::X;
  auto M = Ops::M;
  auto& H = o.H;
  auto& K = o.K;
  auto E12 = o.E12, E23 = o.E23;
  CHECK(equiv(c_operator(1),
              (H[1] - c(6)) * X(-1, 1, 1) + X(-1, 1, 1) * K[1][1] +
                  (H[2] - c(4)) * X(-1, 2, 2) + X(-1, 2, 2) * K[2][2] +
                  (H[3] + o.I2E3 - c(2)) * X(-1, 3, 3) + X(-1, 3, 3) * K[3][3] +
                  c(2) * E12 * X(-1, 1, 2) + c(2) * X(-1, 1, 2) * K[2][1] +
                  c(2) * E23 * X(-1, 2, 3) + c(2) * X(-1, 2, 3) * K[3][2] +
                  c(2) * X(-1, 1, 3) * K[3][1]));

  auto B = [&](const UEA& m) { return (o.I2E3 + H[3]) * m + m * (K[3][3] - c(2)); };
  auto S = [&](const UEA& m) { return H[2] * m + m * (K[2][2] - c(2)); };
  UEA m11 = M(-1, 1, 1), m22 = M(-1, 2, 2), m33 = M(-1, 3, 3), m12 = M(-1, 1, 2),
      m13 = M(-1, 1, 3), m23 = M(-1, 2, 3);
  UEA rhs = (H[2] - c(1)) * B(m11) + B(m11) * (K[2][2] - c(2)) - E23 * E23 * m11 -
            c(2) * E23 * m11 * K[3][2] - m11 * K[3][2] * K[3][2] +
            (H[1] - c(1)) * B(m22) + B(m22) * (K[1][1] - c(2)) - m22 * K[3][1] * K[3][1] +
            (H[1] - c(1)) * S(m33) + S(m33) * (K[1][1] - c(2)) - E12 * E12 * m33 -
            c(2) * E12 * m33 * K[2][1] - m33 * K[2][1] * K[2][1] +
            c(2) * E12 * B(m12) + c(2) * B(m12) * K[2][1] - c(2) * B(m22) -
            c(2) * E23 * m23 - c(2) * (E23 * m12 + m12 * K[3][2] - m13) * K[3][1] +
            c(2) * m33 - c(2) * m23 * K[3][2] +
            c(2) * (H[1] - c(1)) * (E23 * m23 + m23 * K[3][2] - m33) +
            c(2) * (E23 * m23 + m23 * K[3][2] - m33) * (K[1][1] - c(2)) -
            c(2) * (E12 * m23 + m23 * K[2][1]) * K[3][1] +
            c(2) * E12 * (E23 * m13 + m13 * K[3][2]) - c(2) * E23 * m23 -
            c(2) * (H[2] - c(3)) * m33 - c(2) * m33 * K[2][2] - c(2) * m23 * K[3][2] +
            c(2) * (E23 * m13 + m13 * K[3][2]) * K[2][1] -
            c(2) * ((H[2] - c(2)) * m13 + m13 * K[2][2]) * K[3][1];
  CHECK(equiv(c_operator(2), rhs));

  CHECK(equiv(m3(1), (H[1] - c(2)) * M(1, 1, 1) + M(1, 1, 1) * K[1][1] -
                         E12 * M(1, 1, 2) - M(1, 1, 2) * K[2][1] + M(1, 1, 3) * K[3][1]));
  CHECK(equiv(m3(-1), (H[1] - c(2)) * M(-1, 1, 1) - M(-1, 1, 1) * K[1][1] -
                          E12 * M(-1, 1, 2) + M(-1, 1, 2) * K[1][2] -
                          M(-1, 1, 3) * K[1][3]));
}
