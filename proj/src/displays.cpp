// The printed holonomic systems, written as Euler-Weyl expressions.
#include <stdexcept>

#include "sp3gk/whittaker.hpp"

namespace sp3gk {

namespace {

using W = WeylOp;

W z(int i) { return W::z(i); }
W d(int i) { return W::theta(i); }
const W I{GQ::I()};

// x-system for (l,l,l).
std::vector<Equation> lll_equations(int l) {
  W x1 = z(1), x2 = z(2), x3 = z(3);
  W X1 = 2 * d(1), X2 = -2 * d(1) + 2 * d(2), X3 = -2 * d(2) + 2 * d(3);
  Equation c2{"C2", {{(X1 + (l - 6)) * (X1 - l) + (X2 + (l - 4)) * (X2 - l) +
                      (X3 + (l - 2) - x3) * (X3 - l + x3) - 8 * x1 - 8 * x2}},
              {}, {{1}}};
  Equation c4{"C4",
              {{((X2 + (l - 3)) * (X3 + (l - 2) - x3) + 4 * x2) *
                        ((X2 - l - 1) * (X3 - l + x3) + 4 * x2) +
                    (X1 + (l - 5)) * (X3 + (l - 2) - x3) * (X1 - l - 1) * (X3 - l + x3) +
                    ((X1 + (l - 5)) * (X2 + (l - 4)) + 4 * x1) *
                        ((X1 - l - 1) * (X2 - l) + 4 * x1) -
                    8 * x1 * (X3 + (l - 2) - x3) * (X3 - l + x3) + 32 * x1 * x2 -
                    8 * x2 * (X1 + (l - 5)) * (X1 - l - 1)}},
              {},
              {{1}}};
  Equation c6{"C6",
              {{((X1 + (l - 4)) * (X2 + (l - 3)) * (X3 + (l - 2) - x3) +
                 4 * x2 * (X1 + (l - 4)) + 4 * x1 * (X3 + (l - 2) - x3)) *
                ((X1 - l - 2) * (X2 - l - 1) * (X3 - l + x3) + 4 * x2 * (X1 - l - 2) +
                 4 * x1 * (X3 - l + x3))}},
              {},
              {{1}}};
  return {c2, c4, c6};
}

OpMatrix zero3() { return OpMatrix(3, std::vector<W>(3)); }

std::vector<std::vector<int>> id3() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

// y-system for (l+1,l,l).
std::vector<Equation> up_equations(int l, bool as_printed) {
  // The printed C4 relation carries l-7 in the delta_{3i} phi_1 term.
  const int c7 = as_printed ? 7 : 6;
  W y1 = z(1), y2 = z(2), y3 = z(3);
  W D1 = d(1), A = -d(1) + d(2), B = -d(2) + 2 * d(3);

  Equation dr{"D", zero3(), {}, id3()};
  dr.op[0] = {(D1 + (l - 3)) * (D1 - l - 3) - y1 * y1, I * y1 * (d(2) - 4), -y1 * y2};
  dr.op[1] = {I * y1 * (d(2) - 6), (A + (l - 2)) * (A - l - 2) - y1 * y1 - y2 * y2,
              I * y2 * (-d(1) + 2 * d(3) - 2 + y3)};
  dr.op[2] = {-y1 * y2, I * y2 * (-d(1) + 2 * d(3) - 4 - y3),
              (B + (l - 1) - y3) * (B - l - 1 + y3) - y2 * y2};

  Equation c2{"C2", zero3(), {}, id3()};
  Equation c4{"C4", zero3(), {}, id3()};
  Equation c6{"C6", zero3(), {}, id3()};
  for (int i = 1; i <= 3; ++i) {
    const int d1 = i == 1, d2 = i == 2, d3 = i == 3;
    auto& r2 = c2.op[i - 1];
    r2[i - 1] += (D1 + (l - 6 + d1)) * (D1 - l - d1) + (A + (l - 4 + d2)) * (A - l - d2) +
                 (B + (l - 2 + d3) - y3) * (B - l - d3 + y3) - 2 * y1 * y1 - 2 * y2 * y2;
    if (d1) {
      r2[0] += W(-4);
      r2[1] += 2 * I * y1;
    }
    if (d2) {
      r2[0] += -2 * I * y1;
      r2[1] += W(-2);
      r2[2] += 2 * I * y2;
    }
    if (d3) r2[1] += -2 * I * y2;

    auto& r4 = c4.op[i - 1];
    r4[i - 1] +=
        ((A + (l - 3 + d2)) * (B + (l - 2 + d3) - y3) + y2 * y2) *
            ((A - l - 1 - d2) * (B - l - d3 + y3) + y2 * y2) +
        (D1 + (l - 5 + d1)) * (B + (l - 2 + d3) - y3) * (D1 - l - 1 - d1) * (B - l - d3 + y3) +
        ((D1 + (l - 5 + d1)) * (A + (l - 4 + d2)) + y1 * y1) *
            ((D1 - l - 1 - d1) * (A - l - d2) + y1 * y1) -
        2 * y1 * y1 * (B + (l - 2 + d3) - y3) * (B - l - d3 + y3) + 2 * y1 * y1 * y2 * y2 -
        2 * y2 * y2 * (D1 + (l - 5 + d1)) * (D1 - l - 1 - d1);
    if (d1) {
      r4[0] += 2 * -((A + (l - 4)) * (A - l) + (B + (l - 2) - y3) * (B - l + y3) -
                     3 * y1 * y1 - 2 * y2 * y2);
      r4[1] += 2 * I * y1 *
               ((B + (l - 2) - y3) * (B - l + y3) - (D1 - l - 1) * (A - l - 1) + d(2) - 6 -
                y1 * y1 - y2 * y2);
      r4[2] += 2 * y1 * y2 * (2 * d(3) - l - 6 + y3);
    }
    if (d2) {
      r4[0] += 2 * -I * y1 *
               ((B + (l - 2) - y3) * (B - l + y3) - (D1 + (l - 4)) * (A + (l - 4)) -
                (d(2) - 4) - y1 * y1 - y2 * y2);
      r4[1] += 2 * -((D1 + (l - 5)) * (D1 - l - 1) - y1 * y1 - 2 * y2 * y2);
      r4[2] += 2 * I * y2 *
               ((D1 + (l - 5)) * (D1 - l - 1) - (A - l - 1) * (B - l - 1 + y3) - y1 * y1 -
                y2 * y2);
    }
    if (d3) {
      r4[0] += 2 * -y1 * y2 * (2 * d(3) + (l - c7) - y3);
      r4[1] += 2 * I * y2 *
               ((A + (l - 2)) * (B + (l - 2) - y3) - (D1 + (l - 5)) * (D1 - l - 1) + y1 * y1 +
                y2 * y2);
    }

    auto& r6 = c6.op[i - 1];
    r6[i - 1] += ((D1 + (l - 4 + d1)) * (A + (l - 3 + d2)) * (B + (l - 2 + d3) - y3) +
                  y2 * y2 * (D1 + (l - 4 + d1)) + y1 * y1 * (B + (l - 2 + d3) - y3)) *
                 ((D1 - l - 2 - d1) * (A - l - 1 - d2) * (B - l - d3 + y3) +
                  y2 * y2 * (D1 - l - 2 - d1) + y1 * y1 * (B - l - d3 + y3));
    if (d1) {
      r6[0] += 2 * 2 * y1 * y1 * ((B + (l - 2) - y3) * (B - l + y3) - y2 * y2);
      r6[1] += 2 * -I * y1 *
               ((B + (l - 2) - y3) * (D1 - l - 2) * (A - l - 2) * (B - l + y3) +
                y2 * y2 * (B + (l - 2) - y3) * (D1 - l - 2) +
                y1 * y1 * (B + (l - 2) - y3) * (B - l + y3));
      r6[2] += 2 * -y1 * y2 *
               ((D1 - l - 2) * (A - l - 1) * (B - l - 1 + y3) + y2 * y2 * (D1 - l - 2) +
                y1 * y1 * (B - l - 1 + y3));
    }
    if (d2) {
      r6[0] += 2 * I * y1 *
               ((D1 + (l - 3)) * (A + (l - 3)) * (B + (l - 2) - y3) * (B - l + y3) +
                y2 * y2 * (D1 + (l - 3)) * (B - l - 2 + y3) +
                y1 * y1 * (B + (l - 2) - y3) * (B - l + y3));
      r6[1] += 2 * 2 * y2 * y2 * (D1 + (l - 4)) * (D1 - l - 2);
      r6[2] += 2 * -I * y2 * (D1 + (l - 4)) *
               ((D1 - l - 2) * (A - l - 1) * (B - l - 1 + y3) + y2 * y2 * (D1 - l - 2) +
                y1 * y1 * (B - l - 1 + y3));
    }
    if (d3) {
      r6[0] += 2 * y1 * y2 *
               ((D1 + (l - 3)) * (A + (l - 3)) * (B + (l - 2) - y3) + y2 * y2 * (D1 + (l - 3)) +
                y1 * y1 * (B + (l - 2) - y3));
      r6[1] += 2 * I * y2 *
               ((D1 + (l - 4)) * (A + (l - 2)) * (B + (l - 2) - y3) + y2 * y2 * (D1 + (l - 4)) +
                y1 * y1 * (B + (l - 2) - y3)) *
               (D1 - l - 2);
    }
  }
  return {dr, c2, c4, c6};
}

// y-system for (l,l,l-1).
std::vector<Equation> down_equations(int l) {
  W y1 = z(1), y2 = z(2), y3 = z(3);
  W D1 = d(1), A = -d(1) + d(2), B = -d(2) + 2 * d(3);

  Equation dr{"D", zero3(), {}, {{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}};
  dr.op[0] = {y1 * y2, I * y1 * (d(2) - 4), -((D1 - l - 3) * (D1 + (l - 3)) - y1 * y1)};
  dr.op[1] = {-I * y2 * (-d(1) + 2 * d(3) - 2 - y3),
              (A - l - 2) * (A + (l - 2)) - y1 * y1 - y2 * y2, -I * y1 * (d(2) - 6)};
  dr.op[2] = {-((B - l - 1 + y3) * (B + (l - 1) - y3) - y2 * y2),
              I * y2 * (-d(1) + 2 * d(3) - 4 + y3), y1 * y2};

  Equation c2{"C2", zero3(), {}, id3()};
  Equation c4{"C4", zero3(), {}, id3()};
  Equation c6{"C6", zero3(), {}, id3()};
  for (int i = 1; i <= 3; ++i) {
    const int d1 = i == 1, d2 = i == 2, d3 = i == 3;
    auto& r2 = c2.op[i - 1];
    r2[i - 1] += (D1 + (l - 6 - d3)) * (D1 - l + d3) + (A + (l - 4 - d2)) * (A - l + d2) +
                 (B + (l - 2 - d1) - y3) * (B - l + d1 + y3) - 2 * y1 * y1 - 2 * y2 * y2;
    if (d1) {
      r2[0] += W(-4);
      r2[1] += 2 * I * y2;
    }
    if (d2) {
      r2[0] += -2 * I * y2;
      r2[1] += W(-2);
      r2[2] += 2 * I * y1;
    }
    if (d3) r2[1] += -2 * I * y1;

    auto& r4 = c4.op[i - 1];
    r4[i - 1] +=
        ((A + (l - 3 - d2)) * (B + (l - 2 - d1) - y3) + y2 * y2) *
            ((A - l - 1 + d2) * (B - l + d1 + y3) + y2 * y2) +
        (D1 + (l - 5 - d3)) * (B + (l - 2 - d1) - y3) * (D1 - l - 1 + d3) * (B - l + d1 + y3) +
        ((D1 + (l - 5 - d3)) * (A + (l - 4 - d2)) + y1 * y1) *
            ((D1 - l - 1 + d3) * (A - l + d2) + y1 * y1) -
        2 * y1 * y1 * (B + (l - 2 - d1) - y3) * (B - l + d1 + y3) -
        2 * y2 * y2 * ((D1 + (l - 5 - d3)) * (D1 - l - 1 + d3) - y1 * y1);
    if (d1) {
      r4[0] += 2 * -((D1 + (l - 5)) * (D1 - l - 1) + (A + (l - 3)) * (A - l - 1) -
                     2 * y1 * y1 - 3 * y2 * y2);
      r4[1] += 2 * I * y2 *
               ((D1 + (l - 5)) * (D1 - l - 1) - (A - l) * (B - l + y3) -
                (-d(1) + 2 * d(3) - 2 + y3) - y1 * y1 - y2 * y2);
      r4[2] += 2 * -y1 * y2 * (2 * d(3) - l - 3 + y3);
    }
    if (d2) {
      r4[0] += 2 * -I * y2 *
               ((D1 + (l - 5)) * (D1 - l - 1) - (A + (l - 3)) * (B + (l - 3) - y3) - d(1) +
                2 * d(3) - 4 - y3 - y1 * y1 - y2 * y2);
      r4[1] += 2 * -((B + (l - 2) - y3) * (B - l + y3) - 2 * y1 * y1 - y2 * y2);
      r4[2] += 2 * I * y1 *
               (-(D1 - l) * (A - l) + (B + (l - 2) - y3) * (B - l + y3) - y1 * y1 - y2 * y2);
    }
    if (d3) {
      r4[0] += 2 * y1 * y2 * (2 * d(3) + (l - 9) - y3);
      r4[1] += 2 * I * y1 *
               ((D1 + (l - 5)) * (A + (l - 5)) - (B + (l - 2) - y3) * (B - l + y3) + y1 * y1 +
                y2 * y2);
    }

    auto& r6 = c6.op[i - 1];
    r6[i - 1] += ((D1 + (l - 4 - d3)) * (A + (l - 3 - d2)) * (B + (l - 2 - d1) - y3) +
                  y2 * y2 * (D1 + (l - 4 - d3)) + y1 * y1 * (B + (l - 2 - d1) - y3)) *
                 ((D1 - l - 2 + d3) * (A - l - 1 + d2) * (B - l + d1 + y3) +
                  y1 * y1 * (B - l + d1 + y3) + y2 * y2 * (D1 - l - 2 + d3));
    if (d1) {
      r6[0] += 2 * 2 * y2 * y2 * ((D1 + (l - 4)) * (D1 - l - 2) - y1 * y1);
      r6[1] += 2 * -I * y2 *
               ((D1 + (l - 4)) * (D1 - l - 2) * (A - l) * (B - l + y3) +
                y1 * y1 * (D1 + (l - 4)) * (B - l + y3) +
                y2 * y2 * (D1 + (l - 4)) * (D1 - l - 2));
      r6[2] += 2 * y1 * y2 *
               ((D1 - l - 1) * (A - l - 1) * (B - l + y3) + y1 * y1 * (B - l + y3) +
                y2 * y2 * (D1 - l - 1));
    }
    if (d2) {
      r6[0] += 2 * I * y2 *
               ((D1 + (l - 4)) * (A + (l - 3)) * (B + (l - 3) - y3) * (D1 - l - 2) +
                y2 * y2 * (D1 + (l - 4)) * (D1 - l - 2) +
                y1 * y1 * (B + (l - 3) - y3) * (D1 - l));
      r6[1] += 2 * 2 * y1 * y1 * (B + (l - 2) - y3) * (B - l + y3);
      r6[2] += 2 * -I * y1 * (B + (l - 2) - y3) *
               ((D1 - l - 1) * (A - l - 1) * (B - l + y3) + y1 * y1 * (B - l + y3) +
                y2 * y2 * (D1 - l - 1));
    }
    if (d3) {
      r6[0] += 2 * -y1 * y2 *
               ((D1 + (l - 4)) * (A + (l - 3)) * (B + (l - 3) - y3) + y2 * y2 * (D1 + (l - 4)) +
                y1 * y1 * (B + (l - 3) - y3));
      r6[1] += 2 * I * y1 *
               ((D1 + (l - 4)) * (A + (l - 4)) * (B + (l - 2) - y3) + y2 * y2 * (D1 + (l - 4)) +
                y1 * y1 * (B + (l - 2) - y3)) *
               (B - l + y3);
    }
  }
  return {dr, c2, c4, c6};
}

}  // namespace

RadialSystem displayed_system(const SigmaChar& s, int l, KType t, bool as_printed) {
  check_admissible(s, t, l);
  RadialSystem sys;
  sys.ktype = t;
  sys.sigma = s;
  sys.l = l;
  sys.coords = t == KType::Lll ? Coords::X : Coords::Y;
  switch (t) {
    case KType::Lll: sys.equations = lll_equations(l); break;
    case KType::Up: sys.equations = up_equations(l, as_printed); break;
    case KType::Down: sys.equations = down_equations(l); break;
  }
  for (auto& eq : sys.equations) {
    int i = eq.name == "D" ? 0 : (eq.name[1] - '0') / 2;
    eq.rhs = chi_at(s, t, i, l);
  }
  return sys;
}

}  // namespace sp3gk
