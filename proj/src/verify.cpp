#include "sp3gk/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "sp3gk/contiguous.hpp"
#include "sp3gk/whittaker.hpp"

namespace sp3gk {

void SuiteResult::fail(const std::string& what) {
  // Keep reports readable when a sweep breaks everywhere.
  if (failures.size() < 50) failures.push_back(what);
  else if (failures.size() == 50) failures.push_back("...");
}

namespace {

std::vector<Dominant> sweep(int spread) {
  std::vector<Dominant> v;
  for (int l3 = kSweepLow3; l3 <= kSweepHigh3; ++l3)
    for (int s = 0; s <= spread; ++s)
      for (int b = 0; b <= s; ++b) v.push_back({l3 + s, l3 + b, l3});
  return v;
}

std::vector<SigmaChar> all_sigmas() {
  std::vector<SigmaChar> v;
  for (int a = 0; a < 8; ++a) v.push_back({a & 1, (a >> 1) & 1, (a >> 2) & 1});
  return v;
}

bool diagonal(const SigmaChar& s) { return s.s1 == s.s2 && s.s2 == s.s3; }

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

int mod2(int l) { return ((l % 2) + 2) % 2; }

}  // namespace

SuiteResult suite_gl3(int max_spread) {
  SuiteResult r{"gl3"};
  for (const auto& lam : sweep(max_spread)) {
    std::map<Gen, SparseMat> mats;
    for (auto g : all_gens()) mats[g] = matrix_of(g, lam);
    const int n = static_cast<int>(weyl_dim(lam));
    for (auto a : all_gens())
      for (auto b : all_gens()) {
        SparseMat lhs = mats[a] * mats[b] - mats[b] * mats[a];
        SparseMat rhs(n, n);
        if (a.q == b.p) rhs = rhs + mats[Gen{a.p, b.q}];
        if (b.q == a.p) rhs = rhs - mats[Gen{b.p, a.q}];
        ++r.checked;
        if (!(lhs == rhs)) r.fail(lam.str() + " [" + a.str() + "," + b.str() + "]");
      }
  }
  return r;
}

SuiteResult suite_equivariance(int max_spread) {
  SuiteResult r{"equivariance"};
  for (const auto& lam : sweep(max_spread))
    for (const auto& d : all_directions()) {
      if (!component_occurs(lam, d)) continue;
      auto rep = verify_equivariance({lam, d});
      ++r.checked;
      if (!rep.ok() || rep.checked != 7 * weyl_dim(target_type(lam, d)))
        r.fail(lam.str() + " " + d.str());
    }
  return r;
}

SuiteResult suite_clebsch_constants() {
  SuiteResult r{"clebsch-constants"};
  for (const auto& M : enumerate({2, 0, 0})) {
    ModuleElement img = project_e1(inject_vec({1, 0, 0}, 1, M));
    ++r.checked;
    if (img.terms.size() != 1 || img.terms.begin()->first != M ||
        img.terms.begin()->second != -6)
      r.fail("e1 direction at " + M.str());
  }
  for (const auto& M : enumerate({1, 1, 0})) {
    ++r.checked;
    if (!project_e1(inject_vec({1, 0, 0}, 2, M)).is_zero()) r.fail("e2 direction at " + M.str());
  }
  return r;
}

SuiteResult suite_closed_composed(int max_spread) {
  SuiteResult r{"closed-composed"};
  for (const auto& lam : sweep(max_spread))
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        Direction d{DirKind::Pos, i, j};
        if (!component_occurs(lam, d)) continue;
        for (const auto& M : enumerate(target_type(lam, d))) {
          ++r.checked;
          if (!(inject_pos(lam, i, j, M, Mode::Closed) ==
                inject_pos(lam, i, j, M, Mode::Composed)))
            r.fail(lam.str() + " " + d.str() + " " + M.str());
        }
      }
  return r;
}

SuiteResult suite_theorem_main(int max_spread) {
  SuiteResult r{"theorem-main"};
  for (const auto& lam : sweep(max_spread))
    for (int sign : {1, -1})
      for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
          Direction d{sign > 0 ? DirKind::Pos : DirKind::Neg, i, j};
          if (!component_occurs(lam, d)) continue;
          const Dominant t = target_type(lam, d);
          for (const auto& s : all_sigmas()) {
            if (sigma_enumerate(lam, s).empty() || sigma_enumerate(t, s).empty()) continue;
            ++r.checked;
            if (!verify_theorem_main(s, lam, sign, i, j))
              r.fail(lam.str() + " " + d.str() + " sigma " + s.str());
          }
        }
  return r;
}

namespace {

NuPoly affine(const nlohmann::json& c, int l) {
  NuPoly p = Poly(Q(c[3].get<int>() * l + c[4].get<int>()));
  for (int k = 0; k < 3; ++k) p += Poly(Q(c[k].get<int>())) * Poly::nu(k + 1);
  return p;
}

PVector pvector(int sign, const nlohmann::json& ent) {
  PVector v;
  v.sign = sign;
  for (auto& [k, x] : ent.items()) v.c[pair_pos(k[0] - '0', k[1] - '0')] = x.get<int>();
  return v;
}

}  // namespace

SuiteResult suite_specializations(const std::string& json_path) {
  SuiteResult r{"specializations"};
  std::ifstream in(json_path);
  if (!in) {
    r.fail("cannot read " + json_path);
    return r;
  }
  const auto data = nlohmann::json::parse(in);
  for (const auto& item : data) {
    const int sign = item["sign"] == "+" ? 1 : -1;
    const std::string ij = item["ij"];
    const int i = ij[0] - '0', j = ij[1] - '0';
    auto ent = item["entries"];
    if (item.contains("corrections"))
      for (const auto& c : item["corrections"]) ent[c[0].get<int>()][c[1].get<int>()] = c[2];
    const auto& L = item["lambda"];
    for (int l = -3; l <= 7; ++l) {
      Dominant lam{L[0][0].get<int>() * l + L[0][1].get<int>(),
                   L[1][0].get<int>() * l + L[1][1].get<int>(),
                   L[2][0].get<int>() * l + L[2][1].get<int>()};
      const std::string tag = item["kind"].get<std::string>() + (sign > 0 ? "+" : "-") + ij +
                              " " + lam.str();
      if (item["kind"] == "P") {
        PMatrix P = pmatrix(lam, sign, i, j);
        ++r.checked;
        bool same = P.rows == static_cast<int>(ent.size()) &&
                    P.cols == static_cast<int>(ent[0].size());
        for (int a = 0; same && a < P.rows; ++a)
          for (int b = 0; b < P.cols; ++b)
            if (!(P.get(a, b) == pvector(sign, ent[a][b]))) same = false;
        if (!same) r.fail(tag);
        continue;
      }
      for (const auto& sj : item["sigmas"]) {
        SigmaChar s{sj[0].get<int>(), sj[1].get<int>(), sj[2].get<int>()};
        if (mod2(l) != s.epsilon()) continue;
        RMatrix R = rmatrix(s, lam, sign, i, j);
        ++r.checked;
        bool same = R.rows == static_cast<int>(ent.size()) &&
                    R.cols == static_cast<int>(ent[0].size());
        for (int a = 0; same && a < R.rows; ++a)
          for (int b = 0; b < R.cols; ++b)
            if (R.e[a][b] != affine(ent[a][b], l)) same = false;
        if (!same) r.fail(tag + " sigma " + s.str());
      }
    }
  }
  return r;
}

SuiteResult suite_chi_oracle() {
  SuiteResult r{"chi-oracle"};
  for (const auto& s : all_sigmas()) {
    std::vector<KType> types;
    if (diagonal(s)) types = {KType::Lll};
    else types = {KType::Up, KType::Down};
    for (KType t : types)
      for (int l = s.epsilon() - 4; l <= s.epsilon() + 6; l += 2)
        for (int i = t == KType::Lll ? 1 : 0; i <= 3; ++i) {
          ++r.checked;
          const std::string tag =
              s.str() + " " + ktype_name(t) + " l=" + std::to_string(l) + " i=" + std::to_string(i);
          try {
            if (chi_oracle(s, t, i, l) != chi_at(s, t, i, l)) r.fail(tag);
            if (!chi(s, t, i).even_in_nu()) r.fail(tag + " not even in nu");
          } catch (const std::exception& e) {
            r.fail(tag + ": " + e.what());
          }
        }
  }
  return r;
}

SuiteResult suite_k_invariance() {
  SuiteResult r{"k-invariance"};
  for (int i = 1; i <= 3; ++i) {
    const UEA c = c_operator(i);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) {
        ++r.checked;
        if (!commutator(UEA::kappa(p, q), c).is_zero())
          r.fail("C" + std::to_string(2 * i) + " kappa(E" + std::to_string(p) +
                 std::to_string(q) + ")");
      }
  }
  return r;
}

namespace {

struct Ops {
  UEA H[4], K[4][4], E12 = UEA::E(kE12), E23 = UEA::E(kE23m), I2E3 = UEA::E(k2E3) * GQ(0, 2);
  Ops() {
    for (int i = 1; i <= 3; ++i) H[i] = UEA::H(i);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) K[p][q] = UEA::kappa(p, q);
  }
};

UEA X(int s, int i, int j) { return UEA::X(s, std::min(i, j), std::max(i, j)); }
UEA M(int s, int i, int j) { return minor_elem(s, i, j); }
UEA c(long v) { return UEA(GQ(v)); }

}  // namespace

SuiteResult suite_normal_order() {
  SuiteResult r{"normal-order"};
  Ops o;
  auto& H = o.H;
  auto& K = o.K;
  const UEA &E12 = o.E12, &E23 = o.E23, &I2E3 = o.I2E3;
  auto check = [&](const std::string& tag, const UEA& a, const UEA& b) {
    ++r.checked;
    if (!reduce_mod_nn(a - b).is_zero()) r.fail(tag);
  };

  check("X+11", X(1, 1, 1), H[1] + K[1][1]);
  check("X+22", X(1, 2, 2), H[2] + K[2][2]);
  check("X-11", X(-1, 1, 1), H[1] - K[1][1]);
  check("X-22", X(-1, 2, 2), H[2] - K[2][2]);
  check("X+12", X(1, 1, 2), E12 + K[2][1]);
  check("X+23", X(1, 2, 3), E23 + K[3][2]);
  check("X-12", X(-1, 1, 2), E12 - K[1][2]);
  check("X-23", X(-1, 2, 3), E23 - K[2][3]);
  check("X+33", X(1, 3, 3), I2E3 + H[3] + K[3][3]);
  check("X-33", X(-1, 3, 3), c(0) - I2E3 + H[3] - K[3][3]);
  check("X+13", X(1, 1, 3), K[3][1]);
  check("X-13", X(-1, 1, 3), c(0) - K[1][3]);

  check("M+11", M(1, 1, 1),
        (H[2] - c(1)) * X(1, 3, 3) + X(1, 3, 3) * K[2][2] - E23 * X(1, 2, 3) -
            X(1, 2, 3) * K[3][2]);
  check("M+22", M(1, 2, 2),
        (H[1] - c(1)) * X(1, 3, 3) + X(1, 3, 3) * K[1][1] - X(1, 1, 3) * K[3][1]);
  check("M+33", M(1, 3, 3),
        (H[1] - c(1)) * X(1, 2, 2) + X(1, 2, 2) * K[1][1] - E12 * X(1, 1, 2) -
            X(1, 1, 2) * K[2][1]);
  check("M+12", M(1, 1, 2), E12 * X(1, 3, 3) + X(1, 3, 3) * K[2][1] - X(1, 2, 3) * K[3][1]);
  check("M+23", M(1, 2, 3),
        (H[1] - c(1)) * X(1, 2, 3) + X(1, 2, 3) * K[1][1] - X(1, 1, 2) * K[3][1]);
  check("M+13", M(1, 1, 3), E12 * X(1, 2, 3) + X(1, 2, 3) * K[2][1] - X(1, 2, 2) * K[3][1]);
  check("M-11", M(-1, 1, 1),
        (H[2] - c(1)) * X(-1, 3, 3) - X(-1, 3, 3) * K[2][2] - E23 * X(-1, 2, 3) +
            X(-1, 2, 3) * K[2][3]);
  check("M-22", M(-1, 2, 2),
        (H[1] - c(1)) * X(-1, 3, 3) - X(-1, 3, 3) * K[1][1] + X(-1, 1, 3) * K[1][3]);
  check("M-33", M(-1, 3, 3),
        (H[1] - c(1)) * X(-1, 2, 2) - X(-1, 2, 2) * K[1][1] - E12 * X(-1, 1, 2) +
            X(-1, 1, 2) * K[1][2]);
  check("M-12", M(-1, 1, 2),
        E12 * X(-1, 3, 3) - X(-1, 3, 3) * K[1][2] + X(-1, 2, 3) * K[1][3]);
  check("M-23", M(-1, 2, 3),
        (H[1] - c(1)) * X(-1, 2, 3) - X(-1, 2, 3) * K[1][1] + X(-1, 1, 2) * K[1][3]);
  check("M-13", M(-1, 1, 3),
        E12 * X(-1, 2, 3) - X(-1, 2, 3) * K[1][2] + X(-1, 2, 2) * K[1][3]);

  for (int i = 1; i <= 3; ++i) {
    const long d1 = i == 1, d2 = i == 2, d3 = i == 3;
    const std::string si = std::to_string(i);
    check("D(+,-)1" + si, d_operator(1, 1, i),
          (H[1] - c(4)) * X(-1, 1, i) + X(-1, 1, i) * K[1][1] + E12 * X(-1, 2, i) +
              X(-1, 2, i) * K[2][1] + X(-1, 3, i) * K[3][1]);
    check("D(+,-)2" + si, d_operator(1, 2, i),
          E12 * X(-1, 1, i) + X(-1, 1, i) * K[2][1] + (H[2] - c(3 - d1)) * X(-1, 2, i) +
              X(-1, 2, i) * K[2][2] + E23 * X(-1, 3, i) + X(-1, 3, i) * K[3][2] -
              c(d2) * X(-1, 1, 1));
    check("D(+,-)3" + si, d_operator(1, 3, i),
          X(-1, 1, i) * K[3][1] + E23 * X(-1, 2, i) + X(-1, 2, i) * K[3][2] +
              (H[3] - c(1 + d3) + I2E3) * X(-1, 3, i) + X(-1, 3, i) * K[3][3] -
              c(d3) * (X(-1, 1, 1) + X(-1, 2, 2)));
    check("D(-,+)1" + si, d_operator(-1, 1, i),
          (H[1] - c(4)) * X(1, 1, i) - X(1, 1, i) * K[1][1] + E12 * X(1, 2, i) -
              X(1, 2, i) * K[1][2] - X(1, 3, i) * K[1][3]);
    check("D(-,+)2" + si, d_operator(-1, 2, i),
          E12 * X(1, 1, i) - X(1, 1, i) * K[1][2] + (H[2] - c(3 - d1)) * X(1, 2, i) -
              X(1, 2, i) * K[2][2] + E23 * X(1, 3, i) - X(1, 3, i) * K[2][3] -
              c(d2) * X(1, 1, 1));
    check("D(-,+)3" + si, d_operator(-1, 3, i),
          c(0) - X(1, 1, i) * K[1][3] + E23 * X(1, 2, i) - X(1, 2, i) * K[2][3] +
              (H[3] - c(1 + d3) - I2E3) * X(1, 3, i) - X(1, 3, i) * K[3][3] -
              c(d3) * (X(1, 1, 1) + X(1, 2, 2)));
  }

  check("C2", c_operator(1),
        (H[1] - c(6)) * X(-1, 1, 1) + X(-1, 1, 1) * K[1][1] + (H[2] - c(4)) * X(-1, 2, 2) +
            X(-1, 2, 2) * K[2][2] + (H[3] + I2E3 - c(2)) * X(-1, 3, 3) +
            X(-1, 3, 3) * K[3][3] + c(2) * E12 * X(-1, 1, 2) + c(2) * X(-1, 1, 2) * K[2][1] +
            c(2) * E23 * X(-1, 2, 3) + c(2) * X(-1, 2, 3) * K[3][2] +
            c(2) * X(-1, 1, 3) * K[3][1]);

  auto B = [&](const UEA& m) { return (I2E3 + H[3]) * m + m * (K[3][3] - c(2)); };
  auto S = [&](const UEA& m) { return H[2] * m + m * (K[2][2] - c(2)); };
  const UEA m11 = M(-1, 1, 1), m22 = M(-1, 2, 2), m33 = M(-1, 3, 3), m12 = M(-1, 1, 2),
            m13 = M(-1, 1, 3), m23 = M(-1, 2, 3);
  const UEA c4 =
      (H[2] - c(1)) * B(m11) + B(m11) * (K[2][2] - c(2)) - E23 * E23 * m11 -
      c(2) * E23 * m11 * K[3][2] - m11 * K[3][2] * K[3][2] + (H[1] - c(1)) * B(m22) +
      B(m22) * (K[1][1] - c(2)) - m22 * K[3][1] * K[3][1] + (H[1] - c(1)) * S(m33) +
      S(m33) * (K[1][1] - c(2)) - E12 * E12 * m33 - c(2) * E12 * m33 * K[2][1] -
      m33 * K[2][1] * K[2][1] + c(2) * E12 * B(m12) + c(2) * B(m12) * K[2][1] -
      c(2) * B(m22) - c(2) * E23 * m23 - c(2) * (E23 * m12 + m12 * K[3][2] - m13) * K[3][1] +
      c(2) * m33 - c(2) * m23 * K[3][2] +
      c(2) * (H[1] - c(1)) * (E23 * m23 + m23 * K[3][2] - m33) +
      c(2) * (E23 * m23 + m23 * K[3][2] - m33) * (K[1][1] - c(2)) -
      c(2) * (E12 * m23 + m23 * K[2][1]) * K[3][1] +
      c(2) * E12 * (E23 * m13 + m13 * K[3][2]) - c(2) * E23 * m23 -
      c(2) * (H[2] - c(3)) * m33 - c(2) * m33 * K[2][2] - c(2) * m23 * K[3][2] +
      c(2) * (E23 * m13 + m13 * K[3][2]) * K[2][1] -
      c(2) * ((H[2] - c(2)) * m13 + m13 * K[2][2]) * K[3][1];
  check("C4", c_operator(2), c4);

  check("m3(C+)", m3(1),
        (H[1] - c(2)) * M(1, 1, 1) + M(1, 1, 1) * K[1][1] - E12 * M(1, 1, 2) -
            M(1, 1, 2) * K[2][1] + M(1, 1, 3) * K[3][1]);
  check("m3(C-)", m3(-1),
        (H[1] - c(2)) * M(-1, 1, 1) - M(-1, 1, 1) * K[1][1] - E12 * M(-1, 1, 2) +
            M(-1, 1, 2) * K[1][2] - M(-1, 1, 3) * K[1][3]);
  return r;
}

SuiteResult suite_holonomic() {
  SuiteResult r{"holonomic"};
  std::vector<std::pair<SigmaChar, int>> cases = {
      {{0, 0, 0}, 0}, {{0, 0, 0}, 2}, {{1, 1, 1}, 1}, {{1, 1, 1}, 3}};
  for (const auto& s : all_sigmas())
    if (!diagonal(s))
      for (int k : {0, 2}) cases.emplace_back(s, s.epsilon() + k);
  for (const auto& [s, l] : cases) {
    std::vector<KType> types;
    if (diagonal(s)) types = {KType::Lll};
    else types = {KType::Up, KType::Down};
    for (KType t : types) {
      ++r.checked;
      SystemComparison cmp = compare_systems(holonomic_system(s, l, t), displayed_system(s, l, t));
      const std::string tag = s.str() + " " + ktype_name(t) + " l=" + std::to_string(l);
      if (!cmp.equal) r.fail(tag + ": " + cmp.diff);
      else if (!(cmp.scale == GQ(1))) r.fail(tag + ": scale " + to_string(cmp.scale));
    }
  }
  return r;
}

SuiteResult suite_dimension(int samples, unsigned seed, int lo, int hi) {
  SuiteResult r{"dimension"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  for (int k = 0; k < samples; ++k) {
    int a[3] = {d(rng), d(rng), d(rng)};
    std::sort(a, a + 3, std::greater<int>());
    Dominant lam{a[0], a[1], a[2]};
    ++r.checked;
    if (static_cast<long>(enumerate(lam).size()) != weyl_dim(lam)) r.fail(lam.str());
  }
  return r;
}

std::vector<SuiteInfo> suite_names() {
  return {{"gl3", "gl(3) commutation relations on V_lambda"},
          {"equivariance", "equivariance of all Clebsch-Gordan injectors"},
          {"clebsch", "equivariance, projector constants and closed-composed together"},
          {"clebsch-constants", "projector constants -6 and 0"},
          {"closed-composed", "closed injector formulas equal the composition"},
          {"theorem-main", "P E(1) = E(1) R for all sigma and directions"},
          {"specializations", "printed P and R matrices equal the builders"},
          {"chi-oracle", "eigenvalues equal the contiguous-relation compositions"},
          {"k-invariance", "[kappa(E_pq), C_2i] = 0"},
          {"normal-order", "normal-ordered invariant operators mod [n,n]"},
          {"holonomic", "mechanical holonomic systems equal the printed ones"},
          {"dimension", "pattern count equals the Weyl dimension"}};
}

SuiteResult run_suite(const std::string& name, int max_spread, const std::string& data_path) {
  if (name == "gl3") return suite_gl3(max_spread);
  if (name == "equivariance") return suite_equivariance(max_spread);
  if (name == "clebsch") {
    SuiteResult r{"clebsch"};
    for (const SuiteResult& part : {suite_equivariance(max_spread), suite_clebsch_constants(),
                                    suite_closed_composed(max_spread)}) {
      r.checked += part.checked;
      for (const auto& f : part.failures) r.fail(part.name + ": " + f);
    }
    return r;
  }
  if (name == "clebsch-constants") return suite_clebsch_constants();
  if (name == "closed-composed") return suite_closed_composed(max_spread);
  if (name == "theorem-main") return suite_theorem_main(max_spread);
  if (name == "specializations") return suite_specializations(data_path);
  if (name == "chi-oracle") return suite_chi_oracle();
  if (name == "k-invariance") return suite_k_invariance();
  if (name == "normal-order") return suite_normal_order();
  if (name == "holonomic") return suite_holonomic();
  if (name == "dimension") return suite_dimension(200, 20261016u);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace sp3gk
