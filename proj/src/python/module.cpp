// Python bindings for the core computations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sp3gk/verify.hpp"
#include "sp3gk/whittaker.hpp"

namespace py = pybind11;
using namespace sp3gk;

namespace {

Dominant dom(const std::array<int, 3>& a) { return {a[0], a[1], a[2]}; }
SigmaChar sig(const std::array<int, 3>& a) {
  SigmaChar s{a[0], a[1], a[2]};
  if (!s.valid()) throw std::invalid_argument("sigma entries must be 0 or 1");
  return s;
}

std::array<int, 6> rows(const Pattern& m) { return m.as_array(); }

int chi_index(const std::string& op) {
  if (op == "tilde") return 0;
  if (op == "C2") return 1;
  if (op == "C4") return 2;
  if (op == "C6") return 3;
  throw std::invalid_argument("op must be C2, C4, C6 or tilde");
}

std::vector<std::vector<std::string>> str_matrix(const std::vector<std::vector<NuPoly>>& e) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : e) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.str());
    out.push_back(r);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact representation-theoretic computations for Sp(3,R) Whittaker functions";

  m.def("weyl_dim", [](std::array<int, 3> lam) { return weyl_dim(dom(lam)); }, py::arg("lam"));
  m.def(
      "enumerate",
      [](std::array<int, 3> lam) {
        std::vector<std::array<int, 6>> out;
        for (const auto& p : enumerate(dom(lam))) out.push_back(rows(p));
        return out;
      },
      py::arg("lam"), "Patterns (m13,m23,m33,m12,m22,m11) in index order.");
  m.def(
      "sigma_enumerate",
      [](std::array<int, 3> lam, std::array<int, 3> s) {
        std::vector<std::array<int, 6>> out;
        for (const auto& p : sigma_enumerate(dom(lam), sig(s))) out.push_back(rows(p));
        return out;
      },
      py::arg("lam"), py::arg("sigma"));

  m.def(
      "rmatrix",
      [](std::array<int, 3> lam, std::array<int, 3> s, int sign, int i, int j) {
        return str_matrix(rmatrix(sig(s), dom(lam), sign, i, j).e);
      },
      py::arg("lam"), py::arg("sigma"), py::arg("sign"), py::arg("i"), py::arg("j"));

  m.def(
      "chi",
      [](std::array<int, 3> s, const std::string& ktype, const std::string& op) {
        return chi(sig(s), parse_ktype(ktype), chi_index(op)).str();
      },
      py::arg("sigma"), py::arg("ktype"), py::arg("op"));
  m.def(
      "chi_at",
      [](std::array<int, 3> s, const std::string& ktype, const std::string& op, int l) {
        SigmaChar sg = sig(s);
        KType t = parse_ktype(ktype);
        check_admissible(sg, t, l);
        return chi_at(sg, t, chi_index(op), l).str();
      },
      py::arg("sigma"), py::arg("ktype"), py::arg("op"), py::arg("l"));
  m.def(
      "chi_oracle",
      [](std::array<int, 3> s, const std::string& ktype, const std::string& op, int l) {
        return chi_oracle(sig(s), parse_ktype(ktype), chi_index(op), l).str();
      },
      py::arg("sigma"), py::arg("ktype"), py::arg("op"), py::arg("l"));

  m.def(
      "compare_system",
      [](std::array<int, 3> s, int l, const std::string& ktype, bool as_printed) {
        SigmaChar sg = sig(s);
        KType t = parse_ktype(ktype);
        SystemComparison c =
            compare_systems(holonomic_system(sg, l, t), displayed_system(sg, l, t, as_printed));
        return py::dict(py::arg("equal") = c.equal, py::arg("scale") = to_string(c.scale),
                        py::arg("diff") = c.diff);
      },
      py::arg("sigma"), py::arg("l"), py::arg("ktype"), py::arg("as_printed") = false);
  m.def(
      "system_operators",
      [](std::array<int, 3> s, int l, const std::string& ktype) {
        RadialSystem sys = holonomic_system(sig(s), l, parse_ktype(ktype));
        const char var = sys.coords == Coords::X ? 'x' : 'y';
        py::dict out;
        for (const auto& e : sys.equations) {
          std::vector<std::vector<std::string>> op;
          for (const auto& row : e.op) {
            std::vector<std::string> r;
            for (const auto& w : row) r.push_back(w.str(var));
            op.push_back(r);
          }
          out[py::str(e.name)] = py::make_tuple(op, e.rhs.str());
        }
        return out;
      },
      py::arg("sigma"), py::arg("l"), py::arg("ktype"),
      "Equation name -> (operator matrix as strings, right-hand side).");

  m.def(
      "normal_order",
      [](const std::string& op, bool mod_nn) {
        UEA u;
        if (op == "C2" || op == "C4" || op == "C6") {
          u = c_operator((op[1] - '0') / 2);
        } else if (op.size() == 5 && op[0] == 'D' && (op.substr(1, 2) == "+-" || op.substr(1, 2) == "-+")) {
          int k = op[3] - '0', i = op[4] - '0';
          if (k < 1 || k > 3 || i < 1 || i > 3) throw std::invalid_argument("bad D indices");
          u = d_operator(op[1] == '+' ? 1 : -1, k, i);
        } else {
          throw std::invalid_argument("op must be C2, C4, C6, D+-jk or D-+jk");
        }
        return (mod_nn ? reduce_mod_nn(u) : u).str();
      },
      py::arg("op"), py::arg("mod_nn") = false);

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : suite_names()) out.push_back(s.name);
    return out;
  });
  m.def(
      "run_suite",
      [](const std::string& name, int max_spread, const std::string& data) {
        SuiteResult r = run_suite(name, max_spread, data);
        return py::dict(py::arg("name") = r.name, py::arg("ok") = r.ok(),
                        py::arg("checked") = r.checked, py::arg("failures") = r.failures);
      },
      py::arg("name"), py::arg("max_spread") = 4,
      py::arg("data") = std::string(SP3GK_DATA_DIR) + "/specializations.json");
}
