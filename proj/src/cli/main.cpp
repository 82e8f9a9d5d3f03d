// sp3gk command-line tool.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sp3gk/verify.hpp"
#include "sp3gk/whittaker.hpp"

using json = nlohmann::ordered_json;
using namespace sp3gk;

namespace {

// Usage errors detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rows_json(const Pattern& m) {
  return json::array({json::array({m.m13, m.m23, m.m33}), json::array({m.m12, m.m22}),
                      json::array({m.m11})});
}

json dominant_json(const Dominant& d) { return json::array({d.l1, d.l2, d.l3}); }

json gq_json(const GQ& c) { return {{"re", to_string(c.re)}, {"im", to_string(c.im)}}; }

json poly_json(const NuPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"coeff", to_string(c)},
                     {"nu", json::array({m[0], m[1], m[2]})},
                     {"l", m[3]}});
  return terms;
}

json pvector_json(const PVector& v) {
  json t = json::object();
  for (int pos = 0; pos < 6; ++pos) {
    if (v.c[pos] == 0) continue;
    auto [i, j] = pos_pair(pos);
    t[std::string("X") + (v.sign > 0 ? "+" : "-") + std::to_string(i) + std::to_string(j)] =
        to_string(v.c[pos]);
  }
  return t;
}

json weyl_json(const WeylOp& op) {
  json terms = json::array();
  for (const auto& [k, c] : op.sorted_terms())
    terms.push_back({{"coeff", gq_json(c)},
                     {"xdeg", json::array({k.first[0], k.first[1], k.first[2]})},
                     {"thetadeg", json::array({k.second[0], k.second[1], k.second[2]})}});
  return terms;
}

json uea_json(const UEA& u) {
  json terms = json::array();
  for (const auto& [m, c] : u.terms()) {
    json factors = json::array();
    for (int g = 0; g < kNumGen; ++g)
      if (m[g]) factors.push_back({{"gen", gen_name(g)}, {"exp", m[g]}});
    terms.push_back({{"coeff", gq_json(c)}, {"factors", factors}});
  }
  return terms;
}

json module_json(const ModuleElement& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms)
    terms.push_back({{"pattern", rows_json(m)}, {"coeff", to_string(c)}});
  return terms;
}

std::vector<int> ints(const std::string& s, size_t n, const std::string& what) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      v.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad " + what + " '" + s + "'");
    }
  }
  if (v.size() != n) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

Dominant dominant_arg(const std::string& s) {
  auto v = ints(s, 3, "highest weight");
  Dominant d{v[0], v[1], v[2]};
  if (!d.is_dominant()) throw UsageError("highest weight " + s + " is not dominant");
  return d;
}

SigmaChar sigma_arg(const std::string& s) {
  auto v = ints(s, 3, "sigma");
  SigmaChar sg{v[0], v[1], v[2]};
  if (!sg.valid()) throw UsageError("sigma entries must be 0 or 1");
  return sg;
}

// "+ij" or "-ij" for the p-matrix and R-matrix commands.
std::tuple<int, int, int> signed_dir(const std::string& s) {
  if (s.size() != 3 || (s[0] != '+' && s[0] != '-') || s[1] < '1' || s[1] > '3' ||
      s[2] < s[1] || s[2] > '3')
    throw UsageError("direction must be +ij or -ij with 1 <= i <= j <= 3");
  return {s[0] == '+' ? 1 : -1, s[1] - '0', s[2] - '0'};
}

Pattern pattern_arg(const std::string& s) {
  try {
    return parse_pattern(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

KType ktype_arg(const std::string& s) {
  try {
    return parse_ktype(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string latex_poly(const NuPoly& p) {
  std::string s = p.str();
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "nu") == 0 && i + 2 < s.size()) {
      out += "\\nu_{" + std::string(1, s[i + 2]) + "}";
      i += 2;
    } else if (s[i] == '*') {
      out += ' ';
    } else {
      out += s[i];
    }
  }
  return out;
}

json system_json(const RadialSystem& sys, const SystemComparison& cmp) {
  json eqs = json::array();
  for (const auto& e : sys.equations) {
    json op = json::array();
    for (const auto& row : e.op) {
      json r = json::array();
      for (const auto& w : row) r.push_back(weyl_json(w));
      op.push_back(r);
    }
    eqs.push_back({{"name", e.name}, {"op", op}, {"rhs", poly_json(e.rhs)}, {"pattern", e.pattern}});
  }
  return {{"ktype", ktype_name(sys.ktype)},
          {"sigma", json::array({sys.sigma.s1, sys.sigma.s2, sys.sigma.s3})},
          {"l", sys.l},
          {"coords", sys.coords == Coords::X ? "x" : "y"},
          {"cited_rank", RadialSystem::cited_rank},
          {"matches_display", cmp.equal},
          {"scale", gq_json(cmp.scale)},
          {"equations", eqs}};
}

std::string system_latex(const RadialSystem& sys) {
  const char var = sys.coords == Coords::X ? 'x' : 'y';
  const bool one = sys.equations.empty() || sys.equations[0].op.size() == 1;
  std::ostringstream os;
  os << "% K-type " << ktype_name(sys.ktype) << ", sigma " << sys.sigma.str() << ", l = " << sys.l
     << "\n\\begin{align*}\n";
  bool first = true;
  for (const auto& e : sys.equations) {
    for (size_t r = 0; r < e.op.size(); ++r) {
      if (!first) os << "\\\\\n";
      first = false;
      os << "&\\text{" << e.name << "}:\\ ";
      bool any = false;
      for (size_t c = 0; c < e.op[r].size(); ++c) {
        if (e.op[r][c].is_zero()) continue;
        if (any) os << " + ";
        any = true;
        os << "(" << e.op[r][c].latex(var) << ")\\phi";
        if (!one) os << "_{" << c + 1 << "}";
      }
      if (!any) os << "0";
      os << " = ";
      bool rhs = false;
      for (size_t c = 0; c < e.pattern[r].size(); ++c) {
        int p = e.pattern[r][c];
        if (!p) continue;
        os << (p < 0 ? "-" : "") << "(" << latex_poly(e.rhs) << ")\\phi";
        if (!one) os << "_{" << c + 1 << "}";
        rhs = true;
      }
      if (!rhs) os << "0";
    }
  }
  os << "\n\\end{align*}\n";
  return os.str();
}

// SP3GK_MAX_SPREAD takes precedence over --max-spread.
int max_spread_value(int flag) {
  if (const char* env = std::getenv("SP3GK_MAX_SPREAD")) {
    try {
      int v = std::stoi(env);
      if (v < 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("bad SP3GK_MAX_SPREAD '") + env + "'");
    }
  }
  return flag;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for principal series Whittaker functions on Sp(3,R)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string type_s, sigma_s, pattern_s, dir_s, gen_s, mode_s = "closed", format_s = "json";
  std::string ktype_s, index_s, suite_s = "all", data_s = SP3GK_DATA_DIR "/specializations.json";
  std::string op_s;
  int l_val = 0, max_spread = 4;
  bool mod_nn = false, as_printed = false;

  auto* patterns = app.add_subcommand("patterns", "Enumerate Gelfand-Tsetlin patterns");
  patterns->add_option("--type", type_s, "Highest weight l1,l2,l3")->required();
  patterns->add_option("--sigma", sigma_s, "Restrict to the sigma subset s1,s2,s3");
  patterns->add_option("--format", format_s, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* action = app.add_subcommand("action", "Action of E_pq in the monomial basis");
  action->add_option("--type", type_s, "Highest weight l1,l2,l3")->required();
  action->add_option("--gen", gen_s, "Generator Epq")->required();
  action->add_option("--pattern", pattern_s, "Pattern m13,m23,m33;m12,m22;m11");

  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan injector image of f(M)");
  cg->add_option("--source", type_s, "Left tensor factor lambda")->required();
  cg->add_option("--dir", dir_s, "e1|e2|e3|+ij|-ij")->required();
  cg->add_option("--pattern", pattern_s, "Pattern of type lambda+dir")->required();
  cg->add_option("--mode", mode_s, "closed or composed")
      ->check(CLI::IsMember({"closed", "composed"}));

  auto* pmat = app.add_subcommand("pmatrix", "p-matrix P^lambda_{+-ij}");
  pmat->add_option("--type", type_s, "Highest weight lambda")->required();
  pmat->add_option("--dir", dir_s, "+ij or -ij")->required();
  pmat->add_option("--sigma", sigma_s, "Accepted for symmetry with rmatrix; unused");

  auto* rmat = app.add_subcommand("rmatrix", "Contiguous-relation matrix R(Gamma^lambda_{+-ij})");
  rmat->add_option("--type", type_s, "Highest weight lambda")->required();
  rmat->add_option("--sigma", sigma_s, "s1,s2,s3")->required();
  rmat->add_option("--dir", dir_s, "+ij or -ij")->required();

  auto* chi_cmd = app.add_subcommand("chi", "Eigenvalue for a peripheral K-type");
  chi_cmd->add_option("--sigma", sigma_s, "s1,s2,s3")->required();
  chi_cmd->add_option("--ktype", ktype_s, "lll, l+1ll or lll-1")->required();
  chi_cmd->add_option("--op", index_s, "C2, C4, C6 or tilde")
      ->required()
      ->check(CLI::IsMember({"C2", "C4", "C6", "tilde"}));
  auto* chi_l = chi_cmd->add_option("--l", l_val, "Substitute this l and compare with the oracle");

  auto* sys_cmd = app.add_subcommand("system", "Holonomic system for a peripheral K-type");
  sys_cmd->add_option("--sigma", sigma_s, "s1,s2,s3")->required();
  sys_cmd->add_option("--l", l_val, "l = epsilon_sigma mod 2")->required();
  sys_cmd->add_option("--ktype", ktype_s, "lll, l+1ll or lll-1")->required();
  sys_cmd->add_option("--format", format_s, "json or latex")
      ->check(CLI::IsMember({"json", "latex"}));
  sys_cmd->add_flag("--as-printed", as_printed, "Compare with the uncorrected printed system");

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--suite", suite_s, "Suite name or all");
  verify->add_option("--max-spread", max_spread, "Bound on lambda1-lambda3")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--data", data_s, "Fixture with printed P and R matrices");

  auto* uea = app.add_subcommand("uea", "Universal enveloping algebra computations");
  uea->require_subcommand(1);
  auto* nord = uea->add_subcommand("normal-order", "PBW normal form of an invariant operator");
  nord->add_option("--op", op_s, "C2, C4, C6, D+-jk or D-+jk")->required();
  nord->add_flag("--mod-nn", mod_nn, "Reduce modulo the left ideal generated by [n,n]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream out;
  int status = 0;
  try {
    if (*patterns) {
      Dominant lam = dominant_arg(type_s);
      auto all = enumerate(lam);
      std::vector<Pattern> sub;
      bool restrict_sigma = !sigma_s.empty();
      SigmaChar sg;
      if (restrict_sigma) {
        sg = sigma_arg(sigma_s);
        sub = sigma_enumerate(lam, sg);
      }
      PatternIndex sidx(sub);
      if (format_s == "text") {
        for (size_t i = 0; i < all.size(); ++i) {
          if (restrict_sigma && sidx.find(all[i]) < 0) continue;
          out << i + 1 << "\t" << all[i].str() << "\n";
        }
      } else {
        json arr = json::array();
        for (size_t i = 0; i < all.size(); ++i) {
          int si = restrict_sigma ? sidx.find(all[i]) : -1;
          if (restrict_sigma && si < 0) continue;
          WeightVec w = all[i].weight();
          json item = {{"rows", rows_json(all[i])},
                       {"weight", json::array({w.w1, w.w2, w.w3})},
                       {"l", i + 1},
                       {"l_sigma", nullptr}};
          if (si >= 0) item["l_sigma"] = si + 1;
          arr.push_back(item);
        }
        out << arr.dump(2) << "\n";
      }
    } else if (*action) {
      Dominant lam = dominant_arg(type_s);
      Gen g;
      try {
        g = parse_gen(gen_s);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      json res;
      if (!pattern_s.empty()) {
        Pattern m = pattern_arg(pattern_s);
        if (m.type() != lam || !m.valid()) throw UsageError("pattern is not of type " + lam.str());
        res = {{"terms", module_json(act(g, m))}};
      } else {
        json cols = json::array();
        for (const auto& m : enumerate(lam))
          cols.push_back({{"pattern", rows_json(m)}, {"terms", module_json(act(g, m))}});
        res = {{"gen", g.str()}, {"type", dominant_json(lam)}, {"columns", cols}};
      }
      out << res.dump(2) << "\n";
    } else if (*cg) {
      Dominant lam = dominant_arg(type_s);
      Direction d;
      try {
        d = parse_direction(dir_s);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      Pattern m = pattern_arg(pattern_s);
      if (!component_occurs(lam, d)) throw UsageError("component absent");
      if (m.type() != target_type(lam, d) || !m.valid())
        throw UsageError("pattern must be of type " + target_type(lam, d).str());
      if (mode_s == "composed" && d.kind != DirKind::Pos)
        throw UsageError("composed mode exists only for +ij directions");
      TensorElement t = inject(lam, d, m, mode_s == "composed" ? Mode::Composed : Mode::Closed);
      json terms = json::array();
      for (const auto& [k, c] : t.terms)
        terms.push_back(
            {{"left", rows_json(k.first)}, {"right", rows_json(k.second)}, {"coeff", to_string(c)}});
      out << json{{"source", dominant_json(lam)},
                  {"dir", d.str()},
                  {"right_type", dominant_json(t.right_type)},
                  {"terms", terms}}
                 .dump(2)
          << "\n";
    } else if (*pmat) {
      Dominant lam = dominant_arg(type_s);
      auto [sign, i, j] = signed_dir(dir_s);
      if (!component_occurs(lam, {sign > 0 ? DirKind::Pos : DirKind::Neg, i, j}))
        throw UsageError("component absent");
      PMatrix P = pmatrix(lam, sign, i, j);
      json rows = json::array();
      for (int r = 0; r < P.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < P.cols; ++c) row.push_back(pvector_json(P.get(r, c)));
        rows.push_back(row);
      }
      json rp = json::array(), cp = json::array();
      for (const auto& m : enumerate(P.target)) rp.push_back(rows_json(m));
      for (const auto& m : enumerate(P.source)) cp.push_back(rows_json(m));
      out << json{{"source", dominant_json(P.source)},
                  {"target", dominant_json(P.target)},
                  {"rows", P.rows},
                  {"cols", P.cols},
                  {"row_patterns", rp},
                  {"col_patterns", cp},
                  {"entries", rows}}
                 .dump(2)
          << "\n";
    } else if (*rmat) {
      Dominant lam = dominant_arg(type_s);
      SigmaChar sg = sigma_arg(sigma_s);
      auto [sign, i, j] = signed_dir(dir_s);
      if (!component_occurs(lam, {sign > 0 ? DirKind::Pos : DirKind::Neg, i, j}))
        throw UsageError("component absent");
      RMatrix R = rmatrix(sg, lam, sign, i, j);
      json rows = json::array();
      for (const auto& row : R.e) {
        json r = json::array();
        for (const auto& x : row) r.push_back(poly_json(x));
        rows.push_back(r);
      }
      json rp = json::array(), cp = json::array();
      for (const auto& m : sigma_enumerate(R.target, sg)) rp.push_back(rows_json(m));
      for (const auto& m : sigma_enumerate(R.source, sg)) cp.push_back(rows_json(m));
      json text = json::array();
      for (const auto& row : R.e) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        text.push_back(r);
      }
      out << json{{"source", dominant_json(R.source)},
                  {"target", dominant_json(R.target)},
                  {"sigma", json::array({sg.s1, sg.s2, sg.s3})},
                  {"rows", R.rows},
                  {"cols", R.cols},
                  {"row_patterns", rp},
                  {"col_patterns", cp},
                  {"entries", rows},
                  {"text", text}}
                 .dump(2)
          << "\n";
    } else if (*chi_cmd) {
      SigmaChar sg = sigma_arg(sigma_s);
      KType t = ktype_arg(ktype_s);
      int i = index_s == "tilde" ? 0 : (index_s[1] - '0') / 2;
      if (i == 0 && t == KType::Lll) throw UsageError("tilde needs a three-dimensional K-type");
      json res = {{"sigma", json::array({sg.s1, sg.s2, sg.s3})},
                  {"ktype", ktype_name(t)},
                  {"op", index_s}};
      if (*chi_l) {
        check_admissible(sg, t, l_val);
        NuPoly v = chi_at(sg, t, i, l_val), o = chi_oracle(sg, t, i, l_val);
        res["l"] = l_val;
        res["value"] = poly_json(v);
        res["text"] = v.str();
        res["oracle_agrees"] = v == o;
        if (v != o) status = 1;
      } else {
        NuPoly v = chi(sg, t, i);
        res["value"] = poly_json(v);
        res["text"] = v.str();
      }
      out << res.dump(2) << "\n";
    } else if (*sys_cmd) {
      SigmaChar sg = sigma_arg(sigma_s);
      KType t = ktype_arg(ktype_s);
      try {
        check_admissible(sg, t, l_val);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      RadialSystem mech = holonomic_system(sg, l_val, t);
      SystemComparison cmp = compare_systems(mech, displayed_system(sg, l_val, t, as_printed));
      if (format_s == "latex") out << system_latex(mech);
      else out << system_json(mech, cmp).dump(2) << "\n";
      if (!cmp.equal) {
        std::cerr << "mechanical system differs from the display: " << cmp.diff << "\n";
        status = 1;
      }
    } else if (*verify) {
      int spread = max_spread_value(max_spread);
      std::vector<std::string> names;
      if (suite_s == "all") {
        for (const auto& s : suite_names())
          if (s.name != "clebsch") names.push_back(s.name);
      } else {
        bool known = false;
        for (const auto& s : suite_names()) known = known || s.name == suite_s;
        if (!known) throw UsageError("unknown suite '" + suite_s + "'");
        names.push_back(suite_s);
      }
      for (const auto& n : names) {
        SuiteResult r = run_suite(n, spread, data_s);
        out << (r.ok() ? "PASS" : "FAIL") << "  " << n << "  (" << r.checked << " checks)\n";
        for (const auto& f : r.failures) out << "      " << f << "\n";
        if (!r.ok()) status = 1;
      }
    } else if (*uea) {
      UEA u;
      if (op_s == "C2" || op_s == "C4" || op_s == "C6") {
        u = c_operator((op_s[1] - '0') / 2);
      } else if (op_s.size() == 5 && op_s[0] == 'D' &&
                 (op_s.compare(1, 2, "+-") == 0 || op_s.compare(1, 2, "-+") == 0) &&
                 op_s[3] >= '1' && op_s[3] <= '3' && op_s[4] >= '1' && op_s[4] <= '3') {
        u = d_operator(op_s[1] == '+' ? 1 : -1, op_s[3] - '0', op_s[4] - '0');
      } else {
        throw UsageError("--op must be C2, C4, C6, D+-jk or D-+jk");
      }
      if (mod_nn) u = reduce_mod_nn(u);
      out << json{{"op", op_s}, {"mod_nn", mod_nn}, {"terms", uea_json(u)}}.dump(2) << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << out.str();
  }
  return status;
}
