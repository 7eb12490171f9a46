// main.cpp — batch command-line surface: index, chern, cocycle-check, zeta,
// spectrum, haar and pw subcommands with JSON/CSV/markdown reports.
// SPDX-License-Identifier: MIT
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "qsph/cocycles.hpp"
#include "qsph/ktheory.hpp"
#include "qsph/reports.hpp"
#include "qsph/spectral.hpp"

namespace {

using namespace qsph;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct JobConfig {
  double q = 0.5;
  HalfInt n;
  std::optional<HalfInt> lambda;
  double precision = 1e-12;
  std::string format = "json";
  std::string cache_dir;
  unsigned long seed = 0;
};

// half-integers are written "p/2" or as plain integers
HalfInt parse_half(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return HalfInt(std::stol(text));
  const long num = std::stol(text.substr(0, slash));
  const long den = std::stol(text.substr(slash + 1));
  if (den == 1) return HalfInt(num);
  if (den == 2) return HalfInt::from_twice(num);
  throw std::invalid_argument("half-integer must have denominator 1 or 2: " + text);
}

double parse_q(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return std::stod(text);
  return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

[[noreturn]] void fail_check(const ordered_json& diff) {
  std::cerr << diff.dump(2) << "\n";
  std::exit(kExitCheckFailed);
}

void require_q_range(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    fail_check({{"error", "validation"}, {"field", "q"}, {"value", q},
                {"constraint", "0 < q < 1"}});
  }
}

void emit(const ordered_json& row, const JobConfig& cfg) {
  std::cout << render(row, cfg.format);
}

// ---- caching ---------------------------------------------------------------

std::string cache_key(const std::string& job, const std::string& detail) {
  std::string key = job + "_" + detail;
  for (char& ch : key) {
    if (ch == '/' || ch == ' ' || ch == '.') ch = '_';
  }
  return key;
}

std::optional<ordered_json> cache_load(const JobConfig& cfg, const std::string& key) {
  if (cfg.cache_dir.empty()) return std::nullopt;
  std::ifstream in(cfg.cache_dir + "/" + key + ".json");
  if (!in) return std::nullopt;
  try {
    ordered_json row = ordered_json::parse(in);
    if (row.value("schema", "") != kReportSchemaVersion) return std::nullopt;
    return row;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const JobConfig& cfg, const std::string& key, const ordered_json& row) {
  if (cfg.cache_dir.empty()) return;
  const std::string final_path = cfg.cache_dir + "/" + key + ".json";
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) return;  // cache is best-effort
    out << row.dump(2) << "\n";
  }
  std::rename(tmp_path.c_str(), final_path.c_str());
}

// ---- subcommand bodies -------------------------------------------------------

int run_index(const JobConfig& cfg, const std::string& method, double tol) {
  require_q_range(cfg.q);
  const HalfInt lambda = cfg.lambda.value_or(cfg.n.abs() + HalfInt(10));
  if (method != "symbolic" && lambda < cfg.n.abs() + HalfInt(4)) {
    fail_check({{"error", "validation"}, {"field", "lambda"}, {"value", lambda.str()},
                {"constraint", "lambda >= |n| + 4"}});
  }

  bool ok = true;
  ordered_json diff;
  SymbolicIndexReport sym;
  if (method == "symbolic" || method == "both") {
    const ExactRing ring;
    ExactPWTable table(ring, cfg.n.abs() + HalfInt(1));
    sym.n = cfg.n;
    sym.value = index_pairing(table, cfg.n);
    sym.q = cfg.q;
    sym.value_at_q = sym.value.eval_s(std::sqrt(cfg.q));
    emit(report_json(sym), cfg);
    if (sym.value != expected_index(cfg.n)) {
      ok = false;
      diff = {{"error", "tolerance"}, {"field", "index-symbolic"},
              {"value", sym.value.str()}, {"expected", expected_index(cfg.n).str()}};
    }
  }
  if (method == "kernel" || method == "both") {
    const std::string key =
        cache_key("index-kernel", cfg.n.str() + "_" + std::to_string(cfg.q) + "_" + lambda.str());
    ordered_json row;
    if (auto hit = cache_load(cfg, key)) {
      row = *hit;
    } else {
      row = report_json(kernel_index(cfg.n, lambda, cfg.q));
      cache_store(cfg, key, row);
    }
    emit(row, cfg);
    const double abs_err = row.at("abs_err").get<double>();
    if (abs_err > tol) {
      ok = false;
      diff = {{"error", "tolerance"}, {"field", "index-kernel"},
              {"value", row.at("value")}, {"expected", row.at("expected")},
              {"abs_err", abs_err}, {"tol", tol}};
    }
    if (method == "both") {
      const double gap = std::abs(row.at("value").get<double>() - sym.value_at_q);
      if (gap > tol) {
        ok = false;
        diff = {{"error", "tolerance"}, {"field", "index-methods-disagree"},
                {"kernel", row.at("value")}, {"symbolic", sym.value_at_q},
                {"abs_err", gap}, {"tol", tol}};
      }
    }
  }
  if (!ok) fail_check(diff);
  return kExitOk;
}

int run_chern(const JobConfig& cfg) {
  const ExactRing ring;
  ExactPWTable table(ring, cfg.n.abs() + HalfInt(1));
  const AlgebraMatrix p = projection_pn(table, cfg.n);
  const CircleRep v = rep_vn(cfg.n);
  const ExactElem ch0 = chern0(p, v);
  const Chain3 ch2 = chern2(p, v);
  const QRat pairing = index_pair(make_phi0(), make_phi2(), ch0, ch2);

  ordered_json row;
  row["schema"] = kReportSchemaVersion;
  row["job"] = "chern";
  row["n"] = cfg.n.str();
  row["projection_dim"] = p.dim;
  row["ch0"] = ch0.str();
  row["ch2_terms"] = static_cast<long>(ch2.size());
  row["pairing_exact"] = pairing.str();
  row["expected"] = expected_index(cfg.n).str();
  row["pairing_at_q"] = pairing.eval_s(std::sqrt(cfg.q));
  emit(row, cfg);
  if (pairing != expected_index(cfg.n)) {
    fail_check({{"error", "tolerance"}, {"field", "chern-pairing"},
                {"value", pairing.str()}, {"expected", expected_index(cfg.n).str()}});
  }
  return kExitOk;
}

int run_cocycle_check(const JobConfig& cfg, long degree_max) {
  const ExactRing ring;
  struct BasisEntry {
    std::string label;
    long degree;
    ExactElem elem;
  };
  const std::vector<std::string> words = {"",     "ab",   "bc",   "cd",  "aabb",
                                          "abbc", "bbcc", "bccd", "ccdd"};
  std::vector<BasisEntry> basis;
  for (const std::string& w : words) {
    const long deg = static_cast<long>(w.size());
    if (deg <= degree_max) {
      basis.push_back({w.empty() ? "1" : w, deg, elem_from_word(ring, w)});
    }
  }

  const Cochain bphi0 = b_twisted(make_phi0());
  const Cochain big_b_phi2 = B_twisted(make_phi2());
  const Cochain bphi2 = b_twisted(make_phi2());

  long pairs = 0, quads = 0;
  for (const BasisEntry& e0 : basis) {
    for (const BasisEntry& e1 : basis) {
      const CocycleValue v = bphi0({e0.elem, e1.elem}) + big_b_phi2({e0.elem, e1.elem});
      ++pairs;
      if (!v.is_zero()) {
        fail_check({{"error", "tolerance"}, {"field", "b-phi0-plus-B-phi2"},
                    {"tuple", {e0.label, e1.label}}, {"value", v.str()}});
      }
    }
  }
  for (const BasisEntry& e0 : basis) {
    for (const BasisEntry& e1 : basis) {
      for (const BasisEntry& e2 : basis) {
        for (const BasisEntry& e3 : basis) {
          if (e0.degree + e1.degree + e2.degree + e3.degree > degree_max) continue;
          const CocycleValue v = bphi2({e0.elem, e1.elem, e2.elem, e3.elem});
          ++quads;
          if (!v.is_zero()) {
            fail_check({{"error", "tolerance"}, {"field", "b-phi2"},
                        {"tuple", {e0.label, e1.label, e2.label, e3.label}},
                        {"value", v.str()}});
          }
        }
      }
    }
  }

  // Hochschild nonvanishing witness: one term of the n = 1/2 Chern contraction
  const CocycleValue witness =
      phi2(ExactElem::unit(ring), -elem_from_word(ring, "cd"),
           scal(ring.q_pow(HalfInt(-1)), elem_from_word(ring, "ab")));

  ordered_json row;
  row["schema"] = kReportSchemaVersion;
  row["job"] = "cocycle-check";
  row["degree_max"] = degree_max;
  row["basis_size"] = static_cast<long>(basis.size());
  row["pairs_checked"] = pairs;
  row["quadruples_checked"] = quads;
  row["all_identities_zero"] = true;
  row["phi2_witness_nonzero"] = !witness.is_zero();
  emit(row, cfg);
  if (witness.is_zero()) {
    fail_check({{"error", "tolerance"}, {"field", "phi2-witness"},
                {"value", "0"}, {"expected", "nonzero"}});
  }
  return kExitOk;
}

int run_zeta(const JobConfig& cfg, const std::string& beta_text) {
  require_q_range(cfg.q);
  const ExactElem beta = parse_element(beta_text);
  const ZetaReport rep = zeta_residue(beta, cfg.q, cfg.precision);
  ordered_json row = report_json(rep);
  row["beta"] = beta_text;
  emit(row, cfg);
  const double tol = std::max(1e-4, 0.01 * std::abs(rep.expected));
  if (rep.abs_err > tol) {
    fail_check({{"error", "tolerance"}, {"field", "zeta-residue"}, {"value", rep.residue},
                {"expected", rep.expected}, {"abs_err", rep.abs_err}, {"tol", tol}});
  }
  return kExitOk;
}

int run_spectrum(const JobConfig& cfg, const std::string& lmax_text) {
  require_q_range(cfg.q);
  const HalfInt lmax = parse_half(lmax_text);
  ordered_json rows = ordered_json::array();
  for (long tl = 1; tl <= lmax.twice(); tl += 2) {
    const double ev = QRat::qnum(HalfInt::from_twice(tl + 1)).eval_s(std::sqrt(cfg.q));
    ordered_json row;
    row["l"] = HalfInt::from_twice(tl).str();
    row["eigenvalue"] = ev;  // together with its mirror -eigenvalue
    row["multiplicity_each_sign"] = tl + 1;
    rows.push_back(row);
  }
  ordered_json out;
  out["schema"] = kReportSchemaVersion;
  out["job"] = "spectrum";
  out["q"] = cfg.q;
  out["lmax"] = lmax.str();
  out["levels"] = rows;
  emit(out, cfg);
  return kExitOk;
}

int run_haar(const JobConfig& cfg, const std::string& expr, bool plain) {
  const ExactRing ring;
  const ExactElem x = parse_element(expr);
  const RadScalar value = haar(ring, x);
  if (plain) {
    std::cout << value.str() << "\n";
    return kExitOk;
  }
  ordered_json row;
  row["schema"] = kReportSchemaVersion;
  row["job"] = "haar";
  row["expr"] = expr;
  row["value_exact"] = value.str();
  row["value_at_q"] = value.eval_s(std::sqrt(cfg.q));
  emit(row, cfg);
  return kExitOk;
}

int run_pw(const JobConfig& cfg, const std::string& l_text, const std::string& r_text,
           const std::string& s_text) {
  const HalfInt l = parse_half(l_text), r = parse_half(r_text), s = parse_half(s_text);
  const ExactRing ring;
  ExactPWTable table(ring, l);
  const PWIndex idx(l, r, s);
  const PWElement<ExactRing>& elem = table.at(idx);
  ordered_json row;
  row["schema"] = kReportSchemaVersion;
  row["job"] = "pw";
  row["l"] = l.str();
  row["r"] = r.str();
  row["s"] = s.str();
  row["element"] = elem.element.str();
  row["norm_sq"] = elem.norm_sq.str();
  row["bigrade_m"] = idx.m_grade();
  row["bigrade_n"] = idx.n_grade();
  emit(row, cfg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical index computations on the standard q-sphere"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  JobConfig cfg;
  std::string q_text = "1/2";
  std::string n_text = "0";
  std::string lambda_text;
  if (const char* env = std::getenv("CACHE_DIR")) cfg.cache_dir = env;

  app.add_option("--format", cfg.format, "output format: json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory (env CACHE_DIR)");
  app.add_option("--precision", cfg.precision, "numeric series precision")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed echoed into randomized jobs");
  long threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (env NUM_THREADS)");

  CLI::App* c_index = app.add_subcommand("index", "index of the twisted Dirac pairing");
  std::string method = "symbolic";
  double tol = 1e-8;
  c_index->add_option("--n", n_text, "half-integer twist, e.g. 1/2")->required();
  c_index->add_option("--q", q_text, "deformation parameter in (0,1)");
  c_index->add_option("--method", method, "symbolic, kernel or both")
      ->check(CLI::IsMember({"symbolic", "kernel", "both"}));
  c_index->add_option("--lambda", lambda_text, "truncation cutoff (kernel route)");
  c_index->add_option("--tol", tol, "kernel tolerance")->capture_default_str();

  CLI::App* c_chern = app.add_subcommand("chern", "Chern character data of [P_n, V_n]");
  c_chern->add_option("--n", n_text, "half-integer twist")->required();
  c_chern->add_option("--q", q_text, "evaluation point");

  CLI::App* c_cocycle = app.add_subcommand("cocycle-check", "twisted cocycle identities");
  long degree_max = 4;
  c_cocycle->add_option("--degree-max", degree_max, "max total monomial degree")
      ->capture_default_str();

  CLI::App* c_zeta = app.add_subcommand("zeta", "residue of the weighted zeta function");
  std::string beta_text = "1";
  c_zeta->add_option("--beta", beta_text, "sphere-subalgebra element, e.g. \"bc\"");
  c_zeta->add_option("--q", q_text, "deformation parameter in (0,1)");

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "eigenvalue list of |D|");
  std::string lmax_text = "10";
  c_spectrum->add_option("--lmax", lmax_text, "largest spin level");
  c_spectrum->add_option("--q", q_text, "deformation parameter in (0,1)");

  CLI::App* c_haar = app.add_subcommand("haar", "Haar state of an algebra element");
  std::string expr = "1";
  bool haar_report = false;
  c_haar->add_option("--expr", expr, "element expression, e.g. \"(bc)^3\"")->required();
  c_haar->add_option("--q", q_text, "evaluation point");
  c_haar->add_flag("--report", haar_report, "emit a full report row instead of the bare value");

  CLI::App* c_pw = app.add_subcommand("pw", "Peter-Weyl matrix element in normal form");
  std::string l_text = "0", r_text = "0", s_text = "0";
  c_pw->add_option("--l", l_text, "spin, e.g. 3/2")->required();
  c_pw->add_option("--r", r_text, "row weight")->required();
  c_pw->add_option("--s", s_text, "column weight")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("NUM_THREADS")) threads = std::atol(env);
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
#endif

  try {
    cfg.q = parse_q(q_text);
    cfg.n = parse_half(n_text);
    if (!lambda_text.empty()) cfg.lambda = parse_half(lambda_text);

    if (c_index->parsed()) return run_index(cfg, method, tol);
    if (c_chern->parsed()) return run_chern(cfg);
    if (c_cocycle->parsed()) return run_cocycle_check(cfg, degree_max);
    if (c_zeta->parsed()) return run_zeta(cfg, beta_text);
    if (c_spectrum->parsed()) return run_spectrum(cfg, lmax_text);
    if (c_haar->parsed()) return run_haar(cfg, expr, !haar_report);
    if (c_pw->parsed()) return run_pw(cfg, l_text, r_text, s_text);
  } catch (const std::invalid_argument& e) {
    fail_check({{"error", "validation"}, {"detail", e.what()}});
  } catch (const std::domain_error& e) {
    fail_check({{"error", "validation"}, {"detail", e.what()}});
  } catch (const std::exception& e) {
    fail_check({{"error", "runtime"}, {"detail", e.what()}});
  }
  return kExitUsage;
}
