// mtk: small-matroid census, GF(q) representability, zero patterns and
// counting-bound verification from one binary.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage or
// invalid input, 3 budget refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mtk/bounds.hpp"
#include "mtk/census_io.hpp"
#include "mtk/enumerate.hpp"
#include "mtk/gf.hpp"
#include "mtk/matroid.hpp"
#include "mtk/poly.hpp"
#include "mtk/poly_io.hpp"
#include "mtk/represent.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mtk::input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mtk::input_error("cannot write " + path);
  out << bytes;
}

void emit_report(const std::string& path, const json& j) {
  if (path.empty()) return;
  write_file(path, j.dump(2) + "\n");
}

std::string family_str(const mtk::Matroid& m) {
  std::string s;
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i) s += ';';
    s += mtk::mask_to_string(m.bases()[i]);
  }
  return s;
}

json fields_json(const std::vector<mtk::GFContext>& fields) {
  json a = json::array();
  for (const auto& f : fields) a.push_back(f.q());
  return a;
}

struct CommonOpts {
  std::uint64_t budget = 0;
  int workers = 1;
  int precision = 15;
  std::string report;
};

int cmd_enumerate(int n, int r, const std::string& out_path, const std::string& mode_s,
                  const CommonOpts& c) {
  mtk::Census census = mtk::enumerate_matroids(n, r);
  mtk::CensusMode mode =
      mode_s == "labeled" ? mtk::CensusMode::Labeled : mtk::CensusMode::Unlabeled;
  std::string bytes = mtk::serialize_census(census, mode);
  if (!out_path.empty()) write_file(out_path, bytes);

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "enumerate";
  rep["params"] = {{"n", n}, {"r", r}, {"mode", mode_s}, {"out", out_path}};
  rep["results"] = {{"unlabeled_classes", census.unlabeled_count()},
                    {"labeled_total", census.labeled_count().str()},
                    {"bytes", bytes.size()}};
  emit_report(c.report, rep);

  std::cout << "census n=" << n << " r=" << r << ": " << census.unlabeled_count()
            << " classes, " << census.labeled_count().str() << " labeled matroids\n";
  if (!out_path.empty()) std::cout << "wrote " << out_path << " (" << bytes.size() << " bytes)\n";
  return 0;
}

int cmd_check_rep(const std::string& in_path, const std::string& fields_csv,
                  const CommonOpts& c) {
  auto fields = mtk::parse_field_list(fields_csv);
  mtk::ParsedCensus pc = mtk::parse_census(read_file(in_path));
  std::uint64_t budget = c.budget ? c.budget : mtk::kDefaultRepBudget;
  mtk::RepCensusReport r =
      mtk::census_representability(pc.census, fields, budget, c.workers);

  json per_item = json::array();
  for (std::size_t i = 0; i < pc.census.items.size(); ++i) {
    const mtk::RepSummary& s = r.summaries[i];
    json pf = json::array();
    for (const auto& [q, res] : s.per_field) {
      json one = {{"q", q}, {"status", mtk::rep_status_str(res.status)}};
      if (res.witness) {
        json rows = json::array();
        for (int a = 0; a < res.witness->rows(); ++a) {
          json row = json::array();
          for (int b = 0; b < res.witness->cols(); ++b)
            row.push_back(int(res.witness->at(a, b)));
          rows.push_back(row);
        }
        one["witness"] = rows;  // the u block, in the normalized labelling
      }
      pf.push_back(std::move(one));
    }
    per_item.push_back({{"bases", family_str(pc.census.items[i].matroid)},
                        {"orbit", pc.census.items[i].labeled_multiplicity},
                        {"verdict", mtk::rep_verdict_str(r.verdicts[i])},
                        {"per_field", std::move(pf)}});
  }
  json hist = json::array();
  for (const auto& [nb, counts] : r.nonbasis_histogram)
    hist.push_back({{"nonbases", nb},
                    {"classes", counts.first},
                    {"representable", counts.second}});

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "check-rep";
  rep["params"] = {{"in", in_path}, {"fields", fields_json(fields)}, {"budget", budget}};
  rep["results"] = {
      {"n", r.n},
      {"r", r.r},
      {"unlabeled",
       {{"total", r.unlabeled_total},
        {"representable", r.unlabeled_representable},
        {"not_over_tested_fields", r.unlabeled_not},
        {"inconclusive", r.unlabeled_inconclusive}}},
      {"labeled",
       {{"total", r.labeled_total.str()},
        {"representable", r.labeled_representable.str()},
        {"not_over_tested_fields", r.labeled_not.str()},
        {"inconclusive", r.labeled_inconclusive.str()}}},
      {"nonbasis_histogram", hist},
      {"per_item", per_item}};
  emit_report(c.report, rep);

  std::cout << "census n=" << r.n << " r=" << r.r << ": " << r.unlabeled_total
            << " classes over fields " << fields_csv << "\n"
            << "  representable:          " << r.unlabeled_representable << "\n"
            << "  not over tested fields: " << r.unlabeled_not << "\n"
            << "  inconclusive:           " << r.unlabeled_inconclusive << "\n";
  if (pc.census.items.size() <= 32) {
    for (std::size_t i = 0; i < pc.census.items.size(); ++i) {
      std::cout << "  [" << family_str(pc.census.items[i].matroid) << "] "
                << mtk::rep_verdict_str(r.verdicts[i]);
      for (const auto& [q, res] : r.summaries[i].per_field)
        if (res.status == mtk::RepStatus::Found) std::cout << " via GF(" << q << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_zero_patterns(const std::string& sys_path, const std::string& fields_csv,
                      const CommonOpts& c) {
  auto fields = mtk::parse_field_list(fields_csv);
  mtk::PolySystem sys = mtk::parse_poly_system(read_file(sys_path));
  std::uint64_t budget = c.budget ? c.budget : mtk::kDefaultEvalBudget;

  int N = sys.size();
  int d = sys.max_degree();
  int m = sys.nvars;
  mtk::Big bound = mtk::rbg_pattern_bound(N, d, m);

  // the C(Nd+m, m) bound applies per field; the cross-field union is only
  // reported, not gated
  json per_field = json::array();
  mtk::PatternSet all;
  bool within = true;
  for (const auto& F : fields) {
    mtk::PatternSet one;
    try {
      one = mtk::enumerate_patterns(sys, F, budget, c.workers);
    } catch (const mtk::budget_error& e) {
      throw mtk::budget_error(F.name() + ": " + e.what(), e.required);
    }
    bool ok = mtk::Big(one.size()) <= bound;
    within = within && ok;
    per_field.push_back({{"q", F.q()}, {"patterns", one.size()}, {"within_bound", ok}});
    for (auto& [pb, w] : one) all.try_emplace(pb, std::move(w));
  }

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "zero-patterns";
  rep["params"] = {{"system", sys_path},
                   {"fields", fields_json(fields)},
                   {"budget", budget}};
  json results = {{"nvars", m},
                  {"polynomials", N},
                  {"max_degree", d},
                  {"max_norm", sys.max_norm().str()},
                  {"pattern_bound", bound.str()},
                  {"per_field", per_field},
                  {"patterns_union", all.size()},
                  {"within_bound", within}};
  if (all.size() <= 4096) {
    json plist = json::array();
    for (const auto& [pb, w] : all) {
      json pt = json::array();
      for (mtk::gf_t x : w.point) pt.push_back(int(x));
      plist.push_back({{"nonzero", pb.indices()}, {"witness_q", w.q}, {"witness", pt}});
    }
    results["pattern_list"] = plist;
  }
  rep["results"] = results;
  emit_report(c.report, rep);

  std::cout << "system " << sys_path << ": N=" << N << " polys, m=" << m
            << " vars, max degree " << d << "\n"
            << "patterns realised over " << fields_csv << ": " << all.size()
            << " (per-field bound " << bound.str() << ", within: "
            << (within ? "yes" : "no") << ")\n";
  return within ? 0 : 1;
}

int cmd_bounds(int n, int r, const CommonOpts& c) {
  if (n < 1) throw mtk::input_error("bounds: n >= 1 required");
  json results;
  std::ostringstream hum;
  int digits = c.precision;

  results["n"] = n;
  hum << "n = " << n << "\n";
  results["delta"] = mtk::delta_of_n(n);
  results["d"] = mtk::d_of_n(n);
  mtk::LogBound kn = mtk::knuth_log2_lower(n);
  results["knuth_log2_lower"] = mtk::real_str(kn.log2_value, digits);
  hum << "delta(n) = " << mtk::delta_of_n(n) << ", d(n) = " << mtk::d_of_n(n) << "\n";
  hum << "knuth_log2_lower(n)      = " << mtk::real_str(kn.log2_value, digits) << "\n";
  if (n >= 4) {
    mtk::LogBound cj = n <= 30 ? mtk::conjecture_log2_count(n)
                               : mtk::conjecture_log2_count_lgamma(n);
    results["conjecture_log2_count"] = mtk::real_str(cj.log2_value, digits);
    hum << "conjecture_log2_count(n) = " << mtk::real_str(cj.log2_value, digits) << "\n";
  }
  if (r >= 0) {
    results["r"] = r;
    mtk::LogBound k = mtk::log2_k(n, r);
    results["log2_k"] = mtk::real_str(k.log2_value, digits);
    results["log2_k_error"] = mtk::real_str(k.error_radius, 3);
    hum << "log2_k(n,r)              = " << mtk::real_str(k.log2_value, digits) << "\n";
    if (r >= 1) {
      mtk::LogBound kp = mtk::log2_k_prime(n, r);
      results["log2_k_prime"] = mtk::real_str(kp.log2_value, digits);
      hum << "log2_k_prime(n,r)        = " << mtk::real_str(kp.log2_value, digits) << "\n";
    }
  }

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "bounds";
  rep["params"] = {{"n", n}, {"r", r}, {"precision", digits}};
  rep["results"] = results;
  emit_report(c.report, rep);

  std::cout << hum.str();
  return 0;
}

int cmd_verify_theorem2(int n_from, int n_to, const CommonOpts& c) {
  if (n_from < 12) throw mtk::input_error("verify-theorem2: range must start at n >= 12");
  if (n_to < n_from) throw mtk::input_error("verify-theorem2: empty range");

  bool all_true = true;
  json per_n = json::array();
  for (int n = n_from; n <= n_to; ++n) {
    json inst = json::array();
    for (int r = 2; r <= n / 2; ++r) {
      // hypothesis at the minors instantiation: the pattern system of
      // [x | I_r] has N = C(n,r) polynomials of degree <= r in r(n-r)
      // variables and norm 1; k is the labelled lower-bound count scaled
      // by the isomorphism slack 2^-n
      std::int64_t N = static_cast<std::int64_t>(mtk::binom64(n, r));
      mtk::LogBound lk = mtk::log2_k(n, r);
      mtk::LogBound shifted{lk.log2_value - n, lk.error_radius};
      mtk::BoundCheck bc = mtk::theorem2_holds(N, r, r * (n - r), 1, shifted);
      if (bc.verdict != mtk::Verdict::True) all_true = false;
      inst.push_back({{"r", r},
                      {"verdict", mtk::verdict_str(bc.verdict)},
                      {"margin", mtk::real_str(bc.margin, c.precision)}});
    }
    mtk::BoundCheck mc = mtk::main_theorem_check(n);
    if (mc.verdict != mtk::Verdict::True) all_true = false;
    per_n.push_back({{"n", n},
                     {"main_check",
                      {{"verdict", mtk::verdict_str(mc.verdict)},
                       {"margin", mtk::real_str(mc.margin, c.precision)}}},
                     {"hypothesis", inst}});
    std::cout << "n=" << n << ": main check " << mtk::verdict_str(mc.verdict)
              << " (margin " << mtk::real_str(mc.margin, 6) << " bits), hypothesis "
              << (all_true ? "holds so far" : "FAILED") << "\n";
  }

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "verify-theorem2";
  rep["params"] = {{"n_from", n_from}, {"n_to", n_to}};
  rep["results"] = {{"per_n", per_n}, {"all_true", all_true}};
  emit_report(c.report, rep);

  std::cout << (all_true ? "ALL CHECKS TRUE" : "SOME CHECK FAILED") << "\n";
  return all_true ? 0 : 1;
}

int cmd_conjecture_sample(int n, int r, std::uint64_t trials, std::uint64_t seed,
                          const std::string& fields_csv, const CommonOpts& c) {
  auto fields = mtk::parse_field_list(fields_csv);
  std::uint64_t budget = c.budget ? c.budget : mtk::kDefaultRepBudget;
  mtk::SampleReport s =
      mtk::sample_nonbasis_candidates(n, r, trials, seed, fields, budget);

  json rep;
  rep["schema"] = "mtk-report-1";
  rep["command"] = "conjecture-sample";
  rep["params"] = {{"n", n},           {"r", r},
                   {"trials", trials}, {"seed", seed},
                   {"fields", fields_json(fields)}, {"budget", budget}};
  rep["results"] = {{"removed_subsets", s.removed},
                    {"exchange_closed", s.exchange_closed},
                    {"representable", s.representable},
                    {"not_representable", s.not_representable},
                    {"inconclusive", s.inconclusive},
                    {"generator", s.generator}};
  emit_report(c.report, rep);

  std::cout << "n=" << n << " r=" << r << ": removed d(n)-1=" << s.removed
            << " subsets per trial, " << trials << " trials (seed " << seed << ")\n"
            << "  exchange-closed:   " << s.exchange_closed << "\n"
            << "  representable:     " << s.representable << "\n"
            << "  not representable: " << s.not_representable << "\n"
            << "  inconclusive:      " << s.inconclusive << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid census, representability and counting-bound toolkit"};
  app.require_subcommand(1);

  CommonOpts common;

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "exhaustive (n, r) matroid census");
  int e_n = 0, e_r = 0;
  std::string e_out, e_mode = "unlabeled";
  enu->add_option("--n", e_n, "ground set size")->required();
  enu->add_option("--r", e_r, "rank")->required();
  enu->add_option("--out", e_out, "census file to write");
  enu->add_option("--mode", e_mode, "unlabeled|labeled")
      ->check(CLI::IsMember({"unlabeled", "labeled"}));
  enu->add_option("--report", common.report, "JSON report path");

  // check-rep
  auto* chk = app.add_subcommand("check-rep", "representability verdicts for a census file");
  std::string k_in, k_fields = "2,3,4,5,7,8";
  chk->add_option("--in", k_in, "census file")->required();
  chk->add_option("--fields", k_fields, "comma-joined field orders");
  chk->add_option("--budget", common.budget, "search-node budget per (matroid, field)");
  chk->add_option("--workers", common.workers, "worker threads");
  chk->add_option("--report", common.report, "JSON report path");

  // zero-patterns
  auto* zp = app.add_subcommand("zero-patterns", "realisable zero patterns of a system");
  std::string z_sys, z_fields = "2,3";
  zp->add_option("--system", z_sys, "polynomial system file")->required();
  zp->add_option("--fields", z_fields, "comma-joined field orders");
  zp->add_option("--budget", common.budget, "point-evaluation budget per field");
  zp->add_option("--workers", common.workers, "worker threads");
  zp->add_option("--report", common.report, "JSON report path");

  // bounds
  auto* bd = app.add_subcommand("bounds", "counting bounds at one (n, r)");
  int b_n = 0, b_r = -1;
  bd->add_option("--n", b_n, "ground set size")->required();
  bd->add_option("--r", b_r, "rank (optional)");
  bd->add_option("--precision", common.precision, "significant digits");
  bd->add_option("--report", common.report, "JSON report path");

  // verify-theorem2
  auto* vt = app.add_subcommand("verify-theorem2",
                                "hypothesis + main inequality over an n range");
  int v_from = 12, v_to = 20;
  std::string v_range;
  vt->add_option("--n-range", v_range, "range as <from>..<to>, e.g. 12..16");
  vt->add_option("--n-from", v_from, "first n (>= 12); ignored with --n-range");
  vt->add_option("--n-to", v_to, "last n; ignored with --n-range");
  vt->add_option("--precision", common.precision, "significant digits");
  vt->add_option("--report", common.report, "JSON report path");

  // conjecture-sample
  auto* cs = app.add_subcommand("conjecture-sample",
                                "random near-uniform families: matroid + representability rates");
  int s_n = 0, s_r = -1;
  std::uint64_t s_trials = 100, s_seed = 0;
  std::string s_fields = "2,3,4,5,7,8";
  cs->add_option("--n", s_n, "ground set size")->required();
  cs->add_option("--r", s_r, "rank (default floor(n/2))");
  cs->add_option("--trials", s_trials, "number of trials");
  cs->add_option("--seed", s_seed, "RNG seed")->required();
  cs->add_option("--fields", s_fields, "comma-joined field orders");
  cs->add_option("--budget", common.budget, "search-node budget per (matroid, field)");
  cs->add_option("--report", common.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*enu) rc = cmd_enumerate(e_n, e_r, e_out, e_mode, common);
    if (*chk) rc = cmd_check_rep(k_in, k_fields, common);
    if (*zp) rc = cmd_zero_patterns(z_sys, z_fields, common);
    if (*bd) rc = cmd_bounds(b_n, b_r, common);
    if (*vt) {
      if (!v_range.empty()) {
        std::size_t dots = v_range.find("..");
        std::size_t used = 0;
        try {
          if (dots == std::string::npos) throw std::invalid_argument(v_range);
          v_from = std::stoi(v_range.substr(0, dots), &used);
          if (used != dots) throw std::invalid_argument(v_range);
          std::string tail = v_range.substr(dots + 2);
          v_to = std::stoi(tail, &used);
          if (used != tail.size()) throw std::invalid_argument(v_range);
        } catch (const std::exception&) {
          throw mtk::input_error("--n-range must look like 12..16, got '" + v_range + "'");
        }
      }
      rc = cmd_verify_theorem2(v_from, v_to, common);
    }
    if (*cs) rc = cmd_conjecture_sample(s_n, s_r < 0 ? s_n / 2 : s_r, s_trials, s_seed,
                                        s_fields, common);
  } catch (const mtk::budget_error& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return 3;
  } catch (const mtk::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mtk::input_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "elapsed "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  return rc;
}
