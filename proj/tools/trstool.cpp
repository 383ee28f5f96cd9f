// Command-line front end: field inspection, twisted-code summaries, coset
// scans, character-sum identities, named verification checks, and witness
// constructions.  Exit codes: 0 success, 1 failed checks, 2 usage errors.

#include "CLI11.hpp"

#include "trs/charsum.hpp"
#include "trs/code.hpp"
#include "trs/report.hpp"
#include "trs/witness.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using trs::Fe;
using trs::Field;
using trs::Json;

struct FieldArgs {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field size as a prime power");
    cmd->add_option("--p", p, "field characteristic");
    cmd->add_option("--m", m, "extension degree over the prime field");
  }

  std::pair<std::uint32_t, std::uint32_t> resolve() const {
    if (q != 0) return trs::split_prime_power(q);
    if (p == 0) throw trs::ConfigError("give --q, or --p with optional --m");
    return {p, m};
  }

  const Field& field() const {
    auto [pp, mm] = resolve();
    trs::RunConfig probe;
    probe.p = pp;
    probe.m = mm;
    probe.checks = {"lem2.1"};
    // Reuse the config validator for the prime and size constraints.
    trs::validate_config(probe);
    return trs::get_field(pp, mm);
  }
};

std::vector<Fe> parse_elements(const Field& F, const std::string& csv,
                               const char* what) {
  std::vector<Fe> out;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(cur, &pos, 0);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != cur.size() || v >= F.q())
      throw trs::ConfigError(std::string(what) + ": bad element '" + cur + "'");
    out.push_back(Fe(v));
  }
  if (out.empty())
    throw trs::ConfigError(std::string(what) + ": no elements given");
  return out;
}

Json fe_array(const std::vector<Fe>& v) {
  Json a = Json::array();
  for (Fe x : v) a.push_back(x);
  return a;
}

Json mat_json(const trs::Mat& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json cyc_json(const trs::CycInt& z) {
  Json a = Json::array();
  for (long long c : z.coeffs()) a.push_back(c);
  return a;
}

Json abs2_json(const trs::Abs2& a) {
  if (a.exact) return Json(a.exact_value);
  return Json(double(a.approx));
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t e,
                                         std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

trs::TrsParams make_params(const Field& F, const std::string& eval_set,
                           std::int64_t k, std::int64_t l, std::int64_t eta) {
  std::vector<Fe> A;
  if (eval_set == "units")
    A = trs::unit_eval_set(F);
  else if (eval_set == "full")
    A = trs::full_eval_set(F);
  else
    throw trs::ConfigError("eval set must be units or full");
  if (k < 1 || std::uint64_t(k) >= A.size())
    throw trs::ConfigError("k must satisfy 1 <= k <= n-1");
  if (l < 0) l = k - 1;
  if (l >= k) throw trs::ConfigError("l must satisfy l < k");
  if (eta < 1 || std::uint64_t(eta) >= F.q())
    throw trs::ConfigError("eta must be a nonzero element index");
  return trs::make_trs_params(F, A, std::uint32_t(k), std::uint32_t(l), Fe(eta));
}

// ---------------------------------------------------------------------------

int cmd_field(const FieldArgs& fa) {
  const Field& F = fa.field();
  std::cout << F.descriptor_json() << "\n";
  return 0;
}

int cmd_trs_info(const FieldArgs& fa, const std::string& eval_set,
                 std::int64_t k, std::int64_t l, std::int64_t eta,
                 std::uint64_t budget) {
  const Field& F = fa.field();
  trs::TrsParams P = make_params(F, eval_set, k, l, eta);
  trs::LinearCode C = trs::trs_code(P);
  Json j;
  j["q"] = F.q();
  j["n"] = P.n();
  j["k"] = P.k;
  j["l"] = P.l;
  j["eta"] = P.eta;
  j["A"] = fe_array(P.A);
  j["G"] = mat_json(C.G);
  j["H"] = mat_json(C.H);
  if (checked_pow(F.q(), P.k, budget)) {
    j["min_distance"] = trs::min_distance(C, budget);
    j["mds"] = trs::is_mds(C, budget);
  } else {
    j["min_distance"] = nullptr;
    j["mds"] = nullptr;
  }
  std::uint64_t coset_cap = std::min<std::uint64_t>(budget, 1ull << 27);
  if (checked_pow(F.q(), P.n() - P.k, coset_cap)) {
    j["covering_radius"] = trs::covering_radius(C);
  } else {
    j["covering_radius"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_scan(const FieldArgs& fa, const std::string& eval_set, std::int64_t k,
             std::int64_t l, std::int64_t eta, const std::string& out_path) {
  const Field& F = fa.field();
  trs::TrsParams P = make_params(F, eval_set, k, l, eta);
  if (!checked_pow(F.q(), P.n() - P.k, 1ull << 27))
    throw trs::ConfigError("syndrome space too large to scan");
  trs::LinearCode C = trs::trs_code(P);
  trs::CosetTable T = trs::coset_weights(C);
  std::ostringstream out;
  out << "syndrome,leader_weight,is_deep_hole\n";
  for (std::uint64_t key = 0; key < T.size; ++key) {
    std::vector<Fe> s = trs::key_syndrome(F, key, T.digits);
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? ":" : "") << s[i];
    bool deep = T.weight[key] == P.n() - P.k;
    out << "," << unsigned(T.weight[key]) << "," << (deep ? 1 : 0) << "\n";
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw trs::ConfigError("cannot write " + out_path);
    f << out.str();
    std::cout << "wrote " << T.size << " rows to " << out_path << "\n";
  }
  return 0;
}

int cmd_charsum(const FieldArgs& fa) {
  const Field& F = fa.field();
  std::uint32_t q = F.q();
  Json rows = Json::array();
  bool all_pass = true;

  auto push = [&](const char* identity, Json params, Json lhs, Json rhs,
                  bool pass) {
    rows.push_back({{"identity", identity},
                    {"params", std::move(params)},
                    {"lhs", std::move(lhs)},
                    {"rhs", std::move(rhs)},
                    {"pass", pass}});
    all_pass = all_pass && pass;
  };

  if (F.odd()) {
    std::uint32_t quad = trs::quadratic_index(F);
    for (Fe a = 1; a < std::min<std::uint32_t>(q, 5); ++a) {
      trs::Abs2 n2 = trs::abs_square(trs::gauss_sum(F, quad, a));
      push("gauss-quad-abs2", {{"a", a}, {"psi", quad}}, abs2_json(n2), q,
           n2.equals(q));
    }
    for (auto [a, b] : std::vector<std::pair<Fe, Fe>>{{1, 1}, {1, 2}, {2, 3}}) {
      if (a >= q || b >= q || b == 0) continue;
      bool okq = trs::check_gauss_shift(F, quad, a, b);
      push("gauss-shift", {{"a", a}, {"b", b}, {"psi", quad}}, 1, 1, okq);
    }
  } else {
    trs::CycInt g = trs::gauss_sum(F, 0, 1);
    push("gauss-trivial", {{"a", 1}, {"psi", 0}}, cyc_json(g),
         cyc_json(trs::CycInt::root_pow(F.p(), 0).scaled(-1)),
         g.is_rational() && g.rational_value() == -1);
  }
  if (q > 2) {
    bool ok1 = trs::check_gauss_shift(F, 1, 1, 2 % q == 0 ? 1 : 2);
    push("gauss-shift", {{"a", 1}, {"b", 2 % q == 0 ? 1 : 2}, {"psi", 1}}, 1, 1,
         ok1);
  }

  for (auto [a, b, n] :
       std::vector<std::tuple<Fe, Fe, std::uint32_t>>{{1, 0, 2}, {1, 1, 2},
                                                      {2, 1, 3}, {1, 2, 3}}) {
    if (a == 0 || a >= q || b >= q) continue;
    trs::PowerSumReport rep = trs::weil_power_sum(F, a, b, n);
    long long bound = (long long)(rep.d - 1) * (rep.d - 1) * q;
    push("weil-power", {{"a", a}, {"b", b}, {"n", n}, {"d", rep.d}},
         abs2_json(rep.abs2), bound, rep.bound_ok);
  }

  for (auto [b, a2, a1, a0] : std::vector<std::array<Fe, 4>>{
           {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 2, 1, 1}, {2, 1, 3, 2}}) {
    if (b == 0 || a2 == 0 || b >= q || a2 >= q || a1 >= q || a0 >= q) continue;
    trs::QuadSumReport rep = trs::quad_complete_sum(F, b, a2, a1, a0);
    push("quad-complete",
         {{"b", b}, {"a2", a2}, {"a1", a1}, {"a0", a0}},
         cyc_json(rep.sum), cyc_json(rep.closed), rep.match);
  }

  for (auto [a, b] : std::vector<std::pair<Fe, Fe>>{{1, 1}, {1, 2}, {2, 3}}) {
    if (a == 0 || b == 0 || a >= q || b >= q) continue;
    trs::KloostermanReport rep = trs::kloosterman(F, a, b);
    push("kloosterman", {{"a", a}, {"b", b}}, abs2_json(rep.abs2), 4 * q,
         rep.bound_ok && rep.trace_bound_ok);
  }

  if (F.odd()) {
    for (auto [a1, a2, b] : std::vector<std::array<Fe, 3>>{
             {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 3, 4}}) {
      if (a1 == 0 || a2 == 0 || a1 >= q || a2 >= q || b >= q) continue;
      trs::ConicReport rep = trs::conic_count(F, a1, a2, b);
      push("conic", {{"a1", a1}, {"a2", a2}, {"b", b}}, rep.count,
           rep.predicted, rep.match);
    }
  }

  {
    trs::Bivar hyper;
    hyper.c = {{F.neg(1), 0}, {0, 1}};  // X Y - 1
    push("surface-hyperbola", Json::object(), trs::surface_count(F, hyper),
         q - 1, trs::surface_count(F, hyper) == q - 1);
    trs::Bivar par;
    par.c = {{0, 1}, {0, 0}, {F.neg(1), 0}};  // Y - X^2
    push("surface-parabola", Json::object(), trs::surface_count(F, par), q,
         trs::surface_count(F, par) == q);
  }

  Json j;
  j["field"] = Json::parse(F.descriptor_json());
  j["rows"] = rows;
  std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_witness(const FieldArgs& fa, const std::string& kind, std::int64_t r,
                std::int64_t eta, std::int64_t b, std::int64_t i,
                std::int64_t j, std::int64_t a0, std::int64_t ratio,
                const std::string& syndrome_csv) {
  const Field& F = fa.field();
  std::uint32_t q = F.q();
  Json out;
  out["kind"] = kind;

  auto need_eta = [&]() -> Fe {
    if (eta < 1 || std::uint64_t(eta) >= q)
      throw trs::ConfigError("--eta must be a nonzero element index");
    return Fe(eta);
  };
  auto need_r = [&]() -> std::uint32_t {
    if (r < 0) throw trs::ConfigError("--r is required for this witness");
    return std::uint32_t(r);
  };

  if (kind == "sum-subset") {
    std::vector<Fe> xs = trs::sum_subset_witness(F, need_r(), need_eta());
    out["subset"] = fe_array(xs);
  } else if (kind == "quartet") {
    trs::QuartetWitness w = trs::quartet_witness(F, need_eta());
    out["subset"] = fe_array(w.subset);
    out["alpha"] = w.alpha;
    out["excluded"] = fe_array(w.excluded);
  } else if (kind == "quadric") {
    if (b < 0 || std::uint64_t(b) >= q)
      throw trs::ConfigError("--b must be an element index");
    trs::QuadricWitness w = trs::quadric_witness(F, Fe(b), need_r(), need_eta());
    out["subset"] = fe_array(w.subset);
    out["guided"] = w.guided;
  } else if (kind == "geometric") {
    if (a0 < 1 || std::uint64_t(a0) >= q || ratio < 1 || std::uint64_t(ratio) >= q)
      throw trs::ConfigError("--a0 and --ratio must be nonzero element indices");
    std::uint32_t rr = need_r();
    if (rr + 4 > q) throw trs::ConfigError("need r <= q-4");
    trs::TrsParams P =
        trs::make_trs_params(F, trs::unit_eval_set(F), q - 2 - rr, q - 3 - rr,
                             need_eta());
    trs::Syndrome a = trs::geometric_syndrome(F, Fe(a0), F.mul(Fe(a0), Fe(ratio)),
                                              rr, need_eta());
    out["syndrome"] = fe_array(a);
    out["subset"] = fe_array(trs::geometric_rejection_subset(P, a));
  } else if (kind == "prefix-gamma") {
    std::uint32_t rr = need_r();
    if (rr + 4 > q) throw trs::ConfigError("need r <= q-4");
    trs::TrsParams P =
        trs::make_trs_params(F, trs::unit_eval_set(F), q - 2 - rr, q - 3 - rr,
                             need_eta());
    trs::Syndrome a = parse_elements(F, syndrome_csv, "--syndrome");
    if (a.size() != rr + 1)
      throw trs::ConfigError("--syndrome must have r+1 entries");
    auto w = trs::prefix_gamma_witness(P, a);
    if (!w) {
      out["found"] = false;
      std::cout << out.dump(2) << "\n";
      return 1;
    }
    out["found"] = true;
    out["prefix"] = fe_array(w->prefix);
    out["gamma"] = w->gamma;
    out["scaled"] = fe_array(w->scaled);
    out["resultant"] = w->resultant;
  } else if (kind == "greedy-pair" || kind == "greedy-disc") {
    if (i < 2 || j < 1 || j >= i)
      throw trs::ConfigError("need 1 <= j <= i-1 via --i and --j");
    std::vector<Fe> xs =
        kind == "greedy-pair"
            ? trs::greedy_nonzero_pair(F, std::uint32_t(i), std::uint32_t(j))
            : trs::greedy_discriminant(F, std::uint32_t(i), std::uint32_t(j));
    out["subset"] = fe_array(xs);
  } else {
    throw trs::ConfigError(
        "witness kind must be one of sum-subset, quartet, quadric, geometric, "
        "prefix-gamma, greedy-pair, greedy-disc");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int finish_run(const trs::RunConfig& cfg) {
  trs::Report rep = trs::run(cfg);
  Json j = trs::report_json(rep);
  std::string text = j.dump(2);
  text.push_back('\n');
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f) throw trs::ConfigError("cannot write " + cfg.output);
    f << text;
  }
  if (!cfg.csv.empty()) {
    std::ofstream f(cfg.csv);
    if (!f) throw trs::ConfigError("cannot write " + cfg.csv);
    f << trs::report_csv(rep);
  }
  std::cout << text;
  return trs::report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Reed-Solomon deep-hole toolkit"};
  app.require_subcommand(1);

  FieldArgs fa_field, fa_info, fa_scan, fa_char, fa_verify, fa_witness;

  CLI::App* c_field = app.add_subcommand("field", "print the field descriptor");
  fa_field.attach(c_field);

  CLI::App* c_info =
      app.add_subcommand("trs-info", "print code parameters and matrices");
  fa_info.attach(c_info);
  std::string info_eval = "units";
  std::int64_t info_k = -1, info_l = -1, info_eta = 1;
  std::uint64_t info_budget = 10'000'000;
  c_info->add_option("--eval-set", info_eval, "evaluation set: units or full");
  c_info->add_option("--k", info_k, "code dimension")->required();
  c_info->add_option("--l", info_l, "twist hook index (default k-1)");
  c_info->add_option("--eta", info_eta, "twist coefficient element index");
  c_info->add_option("--budget", info_budget, "enumeration budget");

  CLI::App* c_scan =
      app.add_subcommand("scan", "CSV of every coset: leader weight, deep flag");
  fa_scan.attach(c_scan);
  std::string scan_eval = "units", scan_out;
  std::int64_t scan_k = -1, scan_l = -1, scan_eta = 1;
  c_scan->add_option("--eval-set", scan_eval, "evaluation set: units or full");
  c_scan->add_option("--k", scan_k, "code dimension")->required();
  c_scan->add_option("--l", scan_l, "twist hook index (default k-1)");
  c_scan->add_option("--eta", scan_eta, "twist coefficient element index");
  c_scan->add_option("--out", scan_out, "CSV output path (default stdout)");

  CLI::App* c_char =
      app.add_subcommand("charsum", "character-sum identity suite");
  fa_char.attach(c_char);

  CLI::App* c_verify =
      app.add_subcommand("verify", "run named checks over a parameter grid");
  fa_verify.attach(c_verify);
  std::vector<std::string> verify_ids;
  std::int64_t v_k = -1, v_l = -1;
  std::string v_eta = "all", v_mode = "exhaustive", v_eval = "units";
  std::string v_out, v_csv;
  std::uint64_t v_budget = 10'000'000, v_coset = 200'000'000;
  std::uint64_t v_samples = 10'000, v_seed = 0xC0FFEE, v_time = 0;
  std::uint32_t v_workers = 0;
  bool v_timings = false;
  c_verify->add_option("ids", verify_ids, "check identifiers")->required();
  c_verify->add_option("--k", v_k, "restrict to one code dimension");
  c_verify->add_option("--l", v_l, "restrict to one twist hook index");
  c_verify->add_option("--eta", v_eta, "all, first2, or an element index");
  c_verify->add_option("--mode", v_mode, "exhaustive or sampled");
  c_verify->add_option("--eval-set", v_eval, "units, full or both");
  c_verify->add_option("--budget", v_budget, "subset enumeration budget");
  c_verify->add_option("--coset-budget", v_coset, "syndrome space cap");
  c_verify->add_option("--time-budget-ms", v_time, "wall clock cap, 0 = none");
  c_verify->add_option("--samples", v_samples, "samples in sampled mode");
  c_verify->add_option("--seed", v_seed, "sampling seed");
  c_verify->add_option("--workers", v_workers, "worker threads, 0 = all");
  c_verify->add_option("--out", v_out, "also write the JSON report here");
  c_verify->add_option("--csv", v_csv, "also write a CSV summary here");
  c_verify->add_flag("--timings", v_timings, "include per-row runtimes");

  CLI::App* c_report =
      app.add_subcommand("report", "run checks from a key=value config file");
  std::string report_config;
  c_report->add_option("--config", report_config, "config file path")
      ->required();

  CLI::App* c_witness =
      app.add_subcommand("witness", "construct one rejection witness");
  fa_witness.attach(c_witness);
  std::string w_kind, w_syndrome;
  std::int64_t w_r = -1, w_eta = 1, w_b = -1, w_i = -1, w_j = -1;
  std::int64_t w_a0 = 1, w_ratio = 1;
  c_witness->add_option("kind", w_kind, "witness kind")->required();
  c_witness->add_option("--r", w_r, "subset size");
  c_witness->add_option("--eta", w_eta, "twist coefficient element index");
  c_witness->add_option("--b", w_b, "family parameter");
  c_witness->add_option("--i", w_i, "subset size for greedy constructions");
  c_witness->add_option("--j", w_j, "symmetric-function index");
  c_witness->add_option("--a0", w_a0, "leading syndrome entry");
  c_witness->add_option("--ratio", w_ratio, "geometric ratio");
  c_witness->add_option("--syndrome", w_syndrome, "comma-separated entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (c_field->parsed()) return cmd_field(fa_field);
    if (c_info->parsed())
      return cmd_trs_info(fa_info, info_eval, info_k, info_l, info_eta,
                          info_budget);
    if (c_scan->parsed())
      return cmd_scan(fa_scan, scan_eval, scan_k, scan_l, scan_eta, scan_out);
    if (c_char->parsed()) return cmd_charsum(fa_char);
    if (c_verify->parsed()) {
      trs::RunConfig cfg;
      auto [p, m] = fa_verify.resolve();
      cfg.p = p;
      cfg.m = m;
      cfg.checks = verify_ids;
      cfg.eval_set = v_eval;
      if (v_k >= 0) cfg.k = std::uint32_t(v_k);
      if (v_l >= 0) cfg.l = std::uint32_t(v_l);
      cfg.eta = v_eta;
      cfg.mode = v_mode;
      cfg.budget = v_budget;
      cfg.coset_budget = v_coset;
      cfg.time_budget_ms = v_time;
      cfg.samples = v_samples;
      cfg.seed = v_seed;
      cfg.workers = v_workers;
      cfg.output = v_out;
      cfg.csv = v_csv;
      cfg.timings = v_timings;
      return finish_run(cfg);
    }
    if (c_report->parsed()) return finish_run(trs::load_config(report_config));
    if (c_witness->parsed())
      return cmd_witness(fa_witness, w_kind, w_r, w_eta, w_b, w_i, w_j, w_a0,
                         w_ratio, w_syndrome);
  } catch (const trs::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
