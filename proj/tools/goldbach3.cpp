// goldbach3 — batch front end for the library: table building and caching,
// representation counts, singular series, admissibility construction,
// deviation scans, arc decompositions and sieve ratio reports, with
// deterministic CSV/JSON output.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldbach3/goldbach3.hpp"

namespace g3 = goldbach3;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string out_path;
  std::string format = "csv";
  std::string cache_dir;
  std::uint64_t seed = 0;
  int threads = 0;
};

std::optional<std::filesystem::path> cache_dir_of(const GlobalOpts& g) {
  if (g.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(g.cache_dir);
}

// All output goes through a string buffer so a run is all-or-nothing.
int emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(g.out_path, std::ios::trunc | std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << g.out_path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

ordered_json meta_json(const g3::CommentHeader& header) {
  ordered_json m;
  for (const auto& [k, v] : header.entries) m[k] = v;
  return m;
}

struct ConstraintFlags {
  std::int64_t n = 0;
  std::uint64_t q1 = 1, a1 = 0, q2 = 1, a2 = 0, q3 = 1, a3 = 0;

  g3::Constraint to_constraint() const {
    return g3::Constraint::make(n, q1, a1, q2, a2, q3, a3);
  }

  void add_flags(CLI::App* cmd, bool with_n = true) {
    if (with_n) cmd->add_option("--n", n, "target n")->required();
    cmd->add_option("--q1", q1, "modulus q1 (default 1)");
    cmd->add_option("--a1", a1, "residue a1 mod q1");
    cmd->add_option("--q2", q2, "modulus q2 (default 1)");
    cmd->add_option("--a2", a2, "residue a2 mod q2");
    cmd->add_option("--q3", q3, "modulus q3 (default 1)");
    cmd->add_option("--a3", a3, "residue a3 mod q3");
  }

  void echo(g3::CommentHeader& h) const {
    h.add("n", n);
    h.add("q1", q1);
    h.add("a1", a1);
    h.add("q2", q2);
    h.add("a2", a2);
    h.add("q3", q3);
    h.add("a3", a3);
  }
};

std::vector<std::uint64_t> range_upto(std::uint64_t qmax) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t q = 1; q <= qmax; ++q) v.push_back(q);
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) v.push_back(std::stoull(item));
  }
  return v;
}

// ---------------------------------------------------------------------------

int cmd_count(const GlobalOpts& g, const ConstraintFlags& cf,
              const std::string& engine) {
  const g3::Constraint c = cf.to_constraint();
  c.validate();
  const g3::MangoldtTable table = g3::cached_tables(
      static_cast<std::uint64_t>(std::max<std::int64_t>(c.n, 2)), cache_dir_of(g));
  g3::RepCounts rc = g3::count_direct(c, table);
  double j3 = rc.j3;
  if (engine != "direct") {
    const double jconv = g3::count_convolution(c, table);
    if (engine == "both" && !g3::near(jconv, rc.j3, 1e-9)) {
      std::cerr << "error: engine cross-check failed: direct=" << rc.j3
                << " conv=" << jconv << "\n";
      return 1;
    }
    if (engine == "conv") j3 = jconv;
  }
  const g3::SingularSeriesValue s3 = g3::singular_series(c);
  g3::DeviationRow row;
  row.c = c;
  row.counts = rc;
  row.j3 = j3;
  row.s3_lower = s3.lower;
  row.s3_upper = s3.upper;
  row.s3_mid = s3.midpoint();
  row.main = g3::main_term(c, row.s3_mid);
  row.abs_dev = std::abs(row.j3 - row.main);
  row.rel_dev = row.abs_dev / std::max(row.main, 1.0);

  g3::CommentHeader header;
  header.add("command", "count");
  header.add("format", g.format);
  cf.echo(header);
  header.add("engine", engine);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["row"] = g3::deviation_row_json(row);
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << g3::kCountCsvHeader << "\n";
    g3::write_deviation_row_csv(os, row);
  }
  return emit(g, os.str());
}

int cmd_series(const GlobalOpts& g, const ConstraintFlags& cf,
               std::uint64_t pmax, std::uint64_t sum_q) {
  const g3::Constraint c = cf.to_constraint();
  c.validate();
  const g3::SingularSeriesValue v = g3::singular_series(c, pmax);
  const g3::AdmissibilityVerdict verdict = g3::is_admissible(c);

  g3::CommentHeader header;
  header.add("command", "series");
  header.add("format", g.format);
  cf.echo(header);
  header.add("pmax", pmax);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["series"] = g3::singular_series_json(v);
    j["admissible"] = verdict.admissible;
    j["reason"] = verdict.describe();
    if (sum_q > 0) {
      const auto ps = g3::series_partial_sum(c, sum_q);
      j["partial_sum_q"] = sum_q;
      if (ps)
        j["partial_sum"] = *ps;
      else
        j["partial_sum"] = nullptr;  // refused: compatibility congruence fails
    }
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << "n,q1,a1,q2,a2,q3,a3,lower,upper,finite_part,pmax,zero_reason,admissible\n";
    os << c.n << ',' << c.q[0] << ',' << c.a[0] << ',' << c.q[1] << ','
       << c.a[1] << ',' << c.q[2] << ',' << c.a[2] << ','
       << g3::format_double(v.lower) << ',' << g3::format_double(v.upper)
       << ',' << g3::format_double(v.finite_part) << ',' << v.pmax << ','
       << (v.zero_reason ? g3::to_string(*v.zero_reason) : "") << ','
       << (verdict.admissible ? 1 : 0) << "\n";
  }
  return emit(g, os.str());
}

int cmd_admissible_check(const GlobalOpts& g, const ConstraintFlags& cf) {
  g3::Constraint c = cf.to_constraint();
  if (c.n < 1) throw g3::validation_error("admissible check: n must be positive");
  const g3::AdmissibilityVerdict verdict = g3::is_admissible(c);
  g3::CommentHeader header;
  header.add("command", "admissible check");
  header.add("format", g.format);
  cf.echo(header);
  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["admissible"] = verdict.admissible;
    j["reason"] = verdict.describe();
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << "admissible=" << (verdict.admissible ? 1 : 0) << "\n";
    os << "reason=" << verdict.describe() << "\n";
  }
  return emit(g, os.str());
}

int cmd_admissible_construct(const GlobalOpts& g, std::int64_t n,
                             std::uint64_t q3, std::uint64_t a3,
                             std::uint64_t q2, std::optional<std::uint64_t> a2_opt,
                             std::optional<std::uint64_t> q1_opt) {
  const std::uint64_t a2 =
      a2_opt ? *a2_opt : g3::construct_a2(n, q3, a3, q2);
  std::optional<std::uint64_t> a1;
  if (q1_opt) a1 = g3::construct_a1(n, q3, a3, q2, a2, *q1_opt);

  g3::CommentHeader header;
  header.add("command", "admissible construct");
  header.add("format", g.format);
  header.add("n", n);
  header.add("q3", q3);
  header.add("a3", a3);
  header.add("q2", q2);
  if (q1_opt) header.add("q1", *q1_opt);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["a2"] = a2;
    if (a1) j["a1"] = *a1;
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << "a2=" << a2 << "\n";
    if (a1) os << "a1=" << *a1 << "\n";
  }
  return emit(g, os.str());
}

int cmd_deviation(const GlobalOpts& g, std::int64_t n,
                  std::vector<std::uint64_t> q1s, std::vector<std::uint64_t> q2s,
                  std::vector<std::uint64_t> q3s, std::uint64_t pmax) {
  const g3::MangoldtTable table = g3::cached_tables(
      static_cast<std::uint64_t>(std::max<std::int64_t>(n, 2)), cache_dir_of(g));
  g3::DeviationScanConfig cfg;
  cfg.n = n;
  cfg.q1s = std::move(q1s);
  cfg.q2s = std::move(q2s);
  cfg.q3s = std::move(q3s);
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.pmax = pmax;
  const g3::DeviationScanResult result = g3::deviation_scan(cfg, table);

  g3::CommentHeader header;
  header.add("command", "deviation");
  header.add("format", g.format);
  header.add("n", n);
  const auto list_str = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  header.add("q1s", list_str(cfg.q1s));
  header.add("q2s", list_str(cfg.q2s));
  header.add("q3s", list_str(cfg.q3s));
  header.add("seed", cfg.seed);
  header.add("pmax", pmax);
  header.add("aggregate", result.aggregate);
  header.add("sampled_cells", result.sampled_cells);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["aggregate"] = result.aggregate;
    j["sampled_cells"] = result.sampled_cells;
    j["rows"] = ordered_json::array();
    for (const auto& row : result.rows) j["rows"].push_back(g3::deviation_row_json(row));
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << g3::kCountCsvHeader << "\n";
    for (const auto& row : result.rows) g3::write_deviation_row_csv(os, row);
  }
  return emit(g, os.str());
}

int cmd_arcs(const GlobalOpts& g, const ConstraintFlags& cf, double R,
             std::uint64_t N) {
  const g3::Constraint c = cf.to_constraint();
  c.validate();
  if (N == 0) N = 2 * static_cast<std::uint64_t>(c.n) + 1;
  const g3::MangoldtTable table = g3::cached_tables(
      static_cast<std::uint64_t>(std::max<std::int64_t>(c.n, 2)), cache_dir_of(g));
  const g3::ArcSplit split = g3::major_arc_integral(c, R, N, table);
  const double h_trunc = g3::truncated_H(c, R);
  const g3::SingularSeriesValue s3 = g3::singular_series(c);
  const double main = g3::main_term(c, s3.midpoint());

  g3::CommentHeader header;
  header.add("command", "arcs");
  header.add("format", g.format);
  cf.echo(header);
  header.add("R", R);
  header.add("N", N);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["n"] = c.n;
    j["R"] = R;
    j["N"] = N;
    j["j3"] = split.j3_total;
    j["j3_major"] = split.j3_major;
    j["j3_minor"] = split.j3_minor;
    j["H_truncated"] = h_trunc;
    j["main_term"] = main;
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << g3::kArcsCsvHeader << "\n";
    os << c.n << ',' << g3::format_double(R) << ',' << N << ','
       << g3::format_double(split.j3_total) << ','
       << g3::format_double(split.j3_major) << ','
       << g3::format_double(split.j3_minor) << ','
       << g3::format_double(h_trunc) << ',' << g3::format_double(main) << "\n";
  }
  return emit(g, os.str());
}

int cmd_sievecheck(const GlobalOpts& g, std::uint64_t n, std::uint64_t Q,
                   double H, const std::string& weights, bool grid) {
  std::ostringstream rows;
  g3::CommentHeader header;
  header.add("command", "sievecheck");
  header.add("format", g.format);
  header.add("weights", weights);
  header.add("seed", g.seed);
  ordered_json jrows = ordered_json::array();

  const auto run_one = [&](std::uint64_t nn, std::uint64_t QQ, double HH,
                           const g3::MangoldtTable& table) {
    g3::WeightSequence w;
    if (weights == "lambda") {
      w = g3::mangoldt_weights(nn, table);
    } else if (weights == "ones") {
      w.b.assign(nn, g3::cplx{1.0, 0.0});
    } else {  // random complex in the unit square, seeded
      g3::Rng rng(g3::hash_combine(g.seed, nn));
      w.b.resize(nn);
      for (auto& v : w.b)
        v = g3::cplx(rng.real01() * 2 - 1, rng.real01() * 2 - 1);
    }
    const g3::SieveLemmaReport rep = g3::sieve_lemma_ratio(QQ, HH, w);
    g3::write_sieve_row_csv(rows, nn, QQ, HH, rep, g.seed);
    ordered_json j;
    j["n"] = nn;
    j["Q"] = QQ;
    j["H"] = HH;
    j["lhs"] = rep.lhs;
    j["rhs1"] = rep.rhs_term1;
    j["rhs2"] = rep.rhs_term2;
    j["ratio"] = rep.ratio;
    j["seed"] = g.seed;
    jrows.push_back(j);
  };

  if (grid) {
    header.add("grid", std::string("n=100,1000,10000;Q=4,16,64;H=1,4,16"));
    const g3::MangoldtTable table = g3::cached_tables(10000, cache_dir_of(g));
    for (const std::uint64_t nn : {100ULL, 1000ULL, 10000ULL})
      for (const std::uint64_t QQ : {4ULL, 16ULL, 64ULL})
        for (const double HH : {1.0, 4.0, 16.0}) run_one(nn, QQ, HH, table);
  } else {
    header.add("n", n);
    header.add("Q", Q);
    header.add("H", H);
    const g3::MangoldtTable table = g3::cached_tables(n, cache_dir_of(g));
    run_one(n, Q, H, table);
  }

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["rows"] = jrows;
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    os << g3::kSieveCsvHeader << "\n" << rows.str();
  }
  return emit(g, os.str());
}

int cmd_discrepancy(const GlobalOpts& g, double x, std::uint64_t hmax,
                    double D) {
  const g3::MangoldtTable table = g3::cached_tables(
      static_cast<std::uint64_t>(std::ceil(std::max(x, 2.0))), cache_dir_of(g));
  const g3::BvSum bv = g3::bv_sum(x, hmax, table, D);

  g3::CommentHeader header;
  header.add("command", "discrepancy");
  header.add("format", g.format);
  header.add("x", x);
  header.add("hmax", hmax);
  header.add("D", D);
  header.add("bv_sum", bv.sum);
  header.add("bv_main", bv.bv_main);
  header.add("bv_secondary", bv.bv_secondary);

  std::ostringstream os;
  if (g.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(header);
    j["sum"] = bv.sum;
    j["bv_main"] = bv.bv_main;
    j["bv_secondary"] = bv.bv_secondary;
    j["rows"] = ordered_json::array();
    for (const auto& r : bv.rows) {
      ordered_json row;
      row["x"] = r.x;
      row["h"] = r.h;
      row["delta"] = r.value;
      row["argmax_y"] = r.argmax_y;
      row["argmax_l"] = r.argmax_l;
      j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    header.write(os);
    g3::write_discrepancy_csv(os, bv.rows);
  }
  return emit(g, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goldbach3: ternary Goldbach counts with primes in independent "
               "arithmetic progressions"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out", g.out_path, "output file (default: stdout)");
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache-dir", g.cache_dir,
                 "table cache directory (default: $GOLDBACH3_CACHE_DIR or ./.g3cache)");
  app.add_option("--seed", g.seed, "seed for sampled residue maxima");
  app.add_option("--threads", g.threads,
                 "worker pool size (default: machine parallelism)");

  // count
  auto* count = app.add_subcommand("count", "exact representation counts");
  count->fallthrough();
  ConstraintFlags count_cf;
  count_cf.add_flags(count);
  std::string engine = "direct";
  count->add_option("--engine", engine, "j3 engine: direct, conv or both")
      ->check(CLI::IsMember({"direct", "conv", "both"}));

  // series
  auto* series = app.add_subcommand("series", "singular series enclosure");
  series->fallthrough();
  ConstraintFlags series_cf;
  series_cf.add_flags(series);
  std::uint64_t pmax = g3::kDefaultPrimeBound;
  std::uint64_t sum_q = 0;
  series->add_option("--pmax", pmax, "Euler product truncation prime");
  series->add_option("--sum-q", sum_q, "also report the lambda partial sum up to Q");

  // admissible
  auto* adm = app.add_subcommand("admissible", "admissibility checks and construction");
  adm->fallthrough();
  adm->require_subcommand(1);
  auto* adm_check = adm->add_subcommand("check", "verdict for a full triple");
  adm_check->fallthrough();
  ConstraintFlags adm_cf;
  adm_cf.add_flags(adm_check);
  auto* adm_construct =
      adm->add_subcommand("construct", "build admissible residues");
  adm_construct->fallthrough();
  std::int64_t con_n = 0;
  std::uint64_t con_q3 = 1, con_a3 = 0, con_q2 = 1;
  std::uint64_t con_a2_val = 0, con_q1_val = 0;
  bool con_has_a2 = false, con_has_q1 = false;
  adm_construct->add_option("--n", con_n, "target n")->required();
  adm_construct->add_option("--q3", con_q3, "modulus q3");
  adm_construct->add_option("--a3", con_a3, "residue a3 mod q3");
  adm_construct->add_option("--q2", con_q2, "modulus q2");
  adm_construct->add_option("--a2", con_a2_val, "use this a2 instead of constructing it")
      ->each([&](const std::string&) { con_has_a2 = true; });
  adm_construct->add_option("--q1", con_q1_val, "also construct a1 for this q1")
      ->each([&](const std::string&) { con_has_q1 = true; });

  // deviation
  auto* dev = app.add_subcommand("deviation", "nested deviation scan");
  dev->fallthrough();
  std::int64_t dev_n = 0;
  std::uint64_t dev_qmax = 0, dev_q1max = 0, dev_q2max = 0, dev_q3max = 0;
  std::string dev_q1s, dev_q2s, dev_q3s;
  std::uint64_t dev_pmax = g3::kDefaultPrimeBound;
  dev->add_option("--n", dev_n, "target n")->required();
  dev->add_option("--qmax", dev_qmax, "scan q1,q2,q3 = 1..qmax");
  dev->add_option("--q1max", dev_q1max, "scan q1 = 1..q1max");
  dev->add_option("--q2max", dev_q2max, "scan q2 = 1..q2max");
  dev->add_option("--q3max", dev_q3max, "scan q3 = 1..q3max");
  dev->add_option("--q1s", dev_q1s, "explicit comma-separated q1 list");
  dev->add_option("--q2s", dev_q2s, "explicit comma-separated q2 list");
  dev->add_option("--q3s", dev_q3s, "explicit comma-separated q3 list");
  dev->add_option("--pmax", dev_pmax, "Euler product truncation prime");

  // arcs
  auto* arcs = app.add_subcommand("arcs", "major/minor arc decomposition");
  arcs->fallthrough();
  ConstraintFlags arcs_cf;
  arcs_cf.add_flags(arcs);
  double arcs_R = 2.0;
  std::uint64_t arcs_N = 0;
  arcs->add_option("--R", arcs_R, "arc parameter R >= 1")->required();
  arcs->add_option("--N", arcs_N, "grid size (default 2n+1)");

  // sievecheck
  auto* sieve = app.add_subcommand("sievecheck", "large-sieve ratio report");
  sieve->fallthrough();
  std::uint64_t sv_n = 100, sv_Q = 4;
  double sv_H = 1.0;
  std::string sv_weights = "lambda";
  bool sv_grid = false;
  sieve->add_option("--n", sv_n, "weight sequence length");
  sieve->add_option("--Q", sv_Q, "dyadic block Q (q in (Q, 2Q])");
  sieve->add_option("--H", sv_H, "divisor-count threshold H");
  sieve->add_option("--weights", sv_weights, "weights: lambda, ones or random")
      ->check(CLI::IsMember({"lambda", "ones", "random"}));
  sieve->add_flag("--grid", sv_grid, "emit the documented regression grid");

  // discrepancy
  auto* disc = app.add_subcommand("discrepancy", "Delta(x,h) table and BV sum");
  disc->fallthrough();
  double disc_x = 100.0, disc_D = 2.0;
  std::uint64_t disc_hmax = 10;
  disc->add_option("--x", disc_x, "upper limit x")->required();
  disc->add_option("--hmax", disc_hmax, "moduli h = 1..hmax");
  disc->add_option("--D", disc_D, "report-only exponent D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // series output is structured; default it to JSON unless asked otherwise
  if (app.got_subcommand(series) && app.get_option("--format")->count() == 0)
    g.format = "json";

  try {
    if (app.got_subcommand(count)) return cmd_count(g, count_cf, engine);
    if (app.got_subcommand(series)) return cmd_series(g, series_cf, pmax, sum_q);
    if (app.got_subcommand(adm)) {
      if (adm->got_subcommand(adm_check)) return cmd_admissible_check(g, adm_cf);
      return cmd_admissible_construct(
          g, con_n, con_q3, con_a3, con_q2,
          con_has_a2 ? std::optional<std::uint64_t>(con_a2_val) : std::nullopt,
          con_has_q1 ? std::optional<std::uint64_t>(con_q1_val) : std::nullopt);
    }
    if (app.got_subcommand(dev)) {
      const auto axis = [&](const std::string& list, std::uint64_t axis_max) {
        if (!list.empty()) return parse_list(list);
        if (axis_max > 0) return range_upto(axis_max);
        if (dev_qmax > 0) return range_upto(dev_qmax);
        return range_upto(1);
      };
      return cmd_deviation(g, dev_n, axis(dev_q1s, dev_q1max),
                           axis(dev_q2s, dev_q2max), axis(dev_q3s, dev_q3max),
                           dev_pmax);
    }
    if (app.got_subcommand(arcs)) return cmd_arcs(g, arcs_cf, arcs_R, arcs_N);
    if (app.got_subcommand(sieve))
      return cmd_sievecheck(g, sv_n, sv_Q, sv_H, sv_weights, sv_grid);
    if (app.got_subcommand(disc))
      return cmd_discrepancy(g, disc_x, disc_hmax, disc_D);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const g3::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const g3::out_of_range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const g3::impossible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const g3::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const g3::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
