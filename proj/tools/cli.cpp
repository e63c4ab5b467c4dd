#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "spexkm/errors.hpp"
#include "spexkm/extremal.hpp"
#include "spexkm/format.hpp"
#include "spexkm/graph6.hpp"
#include "spexkm/oracle.hpp"
#include "spexkm/spectral.hpp"
#include "spexkm/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spexkm::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> n, k, s;
  std::string format = "json";
  std::string out_path;
  int threads = 0;

  // compute
  bool spex_main = false, spex_turan = false, spex_matching = false, ex = false, ex_eg = false;
  // spectral
  std::string in_path;
  double tol = kDenseTolerance;
  // search
  std::string objective = "edges";
  bool force = false;
  int split_depth = 12;
  // threshold
  int k_min = 2, k_max = 5, s_min = 1, s_max = 6;
  std::optional<int> n_max;
  // verify
  std::vector<std::string> suites;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

json parts_json(const PartSizes& parts) { return json(std::vector<int>(parts.begin(), parts.end())); }

// ------------------------------------------------------------------ compute

struct ComputeRow {
  std::string quantity;
  ExtremalValue value;
};

void emit_compute(const RunConfig& cfg, const ComputeRow& row, std::ostream& out) {
  const ExtremalValue& v = row.value;
  std::string witness_text;
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) witness_text += (i ? " | " : "") + v.witnesses[i].family;
  const std::string value_text =
      v.integral ? std::to_string(static_cast<long long>(v.value)) : format_significant(v.value);

  if (cfg.format == "json") {
    json doc;
    doc["quantity"] = row.quantity;
    if (cfg.n) doc["n"] = *cfg.n;
    if (cfg.k) doc["k"] = *cfg.k;
    if (cfg.s) doc["s"] = *cfg.s;
    if (v.integral)
      doc["value"] = static_cast<long long>(v.value);
    else
      doc["value"] = round_significant(v.value);
    doc["regime"] = v.regime;
    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
      json wj;
      wj["family"] = w.family;
      if (w.parts) wj["parts"] = parts_json(*w.parts);
      wj["isolated"] = w.isolated;
      witnesses.push_back(wj);
    }
    doc["witnesses"] = witnesses;
    if (v.competitor) doc["competitor"] = round_significant(*v.competitor);
    out << doc.dump() << '\n';
  } else if (cfg.format == "csv") {
    auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); };
    out << row.quantity << ',' << opt(cfg.n) << ',' << opt(cfg.k) << ',' << opt(cfg.s) << ',' << value_text << ','
        << v.regime << ',' << witness_text << ',' << (v.competitor ? format_significant(*v.competitor) : "") << '\n';
  } else {
    out << row.quantity << ": " << value_text << " [" << v.regime << "] " << witness_text;
    if (v.competitor) out << " (competitor " << format_significant(*v.competitor) << ")";
    out << '\n';
  }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  std::vector<ComputeRow> rows;
  if (cfg.spex_main) rows.push_back({"spex_main", spex_main(need(cfg.n, "-n"), need(cfg.k, "-k"), need(cfg.s, "-s"))});
  if (cfg.spex_turan) {
    ExtremalValue v;
    v.value = spex_turan(need(cfg.n, "-n"), need(cfg.k, "-k"));
    v.regime = "theorem";
    v.witnesses.push_back({"T_" + std::to_string(*cfg.k) + "(" + std::to_string(*cfg.n) + ")",
                           turan_parts(*cfg.n, *cfg.k), 0});
    rows.push_back({"spex_turan", v});
  }
  if (cfg.spex_matching) rows.push_back({"spex_matching", spex_matching(need(cfg.n, "-n"), need(cfg.s, "-s"))});
  if (cfg.ex) rows.push_back({"ex", ex_alon_frankl(need(cfg.n, "-n"), need(cfg.k, "-k"), need(cfg.s, "-s"))});
  if (cfg.ex_eg) rows.push_back({"ex_matching", ex_erdos_gallai(need(cfg.n, "-n"), need(cfg.s, "-s"))});
  if (rows.empty())
    throw UsageError("compute: choose at least one of --spex-main, --spex-turan, --spex-matching, --ex, --ex-eg");
  if (cfg.format == "csv") out << "quantity,n,k,s,value,regime,witness,competitor\n";
  for (const auto& row : rows) emit_compute(cfg, row, out);
  return kOk;
}

// ----------------------------------------------------------------- spectral

int cmd_spectral(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  std::unique_ptr<std::ifstream> file;
  std::istream* source = &in;
  if (!cfg.in_path.empty() && cfg.in_path != "-") {
    file = std::make_unique<std::ifstream>(cfg.in_path);
    if (!*file) throw UsageError("cannot open " + cfg.in_path);
    source = file.get();
  }
  if (cfg.format == "csv") out << "line,graph6,n,lambda,residual,iterations\n";
  std::string line;
  long line_no = 0;
  while (std::getline(*source, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const ParseError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    SpectralResult r;
    if (g.order() > 0) r = spectral_radius_dense(g, cfg.tol);
    if (cfg.format == "json") {
      json doc{{"line", line_no},
               {"graph6", line},
               {"n", g.order()},
               {"lambda", round_significant(r.lambda)},
               {"residual", round_significant(r.residual, 3)},
               {"iterations", r.iterations}};
      out << doc.dump() << '\n';
    } else if (cfg.format == "csv") {
      out << line_no << ',' << line << ',' << g.order() << ',' << format_significant(r.lambda) << ','
          << format_significant(r.residual, 3) << ',' << r.iterations << '\n';
    } else {
      out << line << ": " << format_significant(r.lambda) << '\n';
    }
  }
  return kOk;
}

// ------------------------------------------------------------------- search

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Objective objective;
  if (cfg.objective == "edges")
    objective = Objective::Edges;
  else if (cfg.objective == "spectral")
    objective = Objective::Spectral;
  else
    throw UsageError("--objective must be edges or spectral");
  SearchOptions options;
  options.threads = cfg.threads;
  options.allow_large = cfg.force;
  options.split_depth = cfg.split_depth;
  const int n = need(cfg.n, "-n");
  const int s = need(cfg.s, "-s");
  SearchReport report;
  try {
    report = cfg.k ? enumerate_extremal(n, *cfg.k, s, objective, options)
                   : enumerate_matching_extremal(n, s, objective, options);
  } catch (const CapacityError& e) {
    throw UsageError(std::string(e.what()) + " (use --force to raise the default cap)");
  }
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  if (cfg.format == "json") {
    out << search_report_json(report) << '\n';
  } else {
    const std::string best = objective == Objective::Edges ? std::to_string(static_cast<long long>(report.best_value))
                                                           : format_significant(report.best_value);
    if (cfg.format == "csv") {
      out << "n,k,s,objective,best_value,witnesses,examined,first_witness\n"
          << n << ',' << (cfg.k ? std::to_string(*cfg.k) : "") << ',' << s << ',' << objective_name(objective) << ','
          << best << ',' << report.witnesses.size() << ',' << report.examined << ','
          << (report.witnesses.empty() ? "" : report.witnesses.front()) << '\n';
    } else {
      out << "best " << best << " over " << report.examined << " nodes; witnesses:";
      for (const auto& w : report.witnesses) out << ' ' << w;
      out << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- threshold

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  const int k_lo = cfg.k ? *cfg.k : cfg.k_min;
  const int k_hi = cfg.k ? *cfg.k : cfg.k_max;
  const int s_lo = cfg.s ? *cfg.s : cfg.s_min;
  const int s_hi = cfg.s ? *cfg.s : cfg.s_max;
  if (k_lo < 2 || s_lo < 1 || k_lo > k_hi || s_lo > s_hi) throw UsageError("threshold: need 2 <= k, 1 <= s, ranges nonempty");
  if (cfg.format == "csv") out << "k,s,threshold,bound,lambda_gkns,lambda_turan\n";
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int s = s_lo; s <= s_hi; ++s) {
      const long long bound = spex_main_bound(s);
      const int n_max = cfg.n_max ? *cfg.n_max : static_cast<int>(std::max<long long>(bound, 2 * s + 1));
      const auto n_star = crossover_threshold(k, s, n_max);
      const double turan = spex_turan(2 * s + 1, k);
      std::optional<double> gkns;
      if (n_star) gkns = multipartite_lambda(gkns_parts(*n_star, k, s));
      if (cfg.format == "json") {
        json doc{{"k", k}, {"s", s}, {"bound", bound}, {"lambda_turan", round_significant(turan)}};
        doc["threshold"] = n_star ? json(*n_star) : json("not-found");
        doc["lambda_gkns"] = gkns ? json(round_significant(*gkns)) : json(nullptr);
        out << doc.dump() << '\n';
      } else if (cfg.format == "csv") {
        out << k << ',' << s << ',' << (n_star ? std::to_string(*n_star) : "not-found") << ',' << bound << ','
            << (gkns ? format_significant(*gkns) : "") << ',' << format_significant(turan) << '\n';
      } else {
        out << "k=" << k << " s=" << s << ": n* = " << (n_star ? std::to_string(*n_star) : "not found")
            << " (bound " << bound << ")\n";
      }
    }
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  SearchOptions options;
  options.threads = cfg.threads;
  bool all_passed = true;
  for (const auto& name : suites) {
    SuiteResult r;
    try {
      r = run_suite(name, options);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    all_passed = all_passed && r.passed;
    if (cfg.format == "json") {
      json doc{{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"notes", r.notes}};
      if (!r.passed) doc["counterexample"] = r.counterexample;
      out << doc.dump() << '\n';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
      if (!r.passed) out << "  counterexample: " << r.counterexample << '\n';
      for (const auto& note : r.notes) out << "  note: " << note << '\n';
    }
  }
  return all_passed ? kOk : kVerifyFailed;
}

const char* kFooter =
    "Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical failure.\n"
    "Default tolerances: 1e-10 dense power iteration (--tol), 1e-12 scalar roots and quotient\n"
    "Perron roots, 1e-8 between two independent routes. Values print with 10 significant digits.";

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectral and edge extremal numbers for {K_{k+1}, M_{s+1}}-free graphs", "spexkm"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", cfg.out_path, "Write results to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads for searches (0: all cores)")->check(CLI::NonNegativeNumber);

  auto add_nks = [&](CLI::App* sub) {
    sub->add_option("-n", cfg.n, "Number of vertices")->check(CLI::NonNegativeNumber);
    sub->add_option("-k", cfg.k, "Forbidden clique K_{k+1}")->check(CLI::PositiveNumber);
    sub->add_option("-s", cfg.s, "Forbidden matching M_{s+1}")->check(CLI::NonNegativeNumber);
  };

  auto* compute = app.add_subcommand("compute", "Closed-form extremal values");
  add_nks(compute);
  compute->add_flag("--spex-main", cfg.spex_main, "λ(G_k(n,s)) with regime flag");
  compute->add_flag("--spex-turan", cfg.spex_turan, "λ(T_k(n))");
  compute->add_flag("--spex-matching", cfg.spex_matching, "spectral extremum for M_{s+1}-free graphs");
  compute->add_flag("--ex", cfg.ex, "max{|T_k(2s+1)|, |G_k(n,s)|}");
  compute->add_flag("--ex-eg", cfg.ex_eg, "edge extremum for M_{s+1}-free graphs");

  auto* spectral = app.add_subcommand("spectral", "Spectral radius of graph6 lines");
  spectral->add_option("--in", cfg.in_path, "graph6 file, one graph per line (default stdin)");
  spectral->add_option("--tol", cfg.tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Exhaustive extremal search over labeled graphs");
  add_nks(search);
  search->add_option("--objective", cfg.objective, "edges or spectral")->check(CLI::IsMember({"edges", "spectral"}));
  search->add_flag("--force", cfg.force, "Allow n above the default cap (hard cap 10)");
  search->add_option("--split-depth", cfg.split_depth, "Edge decisions fixed before parallel subtrees")
      ->check(CLI::Range(0, 45));

  auto* threshold = app.add_subcommand("threshold", "Crossover n* of λ(G_k(n,s)) against λ(T_k(2s+1))");
  threshold->add_option("-k", cfg.k, "Single k (overrides --k-min/--k-max)");
  threshold->add_option("-s", cfg.s, "Single s (overrides --s-min/--s-max)");
  threshold->add_option("--k-min", cfg.k_min);
  threshold->add_option("--k-max", cfg.k_max);
  threshold->add_option("--s-min", cfg.s_min);
  threshold->add_option("--s-max", cfg.s_max);
  threshold->add_option("--n-max", cfg.n_max, "Search limit (default max(4s^2+9s, 2s+1))");

  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", cfg.suites, "lemma22, lemma23, lemma24, prop25, claimA, tutteberge, theorem11, fyz, all");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "usage error: cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, *sink);
    if (spectral->parsed()) return cmd_spectral(cfg, in, *sink);
    if (search->parsed()) return cmd_search(cfg, *sink, err);
    if (threshold->parsed()) return cmd_threshold(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace spexkm::cli
