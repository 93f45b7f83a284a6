#include "eulerstab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerstab/families.hpp"
#include "eulerstab/motzkin.hpp"
#include "eulerstab/multipoly.hpp"
#include "eulerstab/perms.hpp"
#include "eulerstab/report.hpp"
#include "eulerstab/stability.hpp"

namespace eulerstab {

namespace {

void write_output(const std::string& outPath, const std::string& content) {
  if (outPath.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(outPath, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + outPath);
  f << content;
}

std::string sanitize_for_filename(std::string s) {
  for (char& c : s) {
    if (c == '/') c = 'd';
    if (c == '-') c = 'm';
  }
  return s;
}

struct GenOptions {
  std::string family = "A";
  int n = 1;
  int r = 2;
  std::string q = "none";  // none | sym | multisym | rational literal
  std::string method = "rec";
  std::string format = "text";
  std::string out;
  std::string cacheDir;
  int jobs = 1;
};

FamilySpec spec_from_options(const GenOptions& g) {
  FamilySpec spec;
  spec.family = family_from_code(g.family);
  spec.n = g.n;
  spec.r = g.r;
  if (g.q == "none") {
    spec.qmode = QMode::None;
  } else if (g.q == "sym") {
    spec.qmode = QMode::SingleSymbolic;
  } else if (g.q == "multisym") {
    spec.qmode = QMode::MultiSymbolic;
  } else {
    spec.qmode = QMode::Value;
    spec.qvalue = rat_from_string(g.q);
  }
  return spec;
}

std::string cache_key(const FamilySpec& spec, const GenOptions& g) {
  std::ostringstream os;
  os << "gen_" << family_code(spec.family) << "_n" << spec.n;
  if (spec.family == Family::G) os << "_r" << spec.r;
  os << "_" << sanitize_for_filename(qmode_code(spec)) << "_" << g.method
     << "_v1." << (g.format == "json" ? "json" : "txt");
  return os.str();
}

std::string render_poly(const MPoly& p, const std::string& format) {
  if (format == "json") return p.to_json_string() + "\n";
  return p.to_text() + "\n";
}

int run_gen(const GenOptions& g) {
  FamilySpec spec = spec_from_options(g);

  std::string cacheDir = g.cacheDir;
  if (cacheDir.empty()) {
    if (const char* env = std::getenv("EULERSTAB_CACHE_DIR")) cacheDir = env;
  }
  std::filesystem::path cachePath;
  if (!cacheDir.empty()) {
    cachePath = std::filesystem::path(cacheDir) / cache_key(spec, g);
    if (std::filesystem::exists(cachePath)) {
      std::ifstream f(cachePath, std::ios::binary);
      std::stringstream buf;
      buf << f.rdbuf();
      write_output(g.out, buf.str());
      return 0;
    }
  }

  MPoly result;
  if (g.method == "rec") {
    result = build_recurrence(spec);
  } else if (g.method == "brute") {
    result = brute_force(spec, g.jobs);
  } else if (g.method == "both") {
    MPoly rec = build_recurrence(spec);
    MPoly brute = brute_force(spec, g.jobs);
    if (rec != brute) {
      std::cerr << "gen: recurrence and enumeration disagree for "
                << family_code(spec.family) << " n=" << spec.n << "\n";
      return 1;
    }
    result = rec;
  } else {
    throw CLI::ValidationError("--method must be rec, brute or both");
  }

  std::string rendered = render_poly(result, g.format);
  if (!cachePath.empty()) {
    std::filesystem::create_directories(cachePath.parent_path());
    std::ofstream f(cachePath, std::ios::binary);
    f << rendered;
  }
  write_output(g.out, rendered);
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int maxN = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  int jobs = 1;
  std::string format = "text";
  std::string out;
};

std::vector<CheckResult> run_suites(const VerifyOptions& v) {
  std::vector<CheckResult> all;
  auto append = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) all.push_back(std::move(r));
  };

  bool everything = v.suite == "all";
  if (everything || v.suite == "oracles") {
    OracleBounds b;
    b.jobs = v.jobs;
    b.maxNCap = v.maxN;
    append(oracle_suite(b));
  }
  if (everything || v.suite == "identities") {
    IdentityBounds b;
    b.seed = v.seed;
    b.maxNCap = v.maxN;
    append(identity_suite(b));
  }
  if (everything || v.suite == "realroots") {
    RealRootBounds b;
    b.maxNCap = v.maxN;
    append(realrooted_suite(b));
  }
  if (everything || v.suite == "stability") {
    StabilityBounds b;
    b.budget = v.budget;
    b.seed = v.seed;
    b.maxNCap = v.maxN;
    append(stability_suite(b));
  }
  if (everything || v.suite == "motzkin") {
    MotzkinBounds b;
    b.maxNCap = v.maxN;
    append(motzkin_suite(b));
  }
  if (everything || v.suite == "conjectures") {
    int posMax = v.maxN > 0 ? std::min(11, v.maxN) : 11;
    append(positivity_suite(posMax, false));
    int probeMax = v.maxN > 0 ? std::min(4, v.maxN) : 4;
    append(affine_b_probe_suite(probeMax, v.budget, v.seed));
  }
  return all;
}

int run_verify(const VerifyOptions& v) {
  std::vector<CheckResult> results = run_suites(v);
  std::ostringstream os;
  if (v.format == "json") {
    os << results_to_json(results) << "\n";
  } else {
    for (const CheckResult& r : results) os << result_line(r) << "\n";
    int asserted = 0, failed = 0;
    for (const CheckResult& r : results) {
      if (r.severity != "asserted") continue;
      ++asserted;
      if (!r.ok) ++failed;
    }
    if (failed == 0)
      os << "OK: " << asserted << " asserted checks passed ("
         << results.size() << " total)\n";
    else
      os << "FAIL: " << failed << " of " << asserted
         << " asserted checks failed\n";
  }
  write_output(v.out, os.str());
  return all_asserted_ok(results) ? 0 : 1;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string term_text(const Monomial& m) {
  return MPoly::term(m, BigRat(1)).to_text();
}

std::string export_table1() {
  std::ostringstream os;
  os << "sigma,b_monomial,dstar_monomial\n";
  for (const ColoredPerm& cp : enumerate_d(3)) {
    StatRecord b = stats_colored(cp);
    std::vector<Monomial::Factor> bf;
    for (int v : b.dt) bf.push_back({xvar(static_cast<std::uint32_t>(v)), 1});
    for (int v : b.at) bf.push_back({yvar(static_cast<std::uint32_t>(v)), 1});
    DStarRecord d = stats_dstar(cp);
    std::vector<Monomial::Factor> df;
    for (const auto& [v, e] : d.dt)
      df.push_back({xvar(static_cast<std::uint32_t>(v)),
                    static_cast<std::uint32_t>(e)});
    for (const auto& [v, e] : d.at)
      df.push_back({yvar(static_cast<std::uint32_t>(v)),
                    static_cast<std::uint32_t>(e)});
    os << csv_quote(to_window_string(cp)) << ","
       << term_text(Monomial::make(std::move(bf))) << ","
       << term_text(Monomial::make(std::move(df))) << "\n";
  }
  return os.str();
}

std::string export_d3star() {
  MPoly p = brute_force({Family::DStar, 3});
  DStar3Witness w = dstar3_halfplane_witness();
  nlohmann::ordered_json j;
  j["family"] = "Dstar";
  j["n"] = 3;
  j["polynomial"] = nlohmann::ordered_json::parse(p.to_json_string());
  j["halfPlaneZero"] = nlohmann::ordered_json::parse(w.witness.to_json_string());
  j["exactZero"] = w.exactZero;
  return j.dump(2) + "\n";
}

std::string export_appendix() {
  std::ostringstream os;
  for (const ReferencePoly& ref : appendix_reference()) {
    MPoly p;
    try {
      p = build_recurrence(ref.spec);
    } catch (const std::invalid_argument&) {
      p = brute_force(ref.spec);
    }
    os << ref.name << " = " << p.to_text() << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Exact multivariate Eulerian polynomials: construction and "
               "verification"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* genCmd =
      app.add_subcommand("gen", "Construct one polynomial and print it");
  genCmd->add_option("--family", gen.family,
                     "A, B, D, G, affA, affC, affB, Dstar or Dstem")
      ->required();
  genCmd->add_option("--n", gen.n, "Rank")->required();
  genCmd->add_option("--r", gen.r, "Colors for family G (default 2)");
  genCmd->add_option("--q", gen.q,
                     "none, sym, multisym or a rational value like 1/2");
  genCmd->add_option("--method", gen.method, "rec, brute or both")
      ->check(CLI::IsMember({"rec", "brute", "both"}));
  genCmd->add_option("--format", gen.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  genCmd->add_option("--out", gen.out, "Output file (default stdout)");
  genCmd->add_option("--cache-dir", gen.cacheDir,
                     "Cache directory (or EULERSTAB_CACHE_DIR)");
  genCmd->add_option("--jobs", gen.jobs, "Worker threads for enumeration");

  VerifyOptions verify;
  CLI::App* verifyCmd =
      app.add_subcommand("verify", "Run verification suites");
  verifyCmd
      ->add_option("suite", verify.suite,
                   "oracles, identities, realroots, stability, motzkin, "
                   "conjectures or all")
      ->check(CLI::IsMember({"oracles", "identities", "realroots", "stability",
                             "motzkin", "conjectures", "all"}));
  verifyCmd->add_option("--max-n", verify.maxN,
                        "Cap every per-family rank bound (0 = defaults)");
  verifyCmd->add_option("--seed", verify.seed, "Seed for randomized checks");
  verifyCmd->add_option("--budget", verify.budget,
                        "Evaluation budget for falsification probes");
  verifyCmd->add_option("--jobs", verify.jobs, "Worker threads for enumeration");
  verifyCmd->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verifyCmd->add_option("--out", verify.out, "Output file (default stdout)");

  std::string exportWhat;
  std::string exportOut;
  CLI::App* exportCmd =
      app.add_subcommand("export", "Reproduce reference data");
  exportCmd->add_option("--what", exportWhat, "table1, d3star or appendix")
      ->required()
      ->check(CLI::IsMember({"table1", "d3star", "appendix"}));
  exportCmd->add_option("--out", exportOut, "Output file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (genCmd->parsed()) return run_gen(gen);
    if (verifyCmd->parsed()) return run_verify(verify);
    if (exportCmd->parsed()) {
      std::string content;
      if (exportWhat == "table1")
        content = export_table1();
      else if (exportWhat == "d3star")
        content = export_d3star();
      else
        content = export_appendix();
      write_output(exportOut, content);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace eulerstab
