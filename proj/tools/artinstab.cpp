// artinstab: positive-word arithmetic, canonical coset reductions, and
// brute-force verification of the filtered complexes built from a Coxeter
// diagram sequence, with exact integer homology as the cross-check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artinstab/classify.hpp"
#include "artinstab/complex.hpp"
#include "artinstab/diagram.hpp"
#include "artinstab/divisibility.hpp"
#include "artinstab/homology.hpp"
#include "artinstab/identities.hpp"
#include "artinstab/sequence.hpp"
#include "artinstab/shelling.hpp"

namespace {

using namespace artinstab;
using nlohmann::json;

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("ARTINSTAB_LOG");
  if (!env) return LogLevel::Error;
  std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) std::cerr << "[debug] " << msg << "\n";
}

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitScale = 3;

struct SeedOptions {
  std::string seed = "empty";
  int anchor = 0;  // 0: use the file's anchor line (or 1)
};

SequenceConfig load_sequence(const SeedOptions& opts, int n) {
  SequenceConfig cfg;
  if (opts.seed == "empty") {
    cfg.seed = CoxeterDiagram(1);
    cfg.anchor = 1;
  } else {
    std::ifstream in(opts.seed);
    if (!in) throw ParseError(ParseError::Kind::BadSyntax,
                              "cannot open seed file " + opts.seed);
    DiagramFile file = parse_diagram_file(in);
    cfg.seed = file.diagram;
    cfg.anchor = file.anchor;
  }
  if (opts.anchor > 0) cfg.anchor = opts.anchor;
  cfg.n = n;
  return cfg;
}

void write_json(const std::optional<std::string>& path, const json& doc) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw Error("cannot write " + *path);
  out << doc.dump(2) << "\n";
}

std::vector<Gen> chain_positions(const SequenceConfig& cfg) {
  std::vector<Gen> sigma{0};
  for (int i = 1; i <= std::max(cfg.n, 1); ++i)
    sigma.push_back(sigma_index(cfg.seed.generator_count(), i));
  sigma.resize(static_cast<std::size_t>(cfg.n) + 1);
  return sigma;
}

int run_verify(const SeedOptions& seed, int n_lo, int n_hi, int max_len, int jobs,
               std::size_t cell_cap, std::size_t class_cap,
               const std::optional<std::string>& json_path) {
  json doc{{"schema", 1}, {"command", "verify"}, {"seed", seed.seed},
           {"max_len", max_len}, {"runs", json::array()}};
  bool all_passed = true;

  for (int n = n_lo; n <= n_hi; ++n) {
    log_info("verifying n=" + std::to_string(n));
    SequenceConfig cfg = load_sequence(seed, n);
    FiltrationBuilder fb(cfg, class_cap, cell_cap);
    json run{{"n", n}};

    {
      auto report = fb.check_simplicial_identities(std::min(max_len, 3), jobs);
      run["simplicial_identities"] = {{"checked", report.checked},
                                      {"passed", report.passed()}};
      if (!report.passed()) {
        run["simplicial_identities"]["counterexample"] = *report.counterexample;
        all_passed = false;
      }
      log_debug("simplicial identities checked: " + std::to_string(report.checked));
    }

    if (n >= 2) {
      IdentityBounds bounds{std::min(max_len, 3), 2};
      auto report = verify_divisor_identities(fb.ambient(), chain_positions(cfg), bounds);
      json checks = json::array();
      for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed()}};
        if (!c.passed()) entry["counterexample"] = *c.counterexample;
        checks.push_back(entry);
      }
      run["divisor_identities"] = checks;
      if (!report.passed()) all_passed = false;
    }

    {
      json decomp = json::array();
      for (int p = 0; p < n; ++p) {
        auto report = verify_decomposition(fb.ambient(), fb.level_subset(p), max_len);
        json entry{{"p", p},
                   {"passed", report.passed},
                   {"monoid_counts", report.monoid_counts},
                   {"reduced_counts", report.reduced_counts},
                   {"submonoid_counts", report.submonoid_counts}};
        if (report.counterexample) entry["counterexample"] = *report.counterexample;
        decomp.push_back(entry);
        if (!report.passed) all_passed = false;
      }
      run["decomposition"] = decomp;
    }

    {
      auto report = shelling_report(fb, max_len, jobs);
      run["shelling"] = report.to_json();
      if (!report.passed()) all_passed = false;
    }

    {
      json conn = json::array();
      for (int k = 0; k <= max_len; ++k) {
        auto report = connectivity_check(fb.build(k, jobs), n);
        conn.push_back(report.to_json());
        if (!report.passed) all_passed = false;
      }
      run["connectivity"] = conn;
    }

    doc["runs"].push_back(run);
  }

  doc["passed"] = all_passed;
  write_json(json_path, doc);
  std::cout << (all_passed ? "verify: all checks passed" : "verify: FAILED") << "\n";
  if (!json_path) std::cout << doc.dump(2) << "\n";
  return all_passed ? kExitOk : kExitCounterexample;
}

int run_h1(const SeedOptions& seed, int n_lo, int n_hi,
           const std::optional<std::string>& json_path) {
  json doc{{"schema", 1}, {"command", "h1"}, {"seed", seed.seed},
           {"rows", json::array()}};
  std::vector<int> ranks;
  for (int n = n_lo; n <= n_hi; ++n) {
    auto diagram = level_diagram(load_sequence(seed, n));
    ranks.push_back(abelianization(diagram).rank);
  }
  // Stabilization point: the first n from which the rank never changes.
  int stable_from = n_hi;
  for (int i = static_cast<int>(ranks.size()) - 1; i >= 0; --i) {
    if (ranks[static_cast<std::size_t>(i)] != ranks.back()) break;
    stable_from = n_lo + i;
  }
  bool constant_from_two = true;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (n_lo + static_cast<int>(i) >= 2 && ranks[i] != ranks.back())
      constant_from_two = false;

  std::cout << "  n  rank H1\n";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    int n = n_lo + static_cast<int>(i);
    std::cout << (n == stable_from ? "* " : "  ") << n << "  " << ranks[i] << "\n";
    doc["rows"].push_back({{"n", n}, {"rank", ranks[i]}, {"torsion", json::array()}});
  }
  doc["stable_from"] = stable_from;
  doc["constant_from_two"] = constant_from_two;
  write_json(json_path, doc);
  if (!constant_from_two) {
    std::cout << "h1: rank not constant for n >= 2\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int run_enumerate(const SeedOptions& seed, int n, int max_len,
                  std::size_t class_cap, const std::optional<std::string>& json_path) {
  SequenceConfig cfg = load_sequence(seed, n);
  FiltrationBuilder fb(cfg, class_cap);
  const Monoid& m = fb.ambient();
  json doc{{"schema", 1}, {"command", "enumerate"}, {"n", n},
           {"max_len", max_len}};

  auto counts_of = [](const std::vector<std::vector<MonoidElement>>& t) {
    std::vector<long long> out;
    for (const auto& level : t) out.push_back(static_cast<long long>(level.size()));
    return out;
  };

  auto monoid_counts = counts_of(m.elements_by_length(max_len));
  doc["monoid_counts"] = monoid_counts;
  std::cout << "|A+_" << n << "| by length:";
  for (auto c : monoid_counts) std::cout << " " << c;
  std::cout << "\n";

  bool ok = true;
  json levels = json::array();
  for (int p = 0; p < n; ++p) {
    auto reduced = counts_of(reduced_elements_by_length(m, fb.level_subset(p), max_len));
    auto sub = counts_of(m.submonoid_elements_by_length(fb.level_subset(p), max_len));
    bool conv_ok = true;
    for (int len = 0; len <= max_len; ++len) {
      long long conv = 0;
      for (int j = 0; j <= len; ++j) conv += reduced[j] * sub[len - j];
      if (conv != monoid_counts[len]) conv_ok = false;
    }
    std::cout << "|A+(" << n << ";" << p << ")| by length:";
    for (auto c : reduced) std::cout << " " << c;
    std::cout << (conv_ok ? "  [convolution ok]" : "  [convolution FAILED]") << "\n";
    levels.push_back({{"p", p},
                      {"reduced_counts", reduced},
                      {"submonoid_counts", sub},
                      {"convolution_ok", conv_ok}});
    ok = ok && conv_ok;
  }
  doc["levels"] = levels;
  doc["passed"] = ok;
  write_json(json_path, doc);
  return ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin monoid word problem, coset reductions, and complex verification"};
  app.require_subcommand(1);

  SeedOptions seed;
  int n = -1;
  std::string n_range;
  int max_len = 3;
  int jobs = 1;
  std::size_t cell_cap = 200000;
  std::size_t class_cap = kDefaultClassCap;
  std::optional<std::string> json_path;

  auto add_common = [&](CLI::App* cmd, bool with_caps) {
    cmd->add_option("--seed", seed.seed, "seed diagram file, or 'empty'");
    cmd->add_option("--anchor", seed.anchor, "anchor generator id (overrides the file)");
    cmd->add_option("--json", json_path, "write the JSON report here");
    if (with_caps) {
      cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
      cmd->add_option("--cell-cap", cell_cap, "abort above this many cells");
      cmd->add_option("--class-cap", class_cap, "abort above this class size");
    }
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, true);
  verify->add_option("--n", n, "sequence level")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-range", n_range, "levels a..b");
  verify->add_option("--max-len", max_len, "filtration depth k and length bound")
      ->check(CLI::NonNegativeNumber);

  CLI::App* h1 = app.add_subcommand("h1", "first-homology rank table over levels");
  add_common(h1, false);
  h1->add_option("--n", n, "single level");
  h1->add_option("--n-range", n_range, "levels a..b");

  CLI::App* enumerate = app.add_subcommand("enumerate", "element and coset counts");
  add_common(enumerate, true);
  enumerate->add_option("--n", n, "sequence level")->check(CLI::PositiveNumber);
  enumerate->add_option("--max-len", max_len, "length bound")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto parse_range = [&](int default_lo) -> std::pair<int, int> {
    if (!n_range.empty()) {
      auto dots = n_range.find("..");
      if (dots == std::string::npos)
        throw ParseError(ParseError::Kind::BadSyntax, "--n-range wants a..b");
      int lo = std::stoi(n_range.substr(0, dots));
      int hi = std::stoi(n_range.substr(dots + 2));
      if (lo < 0 || hi < lo)
        throw ParseError(ParseError::Kind::BadSyntax, "bad --n-range bounds");
      return {lo, hi};
    }
    if (n >= 0) return {n, n};
    return {default_lo, default_lo};
  };

  try {
    if (verify->parsed()) {
      auto [lo, hi] = parse_range(2);
      if (lo < 1) throw ParseError(ParseError::Kind::BadSyntax, "verify wants n >= 1");
      return run_verify(seed, lo, hi, max_len, jobs, cell_cap, class_cap, json_path);
    }
    if (h1->parsed()) {
      auto [lo, hi] = parse_range(1);
      return run_h1(seed, lo, hi, json_path);
    }
    if (enumerate->parsed()) {
      auto [lo, hi] = parse_range(2);
      if (lo != hi || lo < 1)
        throw ParseError(ParseError::Kind::BadSyntax, "enumerate wants a single --n >= 1");
      return run_enumerate(seed, lo, max_len, class_cap, json_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassSizeExceeded& e) {
    std::cerr << "class cap exceeded: " << e.what() << "\n";
    return kExitScale;
  } catch (const ScaleExceeded& e) {
    std::cerr << "scale cap exceeded: " << e.what() << "\n";
    return kExitScale;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}
