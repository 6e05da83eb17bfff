// zeta: subalgebra / ideal / graded-ideal zeta polynomials of Lie rings
// over F_p. Subcommands: compute, verify, scan, catalog.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 node budget exhausted.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fpzeta/class2.hpp"
#include "fpzeta/closed_forms.hpp"
#include "fpzeta/enumerate.hpp"
#include "fpzeta/interpolate.hpp"
#include "fpzeta/jsonio.hpp"
#include "fpzeta/liealg.hpp"
#include "fpzeta/suites.hpp"

namespace {

using namespace fpzeta;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, long long> parse_params(
    const std::vector<std::string>& kvs) {
  std::map<std::string, long long> params;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw UsageError("--param expects key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq);
    try {
      params[key] = std::stoll(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--param " + key + " expects an integer value");
    }
  }
  return params;
}

bool is_catalog_name(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

LieRing resolve_ring(const std::string& spec,
                     const std::map<std::string, long long>& params) {
  if (is_catalog_name(spec)) return catalog(spec, params);
  std::filesystem::path path(spec);
  if (!std::filesystem::exists(path))
    throw UsageError("'" + spec + "' is neither a catalog ring nor a file");
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return LieRing::parse(text.str(), path.stem().string());
}

std::uint32_t parse_prime(const std::string& tok) {
  std::uint64_t v = 0;
  try {
    v = std::stoull(tok);
  } catch (const std::exception&) {
    throw UsageError("'" + tok + "' is not a number");
  }
  if (!is_prime(v)) throw UsageError(tok + " is not prime");
  if (v > (1ull << 31)) throw UsageError("primes above 2^31 unsupported");
  return static_cast<std::uint32_t>(v);
}

// "a:b" = all primes in [a,b]; otherwise a comma-separated list.
std::vector<std::uint32_t> parse_primes(const std::string& spec) {
  std::vector<std::uint32_t> out;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    std::uint64_t lo = 0, hi = 0;
    try {
      lo = std::stoull(spec.substr(0, colon));
      hi = std::stoull(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("prime range must be a:b");
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (is_prime(v)) out.push_back(static_cast<std::uint32_t>(v));
  } else {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_prime(tok));
  }
  if (out.empty()) throw UsageError("no primes in '" + spec + "'");
  return out;
}

void check_ring(const LieRing& ring, std::uint32_t p) {
  auto report = validate(ring, p);
  if (!report.ok) throw UsageError("invalid ring: " + report.message);
}

int resolve_scan_threads(int nprimes) {
  int cap = 0;
  if (const char* env = std::getenv("ZETA_THREADS")) cap = std::atoi(env);
  if (cap < 1) {
    unsigned hw = std::thread::hardware_concurrency();
    cap = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return std::min(cap, nprimes);
}

int cmd_compute(const std::string& ring_spec,
                const std::vector<std::string>& param_kvs,
                const std::string& prime_tok, const std::string& flavor_name_,
                const std::string& method_name_, const std::string& format,
                std::uint64_t budget, bool no_prune) {
  auto params = parse_params(param_kvs);
  LieRing ring = resolve_ring(ring_spec, params);
  std::uint32_t p = parse_prime(prime_tok);
  check_ring(ring, p);
  Flavor flavor = flavor_from_name(flavor_name_);
  Method method = method_from_name(method_name_);

  EnumOptions opts;
  opts.node_budget = budget;
  opts.prune = !no_prune;

  EnumStats stats;
  auto t0 = std::chrono::steady_clock::now();
  ZetaPoly z = count_zeta(ring, p, flavor, method, opts, &stats);
  auto t1 = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.ring = ring.name();
  rec.params = params;
  rec.p = p;
  rec.flavor = flavor;
  rec.method = stats.method;
  rec.coefficients = z.coefficients;
  rec.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rec.nodes = stats.nodes;

  if (format == "json")
    std::cout << to_json(rec) << "\n";
  else
    std::cout << to_text(z) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite_name, const std::string& primes_spec,
               const std::string& golden_dir, bool write_golden) {
  const Suite* suite = find_suite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
  std::vector<std::uint32_t> primes;
  if (!primes_spec.empty()) primes = parse_primes(primes_spec);

  VerifyOutcome outcome = run_suite(*suite, primes);
  for (const auto& line : outcome.lines) std::cout << line << "\n";
  std::cout << outcome.checked << " checks, " << outcome.mismatched
            << " mismatches\n";

  std::filesystem::path golden =
      std::filesystem::path(golden_dir) / (suite->name + ".json");
  std::string payload = records_to_json(outcome.records);
  if (write_golden) {
    std::filesystem::create_directories(golden.parent_path());
    std::ofstream out(golden, std::ios::binary);
    out << payload;
    std::cout << "golden written: " << golden.string() << "\n";
  } else if (std::filesystem::exists(golden)) {
    std::ifstream in(golden, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    if (text.str() != payload) {
      std::cout << "MISMATCH against golden file " << golden.string() << "\n";
      outcome.ok = false;
    } else {
      std::cout << "golden match: " << golden.string() << "\n";
    }
  }
  return outcome.ok ? 0 : kExitMismatch;
}

int cmd_scan(const std::string& ring_spec,
             const std::vector<std::string>& param_kvs,
             const std::string& flavor_name_, const std::string& primes_spec,
             int degree, int modulus) {
  auto params = parse_params(param_kvs);
  LieRing ring = resolve_ring(ring_spec, params);
  Flavor flavor = flavor_from_name(flavor_name_);
  auto primes = parse_primes(primes_spec);
  for (std::uint32_t p : primes) check_ring(ring, p);

  // one poly per prime; outer pool across primes, inner enumeration single
  // threaded while the pool is active
  std::vector<ZetaPoly> polys(primes.size());
  int pool = resolve_scan_threads(static_cast<int>(primes.size()));
  EnumOptions opts;
  opts.threads = pool > 1 ? 1 : 0;
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      polys[i] = count_zeta(ring, primes[i], flavor, Method::Auto, opts);
    }
  };
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < pool; ++t) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }

  ScanReport report;
  report.ring = ring.name();
  report.params = params;
  report.flavor = flavor;
  report.primes = primes;
  report.degree_bound = degree;
  if (modulus > 0) report.modulus = static_cast<unsigned>(modulus);

  const std::size_t ncoeff = polys.front().coefficients.size();
  for (std::size_t k = 0; k < ncoeff; ++k) {
    std::vector<std::pair<std::uint32_t, BigInt>> samples;
    for (std::size_t i = 0; i < primes.size(); ++i)
      samples.emplace_back(primes[i], polys[i].coefficients[k]);
    try {
      report.fits.push_back(fit_coefficient(samples, degree, report.modulus));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::cout << to_json(report);
  return 0;
}

int cmd_catalog(const std::string& format) {
  if (format == "json") {
    std::cout << "[";
    bool first = true;
    for (const auto& e : catalog_entries()) {
      if (!first) std::cout << ",\n ";
      first = false;
      std::cout << "{\"name\":\"" << e.name << "\",\"params\":\"" << e.params
                << "\",\"dim\":\"" << e.dim << "\",\"graded\":"
                << (e.graded ? "true" : "false") << ",\"summary\":\""
                << e.summary << "\"}";
    }
    std::cout << "]\n";
  } else {
    for (const auto& e : catalog_entries()) {
      std::cout << e.name;
      if (!e.params.empty()) std::cout << " (" << e.params << ")";
      std::cout << "  dim " << e.dim << (e.graded ? "  graded" : "") << "\n    "
                << e.summary << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeta polynomials of Lie rings over F_p"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "count one (ring, p, flavor)");
  std::string ring_spec, prime_tok, flavor = "ideal", method = "auto",
              format = "json";
  std::vector<std::string> param_kvs;
  std::uint64_t budget = 0;
  bool no_prune = false;
  compute->add_option("--ring", ring_spec, "catalog name or ring-file path")
      ->required();
  compute->add_option("--param", param_kvs, "ring parameter key=value");
  compute->add_option("--prime", prime_tok, "the prime p")->required();
  compute->add_option("--flavor", flavor, "sub|ideal|graded-ideal");
  compute->add_option("--method", method, "auto|brute|class2");
  compute->add_option("--format", format, "json|text");
  compute->add_option("--budget", budget, "node budget (0 = unlimited)");
  compute->add_flag("--no-prune", no_prune, "disable search pruning");

  // verify
  auto* verify = app.add_subcommand("verify", "oracle-equivalence suites");
  std::string suite = "all", verify_primes, golden_dir = "golden";
  bool write_golden = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--primes", verify_primes, "override prime list");
  verify->add_option("--golden-dir", golden_dir, "golden file directory");
  verify->add_flag("--write-golden", write_golden,
                   "regenerate the golden file instead of comparing");

  // scan
  auto* scan = app.add_subcommand("scan", "uniformity report across primes");
  std::string scan_ring, scan_flavor = "ideal", scan_primes;
  std::vector<std::string> scan_params;
  int degree = 3, modulus = 0;
  scan->add_option("--ring", scan_ring, "catalog name or ring-file path")
      ->required();
  scan->add_option("--param", scan_params, "ring parameter key=value");
  scan->add_option("--flavor", scan_flavor, "sub|ideal|graded-ideal");
  scan->add_option("--primes", scan_primes, "a:b range or comma list")
      ->required();
  scan->add_option("--degree", degree, "degree bound for the fits");
  scan->add_option("--modulus", modulus, "fit per residue class mod N");

  // catalog
  auto* cat = app.add_subcommand("catalog", "list the built-in rings");
  std::string cat_format = "text";
  cat->add_option("--format", cat_format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(ring_spec, param_kvs, prime_tok, flavor, method,
                         format, budget, no_prune);
    if (verify->parsed())
      return cmd_verify(suite, verify_primes, golden_dir, write_golden);
    if (scan->parsed())
      return cmd_scan(scan_ring, scan_params, scan_flavor, scan_primes, degree,
                      modulus);
    if (cat->parsed()) return cmd_catalog(cat_format);
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
