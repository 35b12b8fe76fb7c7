#include "exceptio/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "exceptio/error.hpp"
#include "exceptio/primes.hpp"
#include "exceptio/report.hpp"

#ifndef EXCEPTIO_VERSION
#define EXCEPTIO_VERSION "0.0.0"
#endif

namespace exceptio {

namespace {

using nlohmann::json;

struct Flags {
  std::string poly;
  u64 limit = 100'000;
  u64 p = 0;
  std::vector<u64> primes;
  std::vector<std::string> radicands;
  int n = 0;
  std::size_t budget = 0;
  std::vector<u64> bad;
  u64 bound = 0;
  std::string group_file;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
  bool pretty = false;
  bool all_n = false;
  bool symmetry = false;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("EXCEPTIO_CACHE_DIR"); env && *env) return env;
  return ".exceptio-cache";
}

ScanOptions scan_options(const Flags& f) { return {f.threads, 0}; }

CachedScan cached_scan(const FactoredPolynomial& poly, const Flags& f) {
  if (f.no_cache) return {scan(poly, f.limit, scan_options(f)), false, false, false};
  return scan_with_cache(poly, f.limit, ScanCache(f.cache_dir.empty() ? default_cache_dir() : f.cache_dir), scan_options(f));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<mpz_class> parse_radicands(const std::vector<std::string>& texts) {
  std::vector<mpz_class> out;
  for (const auto& t : texts) {
    mpz_class b;
    if (t.empty() || b.set_str(t, 10) != 0) fail(Errc::ParseError, "bad radicand \"" + t + "\"");
    out.push_back(b);
  }
  return out;
}

// Two columns of key and value, one line per result field.
void print_table(std::ostream& out, const json& envelope) {
  out << envelope["command"].get<std::string>() << '\n';
  const json& body = envelope.contains("error") ? envelope["error"] : envelope["result"];
  std::size_t width = 0;
  for (const auto& [k, v] : body.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : body.items()) {
    out << "  " << k << std::string(width - k.size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  out << "  (" << envelope["elapsed_ms"].get<double>() << " ms)\n";
}

json run_command(const std::string& command, const Flags& f, json& inputs) {
  if (command == "scan") {
    inputs = {{"poly", f.poly}, {"limit", f.limit}};
    return cached_scan(parse_factored(f.poly), f);
  }
  if (command == "verdict") {
    inputs = {{"poly", f.poly}, {"limit", f.limit}};
    const auto poly = parse_factored(f.poly);
    if (auto root = has_integer_root(poly)) return Verdict{HasIntegerRoot{*root}};
    return verdict_from_report(poly, cached_scan(poly, f).report);
  }
  if (command == "pattern") {
    inputs = {{"poly", f.poly}, {"p", f.p}};
    const auto reduced = reduce_mod(parse_factored(f.poly).product(), f.p);
    return {{"pattern", factorisation_pattern(reduced)}, {"roots", roots_mod_p(reduced)}};
  }
  if (command == "density") {
    inputs = {{"poly", f.poly}, {"limit", f.limit}};
    const auto report = cached_scan(parse_factored(f.poly), f).report;
    json result{{"density", report.density_estimate},
                {"value", report.density_estimate.value()},
                {"primes_scanned", report.primes_scanned}};
    if (!f.group_file.empty()) {
      inputs["group_file"] = f.group_file;
      result["group_density"] = chebotarev_root_density(parse_group(read_file(f.group_file)));
    }
    return result;
  }
  if (command == "group") {
    inputs = {{"group_file", f.group_file}};
    return summarize(parse_group(read_file(f.group_file)));
  }
  if (command == "kummer") {
    inputs = {{"p", f.p}};
    const bool consecutive = !f.primes.empty();
    if (consecutive) {
      inputs["primes"] = f.primes;
    } else {
      inputs["radicands"] = f.radicands;
    }
    const RadicandSet b = consecutive ? radicands_from_primes(f.p, f.primes) : RadicandSet(f.p, parse_radicands(f.radicands));
    json result = is_exceptional_exact(b);
    result["radicands"] = json::array();
    for (const auto& r : b.radicands()) result["radicands"].push_back(r.get_str());
    result["theorem_verdict"] = consecutive ? json(theorem_verdict(f.primes.size(), f.p)) : json(nullptr);
    return result;
  }
  if (command == "goodsets") {
    inputs = {{"p", f.p}, {"n", f.n}};
    const SearchOptions options{f.symmetry, f.threads};
    if (f.all_n) {
      inputs["all_n"] = true;
      json result = min_over_n(f.p, f.n, options);
      result["conjectured"] = conjectured_minimum(f.p);
      return result;
    }
    if (f.n < 1 || f.n > kMaxFormDimension) fail(Errc::DimensionTooLarge, "dimension must lie in [1, 20]");
    const std::size_t budget = f.budget ? f.budget : (std::size_t{1} << f.n) - 1;
    inputs["budget"] = budget;
    return min_good_size(f.p, f.n, budget, options);
  }
  if (command == "complete") {
    inputs = {{"poly", f.poly}, {"limit", f.limit}};
    const auto h = parse_poly(f.poly);
    const auto g = cubic_resolvent_completion(h);
    const auto product = product_of({g, h});
    return {{"cubic", to_string(h)},
            {"completion", to_string(g)},
            {"product", product.key()},
            {"verdict", exceptional_verdict(product, f.limit, scan_options(f))}};
  }
  if (command == "complete-d") {
    inputs = {{"bad", f.bad}, {"bound", f.bound}};
    return find_intersective_d(f.bad, f.bound);
  }
  if (command == "intersective-screen") {
    inputs = {{"poly", f.poly}, {"bound", f.bound}};
    const auto m = intersective_screen(parse_factored(f.poly), f.bound);
    return {{"smallest_failing_modulus", m ? json(*m) : json(nullptr)}};
  }
  fail(Errc::BadParameters, "unknown command " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exceptional and intersective polynomial toolkit", "exceptio"};
  app.set_version_flag("--version", EXCEPTIO_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", f.threads, "Worker threads (default: all processors)")->check(CLI::Range(1u, 1024u));
  app.add_flag("--pretty", f.pretty, "Human-readable table instead of JSON");
  app.add_option("--cache-dir", f.cache_dir, "Scan cache directory (default $EXCEPTIO_CACHE_DIR or .exceptio-cache)");
  app.add_flag("--no-cache", f.no_cache, "Do not read or write the scan cache");

  const auto limit_range = CLI::Range(u64{2}, kDefaultSieveCap);
  auto poly_opt = [&](CLI::App* sub) { sub->add_option("--poly", f.poly, "Factors separated by ';'")->required(); };

  auto* scan_cmd = app.add_subcommand("scan", "Primes up to the limit where no factor has a root");
  poly_opt(scan_cmd);
  scan_cmd->add_option("--limit", f.limit)->check(limit_range);

  auto* verdict_cmd = app.add_subcommand("verdict", "Exceptionality verdict from a prime scan");
  poly_opt(verdict_cmd);
  verdict_cmd->add_option("--limit", f.limit)->check(limit_range);

  auto* pattern_cmd = app.add_subcommand("pattern", "Factorisation pattern and roots modulo p");
  poly_opt(pattern_cmd);
  pattern_cmd->add_option("--p", f.p)->required()->check(CLI::Range(u64{2}, ~u64{0}));

  auto* density_cmd = app.add_subcommand("density", "Empirical root density");
  poly_opt(density_cmd);
  density_cmd->add_option("--limit", f.limit)->check(limit_range);
  density_cmd->add_option("--group-file", f.group_file, "Compare with the density of this group");

  auto* group_cmd = app.add_subcommand("group", "Fixed-point checks on a permutation group file");
  group_cmd->add_option("--group-file", f.group_file)->required();

  auto* kummer_cmd = app.add_subcommand("kummer", "Exact exceptionality of a product of X^p - b");
  kummer_cmd->add_option("--p", f.p)->required();
  auto* primes_opt = kummer_cmd->add_option("--primes", f.primes, "Builds the consecutive products")->delimiter(',');
  auto* rad_opt = kummer_cmd->add_option("--radicands", f.radicands)->delimiter(',');
  primes_opt->excludes(rad_opt);
  rad_opt->excludes(primes_opt);

  auto* goodsets_cmd = app.add_subcommand("goodsets", "Minimal good sets of subset-sum forms");
  goodsets_cmd->add_option("--p", f.p)->required();
  goodsets_cmd->add_option("--n", f.n)->required()->check(CLI::Range(1, kMaxFormDimension));
  goodsets_cmd->add_option("--budget", f.budget)->check(CLI::Range(std::size_t{1}, std::size_t{1} << kMaxFormDimension));
  goodsets_cmd->add_flag("--all-n", f.all_n, "Minimum over dimensions 1..n");
  goodsets_cmd->add_flag("--symmetry", f.symmetry, "Fix the first form up to coordinate permutation");

  auto* complete_cmd = app.add_subcommand("complete", "Resolvent completion of a cubic");
  poly_opt(complete_cmd);
  complete_cmd->add_option("--limit", f.limit)->check(limit_range);

  auto* complete_d_cmd = app.add_subcommand("complete-d", "Least d making (X^2 - d) f intersective at the bad primes");
  complete_d_cmd->add_option("--bad", f.bad)->delimiter(',');
  complete_d_cmd->add_option("--bound", f.bound)->required()->check(CLI::Range(u64{2}, ~u64{0}));

  auto* screen_cmd = app.add_subcommand("intersective-screen", "Least modulus without a root");
  poly_opt(screen_cmd);
  screen_cmd->add_option("--bound", f.bound)->required()->check(CLI::Range(u64{2}, kMaxScreenBound));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (kummer_cmd->parsed() && f.primes.empty() && f.radicands.empty()) throw CLI::RequiredError("--primes or --radicands");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }
  if (f.threads == 0) f.threads = std::max(1u, std::thread::hardware_concurrency());

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  json envelope{{"tool", "exceptio"}, {"version", EXCEPTIO_VERSION}, {"command", command}};
  json inputs = json::object();
  int status = kExitOk;
  try {
    envelope["result"] = run_command(command, f, inputs);
  } catch (const Error& e) {
    envelope["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    err << "exceptio: " << to_string(e.code()) << ": " << e.what() << '\n';
    status = kExitDomainError;
  } catch (const std::exception& e) {
    envelope["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    err << "exceptio: " << e.what() << '\n';
    status = kExitDomainError;
  }
  envelope["inputs"] = inputs;
  envelope["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (f.pretty) {
    print_table(out, envelope);
  } else {
    out << envelope.dump() << '\n';
  }
  return status;
}

}  // namespace exceptio
