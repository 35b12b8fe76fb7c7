#include "exceptio/scan_cache.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "exceptio/error.hpp"
#include "exceptio/primes.hpp"

namespace exceptio {

namespace {

bool parse_u64(std::string_view s, u64& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::optional<ScanCache::Entry> parse_line(std::string_view line) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) return std::nullopt;
  ScanCache::Entry e;
  if (!parse_u64(line.substr(0, tab), e.limit)) return std::nullopt;
  std::string_view rest = line.substr(tab + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    u64 v = 0;
    if (!parse_u64(rest.substr(0, comma), v)) return std::nullopt;
    if (v > e.limit || !is_prime(v)) return std::nullopt;
    if (!e.failures.empty() && v <= e.failures.back()) return std::nullopt;
    e.failures.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) return std::nullopt;
  }
  return e;
}

}  // namespace

std::filesystem::path ScanCache::path_for(const std::string& key) const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string name;
  for (unsigned char ch : key) {
    if (std::isalnum(ch)) {
      name += static_cast<char>(ch);
    } else {
      name += '_';
      name += kHex[ch >> 4];
      name += kHex[ch & 15];
    }
  }
  return dir_ / (name + ".scan");
}

std::optional<ScanCache::Entry> ScanCache::load(const std::string& key) const {
  const auto path = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot read " + path.string());
  std::optional<Entry> best;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto e = parse_line(line);
    if (!e) fail(Errc::CorruptCacheEntry, path.string() + ":" + std::to_string(lineno) + ": malformed entry");
    if (!best || e->limit > best->limit) best = std::move(e);
  }
  return best;
}

void ScanCache::store(const ScanReport& report) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) fail(Errc::IoError, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto path = path_for(report.poly_key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot write " + tmp.string());
    out << report.limit << '\t';
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      if (i) out << ',';
      out << report.failures[i];
    }
    out << '\n';
    if (!out) fail(Errc::IoError, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(Errc::IoError, "cannot replace " + path.string() + ": " + ec.message());
}

CachedScan scan_with_cache(const FactoredPolynomial& f, u64 limit, const ScanCache& cache,
                           const ScanOptions& options) {
  CachedScan result;
  std::optional<ScanCache::Entry> entry;
  try {
    entry = cache.load(f.key());
  } catch (const Error& e) {
    if (e.code() != Errc::CorruptCacheEntry) throw;
    result.recovered = true;
  }

  if (!entry) {
    result.report = scan(f, limit, options);
    cache.store(result.report);
    return result;
  }

  result.cache_hit = true;
  const PrimeTable table = sieve_primes(limit);
  ScanFragment merged;
  merged.primes_scanned = table.primes.size();
  if (entry->limit >= limit) {
    for (u64 p : entry->failures) {
      if (p <= limit) merged.failures.push_back(p);
    }
    result.report = make_report(f, limit, std::move(merged));
    return result;
  }

  result.extended = true;
  const auto first_new = std::upper_bound(table.primes.begin(), table.primes.end(), entry->limit);
  const std::span<const u64> fresh(first_new, table.primes.end());
  ScanFragment tail = scan_primes(f, fresh, options);
  merged.failures = std::move(entry->failures);
  merged.failures.insert(merged.failures.end(), tail.failures.begin(), tail.failures.end());
  result.report = make_report(f, limit, std::move(merged));
  cache.store(result.report);
  return result;
}

}  // namespace exceptio
