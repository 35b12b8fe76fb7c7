#pragma once

#include "json.hpp"

#include "exceptio/goodsets.hpp"
#include "exceptio/kummer.hpp"
#include "exceptio/modpoly.hpp"
#include "exceptio/permgroup.hpp"
#include "exceptio/primescan.hpp"
#include "exceptio/quadcomplete.hpp"
#include "exceptio/scan_cache.hpp"

namespace exceptio {

// Big integers and rationals are written as strings ("-108", "2/3").
void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const ScanReport& r);
void to_json(nlohmann::json& j, const CachedScan& r);
void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const Permutation& g);
void to_json(nlohmann::json& j, const GroupSummary& s);
void to_json(nlohmann::json& j, const NuMap& nu);
void to_json(nlohmann::json& j, const ExactResult& r);
void to_json(nlohmann::json& j, const FormSet& t);
void to_json(nlohmann::json& j, const SearchResult& r);
void to_json(nlohmann::json& j, const CompletionCandidate& c);
void to_json(nlohmann::json& j, const CompletionReport& r);

}  // namespace exceptio
