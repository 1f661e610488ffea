#pragma once

#include "parslice/search.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace parslice {

inline constexpr const char* kSchemaVersion = "1";

// JSON payloads; root vectors are integer arrays over pi, rationals are
// decimal strings that parse back losslessly.
nlohmann::json json_root(const Root& r);
nlohmann::json json_rat(const Rat& r);
nlohmann::json json_roots(const std::vector<Root>& v);
nlohmann::json json_rats(const QVec& v);

nlohmann::json cascade_payload(const RootSystem& rs, const Cascade& c);
nlohmann::json orbit_payload(const ParabolicContext& ctx);
nlohmann::json epsilon_payload(const ParabolicContext& ctx, const EpsilonReport& rep);
nlohmann::json pair_payload(const ParabolicContext& ctx, const PairCandidate& cand,
                            const PairCertificate* cert);
nlohmann::json certificate_payload(const PairCertificate& cert);
nlohmann::json search_payload(const SearchReport& rep);

// Envelope: schema_version, echoed request, status in {ok, not-covered,
// failed}, payload.
nlohmann::json wrap_report(const nlohmann::json& request, const std::string& status,
                           const nlohmann::json& payload);

} // namespace parslice
