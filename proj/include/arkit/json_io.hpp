#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "arkit/audit.hpp"
#include "arkit/extremal.hpp"
#include "arkit/harness.hpp"
#include "arkit/matching.hpp"
#include "arkit/rainbow.hpp"
#include "arkit/structure.hpp"

namespace arkit {

using Json = nlohmann::ordered_json;

Json to_json(const BergeWitness& w);
Json to_json(const GEDecomposition& ge);
Json to_json(const RainbowCertificate& c);
// An absent certificate is encoded as {"found": false}.
Json to_json(const std::optional<MonoStructureCertificate>& c);
Json to_json(const TheoremReport& r);
Json to_json(const ThresholdValues& t);
// Records are only included for failing checks unless `all_records` is set.
Json to_json(const AuditReport& r, bool all_records = false);
Json to_json(const ProbeReport& r);

std::string audit_table(const AuditReport& r);
std::string probe_table(const ProbeReport& r);

// FNV-1a over bytes.
std::uint64_t fnv1a64(std::string_view bytes);
// Hash of the compact JSON dump; equal reports hash equally.
std::uint64_t report_hash(const ProbeReport& r);

}  // namespace arkit
