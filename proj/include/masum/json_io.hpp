#pragma once

#include <string>

#include <json.hpp>

#include "masum/audit.hpp"
#include "masum/counting.hpp"
#include "masum/primes.hpp"
#include "masum/protocol.hpp"

namespace masum {

// ordered_json keeps key order stable so serialized reports are
// byte-reproducible.
using Json = nlohmann::ordered_json;

// {"weights":[int,...], "t":int}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// {"upper":int, "counts":["dec",...]}
Json count_table_to_json(const CountTable& table);
CountTable count_table_from_json(const Json& j);

// {"p":int, "t":int, "entries":[{"i":int,"c":"dec"},...]}, indices ascending
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

// {"q":"dec","r":"dec","q_mode":"smallest"|"random","seed":int}
Json verifier_params_to_json(const VerifierParams& params);
VerifierParams verifier_params_from_json(const Json& j);

Json verdict_to_json(const Verdict& verdict);
Json prime_pick_to_json(const PrimePick& pick);
Json audit_report_to_json(const AuditReport& report);
Json recurrence_report_to_json(const RecurrenceIdentityReport& report);

std::string audit_report_text(const AuditReport& report);
std::string recurrence_report_text(const RecurrenceIdentityReport& report);

std::string policy_name(const PolicyProfile& policy);
PolicyProfile policy_from_name(const std::string& name);

/// Parse with InputError on malformed text (wraps the json exception).
Json parse_json_text(const std::string& text);

} // namespace masum
