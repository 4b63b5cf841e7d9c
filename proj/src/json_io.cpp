#include "masum/json_io.hpp"

#include <sstream>

namespace masum {

namespace {

std::uint64_t require_uint(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].template get<long long>() < 0) {
        throw InputError(std::string("expected nonnegative integer field \"") + key + "\"");
    }
    return j[key].template get<std::uint64_t>();
}

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw InputError(std::string("expected string field \"") + key + "\"");
    }
    return j[key].template get<std::string>();
}

const Json& require_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw InputError(std::string("expected array field \"") + key + "\"");
    }
    return j[key];
}

} // namespace

Json instance_to_json(const Instance& inst) {
    Json j;
    j["weights"] = inst.weights;
    j["t"] = inst.t;
    return j;
}

Instance instance_from_json(const Json& j) {
    Instance inst;
    for (const Json& w : require_array(j, "weights")) {
        if (!w.is_number_integer() || w.template get<long long>() < 1) {
            throw InputError("weights must be positive integers");
        }
        inst.weights.push_back(w.template get<std::uint64_t>());
    }
    inst.t = require_uint(j, "t");
    if (inst.weights.empty() || inst.t < 1) {
        throw InputError("instance needs at least one weight and t >= 1");
    }
    return inst;
}

Json count_table_to_json(const CountTable& table) {
    Json j;
    j["upper"] = table.upper;
    Json counts = Json::array();
    for (const Natural& c : table.counts) {
        counts.push_back(to_decimal(c));
    }
    j["counts"] = std::move(counts);
    return j;
}

CountTable count_table_from_json(const Json& j) {
    CountTable table;
    table.upper = require_uint(j, "upper");
    for (const Json& c : require_array(j, "counts")) {
        if (!c.is_string()) {
            throw InputError("counts must be decimal strings");
        }
        table.counts.push_back(parse_natural(c.template get<std::string>()));
    }
    if (table.counts.size() != table.upper + 1) {
        throw InputError("counts length must equal upper + 1");
    }
    return table;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["p"] = cert.p;
    j["t"] = cert.t;
    Json entries = Json::array();
    for (const CertEntry& e : cert.entries) {
        entries.push_back(Json{{"i", e.index}, {"c", to_decimal(e.count)}});
    }
    j["entries"] = std::move(entries);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.p = require_uint(j, "p");
    cert.t = require_uint(j, "t");
    for (const Json& e : require_array(j, "entries")) {
        if (!e.is_object()) {
            throw InputError("certificate entries must be objects");
        }
        cert.entries.push_back(CertEntry{require_uint(e, "i"),
                                         parse_natural(require_string(e, "c"))});
    }
    return cert;
}

Json verifier_params_to_json(const VerifierParams& params) {
    Json j;
    j["q"] = to_decimal(params.q);
    j["r"] = to_decimal(params.r);
    j["q_mode"] = params.q_mode == PickMode::Smallest ? "smallest" : "random";
    j["seed"] = params.seed;
    return j;
}

VerifierParams verifier_params_from_json(const Json& j) {
    VerifierParams params;
    params.q = parse_natural(require_string(j, "q"));
    params.r = parse_natural(require_string(j, "r"));
    const std::string mode = require_string(j, "q_mode");
    if (mode == "smallest") {
        params.q_mode = PickMode::Smallest;
    } else if (mode == "random") {
        params.q_mode = PickMode::UniformRandom;
    } else {
        throw InputError("q_mode must be \"smallest\" or \"random\"");
    }
    params.seed = require_uint(j, "seed");
    return params;
}

Json verdict_to_json(const Verdict& verdict) {
    Json j;
    j["outcome"] = verdict.outcome == Outcome::Accept ? "accept" : "reject";
    if (verdict.c_t.has_value()) {
        j["c_t"] = to_decimal(*verdict.c_t);
    } else {
        j["c_t"] = nullptr;
    }
    j["lhs"] = to_decimal(verdict.lhs.value);
    j["rhs"] = to_decimal(verdict.rhs.value);
    j["modulus"] = to_decimal(verdict.lhs.modulus);
    return j;
}

Json prime_pick_to_json(const PrimePick& pick) {
    Json j;
    j["prime"] = to_decimal(pick.prime);
    j["interval_lo"] = pick.interval_lo.str();
    j["interval_hi"] = pick.interval_hi.str();
    j["mode"] = pick.mode == PickMode::Smallest ? "smallest" : "random";
    j["seed"] = pick.seed;
    return j;
}

Json audit_report_to_json(const AuditReport& report) {
    Json j;
    j["instance"] = instance_to_json(report.instance);
    j["q"] = to_decimal(report.q);
    j["r"] = to_decimal(report.r);
    Json stated = Json::array();
    for (const StatedValue& s : report.stated) {
        stated.push_back(Json{{"name", s.name}, {"value", s.value}, {"quote", s.quote}});
    }
    j["stated"] = std::move(stated);
    Json recomputed = Json::array();
    for (const RecomputedValue& r : report.recomputed) {
        recomputed.push_back(Json{{"policy", r.policy}, {"name", r.name}, {"value", r.value}});
    }
    j["recomputed"] = std::move(recomputed);
    Json discrepancies = Json::array();
    for (const Discrepancy& d : report.discrepancies) {
        discrepancies.push_back(Json{{"id", d.id},
                                     {"description", d.description},
                                     {"stated", d.stated},
                                     {"recomputed", d.recomputed},
                                     {"policy", d.policy}});
    }
    j["discrepancies"] = std::move(discrepancies);
    Json verdicts = Json::array();
    for (const auto& [label, verdict] : report.verdicts) {
        verdicts.push_back(Json{{"policy", label}, {"verdict", verdict_to_json(verdict)}});
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

Json recurrence_report_to_json(const RecurrenceIdentityReport& report) {
    Json j;
    j["trials"] = report.trials;
    j["matches"] = report.matches;
    j["divergent_trials"] = report.divergent_trials;
    Json witnesses = Json::array();
    for (const MultisetWitness& w : report.witnesses) {
        witnesses.push_back(Json{{"members", w.members},
                                 {"index", w.index},
                                 {"multiset", to_decimal(w.multiset_count)},
                                 {"subset", to_decimal(w.subset_count)}});
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

std::string audit_report_text(const AuditReport& report) {
    std::ostringstream out;
    out << "audit: worked example, weights (1,2,3,4), t = 17, q = " << report.q
        << ", r = " << report.r << "\n";
    for (const auto& [label, verdict] : report.verdicts) {
        out << "verdict[" << label << "]: "
            << (verdict.outcome == Outcome::Accept ? "accept" : "reject");
        if (verdict.c_t.has_value()) {
            out << " c_t=" << to_decimal(*verdict.c_t);
        }
        out << " lhs=" << to_decimal(verdict.lhs.value)
            << " rhs=" << to_decimal(verdict.rhs.value) << "\n";
    }
    for (const Discrepancy& d : report.discrepancies) {
        out << d.id << " | quote: " << d.stated << " | recomputed: " << d.recomputed
            << " | policy: " << d.policy << "\n";
    }
    return out.str();
}

std::string recurrence_report_text(const RecurrenceIdentityReport& report) {
    std::ostringstream out;
    out << "recurrence identity: " << report.matches << "/" << report.trials
        << " trials with identical index-form and set-form tables, "
        << report.divergent_trials << " with a multiset/subset divergence\n";
    for (const MultisetWitness& w : report.witnesses) {
        out << "witness: members {";
        for (std::size_t k = 0; k < w.members.size(); ++k) {
            out << (k ? "," : "") << w.members[k];
        }
        out << "} sum " << w.index << ": multiset " << to_decimal(w.multiset_count)
            << " vs subset " << to_decimal(w.subset_count) << "\n";
    }
    return out.str();
}

std::string policy_name(const PolicyProfile& policy) {
    return policy == PolicyProfile::corrected() ? "corrected" : "aswritten";
}

PolicyProfile policy_from_name(const std::string& name) {
    if (name == "corrected") {
        return PolicyProfile::corrected();
    }
    if (name == "aswritten") {
        return PolicyProfile::as_written();
    }
    throw InputError("unknown policy \"" + name + "\" (use corrected|aswritten)");
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

} // namespace masum
