#pragma once

// Verification report shape shared by every target: a construction id, the
// inputs, a list of asserted facts (each with a value, a rule anchor and a
// pass bit) and the certificate chain that produced them.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fva {

using json = nlohmann::ordered_json;

inline const char* kToolVersion = "0.1.0";

struct Fact {
    std::string name;
    json value;
    std::string anchor;  // stable rule identifier, e.g. "weyl.dim-formula"
    bool pass = true;
};

struct CertStep {
    std::string rule;
    std::string detail;
};

struct VerificationReport {
    std::string construction;
    json inputs = json::object();
    std::vector<Fact> facts;
    std::vector<CertStep> certificates;
    json attachments = json::object();  // computed profiles, chart serializations
    std::optional<double> timing_ms;
    std::optional<std::string> dot;  // dual graphs, when the target has one

    void add_fact(std::string name, json value, std::string anchor, bool pass) {
        facts.push_back({std::move(name), std::move(value), std::move(anchor), pass});
    }

    void add_cert(std::string rule, std::string detail) {
        certificates.push_back({std::move(rule), std::move(detail)});
    }

    bool passed() const {
        for (const Fact& f : facts)
            if (!f.pass) return false;
        return true;
    }

    json to_json() const;
    std::string to_markdown() const;
};

}  // namespace fva
