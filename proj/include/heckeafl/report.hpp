#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "heckeafl/localfield.hpp"

namespace heckeafl {

using Json = nlohmann::ordered_json;

/// One verified identity: pass iff lhs == rhs exactly.
struct CaseRow {
    Json inputs;
    std::string lhs, rhs;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::string kind;  // FL | AFL | KERNEL | COMM | COPRIME | ...
    Json parameters;
    std::vector<CaseRow> cases;
    long skipped = 0;

    long passed() const;
    long failed() const;
    bool all_pass() const { return failed() == 0; }
    void add_case(Json inputs, std::string lhs, std::string rhs, std::string note = "");
    Json to_json() const;
};

Json config_json(const PrimeConfig& cfg);

} // namespace heckeafl
