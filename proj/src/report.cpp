#include "heckeafl/report.hpp"

namespace heckeafl {

long VerificationReport::passed() const {
    long n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
}

long VerificationReport::failed() const { return (long)cases.size() - passed(); }

void VerificationReport::add_case(Json inputs, std::string lhs, std::string rhs,
                                  std::string note) {
    CaseRow row;
    row.inputs = std::move(inputs);
    row.pass = (lhs == rhs);
    row.lhs = std::move(lhs);
    row.rhs = std::move(rhs);
    row.note = std::move(note);
    cases.push_back(std::move(row));
}

Json VerificationReport::to_json() const {
    Json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["parameters"] = parameters;
    Json rows = Json::array();
    for (const auto& c : cases) {
        Json r;
        r["inputs"] = c.inputs;
        r["lhs"] = c.lhs;
        r["rhs"] = c.rhs;
        r["pass"] = c.pass;
        if (!c.note.empty()) r["note"] = c.note;
        rows.push_back(std::move(r));
    }
    j["cases"] = std::move(rows);
    j["summary"] = Json{{"total", cases.size()},
                        {"passed", passed()},
                        {"failed", failed()},
                        {"skipped", skipped}};
    return j;
}

Json config_json(const PrimeConfig& cfg) {
    return Json{{"p", cfg.p}, {"epsilon", cfg.epsilon}, {"precision", cfg.precision}};
}

} // namespace heckeafl
