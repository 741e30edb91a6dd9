#ifndef HM_REPORT_HPP
#define HM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace hm {

// Outcome of one theorem/inequality verification. `margin` is the
// statement-specific slack (positive = pass headroom). A report that
// asserted nothing never counts as a pass.
struct CheckReport {
    std::string check_id;
    bool passed = false;
    double margin = 0.0;
    nlohmann::json inputs_echo = nlohmann::json::object();
    std::vector<std::string> notes;
    int asserted_cases = 0;
    bool precondition_violation = false;

    void finalize(double tolerance) {
        passed = !precondition_violation && asserted_cases > 0 && margin >= -tolerance;
        if (asserted_cases == 0 && !precondition_violation)
            notes.push_back("no sub-cases asserted; vacuous run counts as failure");
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"check_id", check_id},
                              {"passed", passed},
                              {"margin", margin},
                              {"notes", notes},
                              {"inputs_echo", inputs_echo},
                              {"asserted_cases", asserted_cases},
                              {"precondition_violation", precondition_violation}};
    }

    static CheckReport from_json(const nlohmann::json& j) {
        CheckReport r;
        r.check_id = j.at("check_id").get<std::string>();
        r.passed = j.at("passed").get<bool>();
        r.margin = j.at("margin").get<double>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.inputs_echo = j.at("inputs_echo");
        r.asserted_cases = j.at("asserted_cases").get<int>();
        r.precondition_violation = j.at("precondition_violation").get<bool>();
        return r;
    }
};

}  // namespace hm

#endif
