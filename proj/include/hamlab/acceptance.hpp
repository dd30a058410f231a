#pragma once

#include <string>
#include <vector>

namespace hamlab {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    double seconds;
    double budget_seconds;
    std::vector<std::string> details;  // one line per sub-check, prefixed ok/FAIL
};

struct AcceptanceOptions {
    std::string flow_csv_path = "p3_flow.csv";  // empty disables the CSV
    std::vector<double> edge_deltas{1e2, 1e3, 1e4};
};

CriterionResult criterion_term_algebra(const AcceptanceOptions& = {});
CriterionResult criterion_five_node(const AcceptanceOptions& = {});
CriterionResult criterion_edge_gadget(const AcceptanceOptions& = {});
CriterionResult criterion_xy_chain(const AcceptanceOptions& = {});
CriterionResult criterion_token_gadget(const AcceptanceOptions& = {});
CriterionResult criterion_tim_gadget(const AcceptanceOptions& = {});
CriterionResult criterion_epr_star(const AcceptanceOptions& = {});
CriterionResult criterion_classification(const AcceptanceOptions& = {});
CriterionResult criterion_p3_flow(const AcceptanceOptions& = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// "PASS [1] name (0.12 s)" plus indented detail lines
std::string format_criterion(const CriterionResult& r, bool with_details = true, bool with_time = true);

}  // namespace hamlab
