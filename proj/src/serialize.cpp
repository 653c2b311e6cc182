#include "seu/serialize.hpp"

#include <bit>

namespace seu {

namespace {

ordered_json mask_to_list(std::uint32_t mask) {
    ordered_json list = ordered_json::array();
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) list.push_back(std::countr_zero(rest));
    return list;
}

ordered_json arcs_to_list(const std::vector<std::pair<int, int>>& arcs) {
    ordered_json list = ordered_json::array();
    for (const auto& [tail, head] : arcs) list.push_back(ordered_json::array({tail, head}));
    return list;
}

} // namespace

ordered_json to_json(const PairClassification& p) {
    return {{"u", p.u},
            {"v", p.v},
            {"dominated_by", mask_to_list(p.dominated_by)},
            {"dominates", mask_to_list(p.dominates)},
            {"degree_sum", p.degree_sum},
            {"mixed_min", p.mixed_min}};
}

ordered_json to_json(const Decision& decision, bool with_timing) {
    ordered_json j{{"verdict", to_string(decision.verdict)}};
    if (decision.certificate)
        j["certificate"] = arcs_to_list(decision.certificate->arcs());
    else
        j["certificate"] = nullptr;
    j["nodes_expanded"] = decision.nodes_expanded;
    if (with_timing) j["seconds"] = decision.seconds;
    return j;
}

ordered_json to_json(const CheckerOutcome& outcome) {
    return {{"verdict", outcome.holds ? "holds" : "violated"},
            {"premise_trail_exists", outcome.premise_trail_exists},
            {"lhs", outcome.lhs},
            {"rhs", outcome.rhs},
            {"witness", outcome.witness}};
}

ordered_json to_json(const HypothesisOutcome& outcome) {
    ordered_json j{{"status", to_string(outcome.status)}};
    if (outcome.violator) j["violator"] = to_json(*outcome.violator);
    if (!outcome.reason.empty()) j["reason"] = outcome.reason;
    return j;
}

ordered_json to_json(const PopulationSpec& spec) {
    ordered_json j{{"mode", spec.mode == PopulationMode::exhaustive ? "exhaustive" : "random"}, {"n", spec.n}};
    if (spec.mode == PopulationMode::random) {
        j["count"] = spec.count;
        j["seed"] = spec.seed;
        j["density"] = spec.density;
    }
    j["strong_only"] = spec.strong_only;
    j["smd_only"] = spec.smd_only;
    j["canonical_only"] = spec.canonical_only;
    return j;
}

ordered_json to_json(const VerificationReport& report, bool with_timing) {
    ordered_json j{{"hypothesis", to_string(report.hypothesis)}, {"population", to_json(report.population)}};
    j["counts"] = {{"examined", report.counts.examined},
                   {"filtered", report.counts.filtered},
                   {"strong", report.counts.strong},
                   {"satisfying", report.counts.satisfying},
                   {"supereulerian", report.counts.supereulerian}};
    j["complete"] = report.complete;
    ordered_json list = ordered_json::array();
    for (const Counterexample& cx : report.counterexamples)
        list.push_back({{"index", cx.index}, {"edge_list", cx.edge_list}});
    j["counterexamples"] = list;
    if (with_timing) j["seconds"] = report.seconds;
    return j;
}

ordered_json to_json(const FamilyAudit& audit) {
    ordered_json j{{"n1", audit.params.n1}, {"n2", audit.params.n2}, {"order", audit.order}, {"arcs", audit.arcs}};
    j["all_pass"] = audit.all_pass;
    j["doubled_bound"] = {{"lhs", audit.bound_lhs},
                          {"rhs", audit.bound_rhs},
                          {"holds", audit.bound_holds},
                          {"equality", audit.bound_equality}};
    ordered_json checks = ordered_json::array();
    for (const AuditCheck& c : audit.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    j["checks"] = checks;
    return j;
}

ordered_json to_json(const SharpnessReport& report) {
    ordered_json rows = ordered_json::array();
    for (const MarginRow& row : report.rows) {
        ordered_json r{{"label", row.label}, {"applicable", row.applicable}, {"vacuous", row.vacuous}};
        if (row.applicable && !row.vacuous) {
            r["margin"] = row.margin;
            r["worst"] = to_json(*row.worst);
        }
        rows.push_back(r);
    }
    return {{"order", report.order}, {"rows", rows}};
}

ordered_json to_json(const LemmaSuiteReport& report) {
    ordered_json j{{"config",
                    {{"trials", report.config.trials},
                     {"seed", report.config.seed},
                     {"max_order", report.config.max_order},
                     {"density", report.config.density},
                     {"smd_exhaustive_order", report.config.smd_exhaustive_order}}}};
    j["trail_pair"] = {{"trials", report.trail_pair_trials},
                       {"vacuous", report.trail_pair_vacuous},
                       {"violations", report.trail_pair_violations}};
    j["single_vertex"] = {{"trials", report.single_vertex_trials},
                          {"vacuous", report.single_vertex_vacuous},
                          {"violations", report.single_vertex_violations}};
    j["smd"] = {{"hosts", report.smd_hosts}, {"violations", report.smd_violations}};
    j["violation_notes"] = report.violation_notes;
    return j;
}

std::string to_text(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace seu
