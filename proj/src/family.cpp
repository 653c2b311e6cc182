#include "seu/family.hpp"

#include <bit>
#include <utility>
#include <variant>

#include "seu/errors.hpp"
#include "seu/hypotheses.hpp"

namespace seu {

std::uint32_t FamilyInstance::block1_mask() const {
    std::uint32_t mask = 0;
    for (int b : block1) mask |= 1u << b;
    return mask;
}

std::uint32_t FamilyInstance::block2_mask() const {
    std::uint32_t mask = 0;
    for (int b : block2) mask |= 1u << b;
    return mask;
}

std::vector<std::string> FamilyInstance::vertex_labels() const {
    std::vector<std::string> labels(digraph.order());
    labels[u] = "u";
    labels[v] = "v";
    for (std::size_t i = 0; i < block1.size(); ++i)
        labels[block1[i]] = i == 0 ? "w'" : "b1_" + std::to_string(i);
    for (std::size_t i = 0; i < block2.size(); ++i)
        labels[block2[i]] = i == 0 ? "w" : "b2_" + std::to_string(i);
    return labels;
}

FamilyInstance build_family(FamilyParams p) {
    if (p.n1 < 1 || p.n2 < 1)
        throw input_error("family parameters must be at least 1, got n1=" + std::to_string(p.n1) +
                          " n2=" + std::to_string(p.n2));
    const int n = p.n1 + p.n2 + 2;
    FamilyInstance inst;
    inst.params = p;
    inst.digraph = Digraph(n);
    for (int i = 0; i < p.n1; ++i) inst.block1.push_back(2 + i);
    for (int i = 0; i < p.n2; ++i) inst.block2.push_back(2 + p.n1 + i);
    inst.w_prime = inst.block1.front();
    inst.w = inst.block2.front();

    Digraph& d = inst.digraph;
    for (int a : inst.block1)
        for (int b : inst.block1)
            if (a != b) d.add_arc(a, b);
    for (int a : inst.block2)
        for (int b : inst.block2)
            if (a != b) d.add_arc(a, b);
    d.add_arc(inst.w_prime, inst.w);
    for (int a : inst.block2) {
        d.add_arc(a, inst.u);
        d.add_arc(a, inst.v);
        for (int b : inst.block1) d.add_arc(a, b);
    }
    for (int b : inst.block1) {
        d.add_arc(inst.u, b);
        d.add_arc(inst.v, b);
    }
    return inst;
}

namespace {

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_mask(std::uint32_t mask) {
    std::string out = "{";
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        if (out.size() > 1) out += ",";
        out += std::to_string(std::countr_zero(rest));
    }
    return out + "}";
}

std::string fmt_classes(const std::vector<std::vector<int>>& classes) {
    std::string out;
    for (const auto& cls : classes) {
        std::uint32_t mask = 0;
        for (int v : cls) mask |= 1u << v;
        if (!out.empty()) out += " ";
        out += fmt_mask(mask);
    }
    return out;
}

} // namespace

FamilyAudit audit_family(FamilyParams p, const DecideLimits& limits) {
    const FamilyInstance inst = build_family(p);
    const Digraph& d = inst.digraph;
    const int n = d.order();

    FamilyAudit audit;
    audit.params = p;
    audit.order = n;
    audit.arcs = d.arc_count();

    auto add = [&](const char* name, std::string expected, std::string actual) {
        audit.checks.push_back({name, expected == actual, std::move(expected), std::move(actual)});
    };

    const int expected_arcs = p.n1 * (p.n1 - 1) + p.n2 * (p.n2 - 1) + 1 + p.n2 * (p.n1 + 2) + 2 * p.n1;
    add("arc_count", std::to_string(expected_arcs), std::to_string(d.arc_count()));
    add("strong", "true", fmt_bool(is_strong(d)));
    add("verdict", "not_supereulerian", to_string(decide(d, limits).verdict));

    const auto pairs = classify_pairs(d);
    const bool unique_pair = pairs.size() == 1 && pairs.front().u == inst.u && pairs.front().v == inst.v;
    add("unique_nonadjacent_pair", "{0,1}",
        unique_pair ? fmt_mask(3)
                    : std::to_string(pairs.size()) + " nonadjacent pairs");
    if (unique_pair) {
        const PairClassification& uv = pairs.front();
        add("pair_dominated_by_block2", fmt_mask(inst.block2_mask()), fmt_mask(uv.dominated_by));
        add("pair_dominates_block1", fmt_mask(inst.block1_mask()), fmt_mask(uv.dominates));
        add("degree_u", std::to_string(n - 2), std::to_string(d.degree(inst.u).total()));
        add("degree_v", std::to_string(n - 2), std::to_string(d.degree(inst.v).total()));
        add("degree_sum", std::to_string(2 * n - 4), std::to_string(uv.degree_sum));
        add("mixed_min", std::to_string(n - 2), std::to_string(uv.mixed_min));
        audit.bound_lhs = 2 * uv.degree_sum;
    } else {
        add("pair_figures", "unique pair {0,1}", "unavailable");
        audit.bound_lhs = 2 * (2 * n - 4);
    }
    audit.bound_rhs = 5 * n - 13;
    audit.bound_holds = audit.bound_lhs >= audit.bound_rhs;
    audit.bound_equality = audit.bound_lhs == audit.bound_rhs;

    {
        PartitionCertificate expected;
        expected.classes.push_back({inst.u, inst.v});
        for (int b : inst.block1) expected.classes.push_back({b});
        for (int b : inst.block2) expected.classes.push_back({b});
        const SmdResult result = recognize_semicomplete_multipartite(d);
        const auto* cert = std::get_if<PartitionCertificate>(&result);
        add("partite_classes", fmt_classes(expected.classes),
            cert ? fmt_classes(cert->classes) : "recognition failed");
    }

    {
        // every arc entering block 2 from outside, expected: exactly (w',w)
        std::vector<std::pair<int, int>> entering;
        const std::uint32_t b2 = inst.block2_mask();
        for (const auto& [tail, head] : d.arcs())
            if (((b2 >> head) & 1u) != 0 && ((b2 >> tail) & 1u) == 0) entering.emplace_back(tail, head);
        std::string actual;
        for (const auto& [tail, head] : entering) {
            if (!actual.empty()) actual += " ";
            actual += std::to_string(tail) + "->" + std::to_string(head);
        }
        add("single_entry_cut", std::to_string(inst.w_prime) + "->" + std::to_string(inst.w), actual);
    }

    if (d.arc_count() <= 24)
        add("bruteforce_verdict", "not_supereulerian", to_string(decide_bruteforce(d).verdict));

    audit.all_pass = true;
    for (const AuditCheck& c : audit.checks) audit.all_pass = audit.all_pass && c.pass;
    return audit;
}

} // namespace seu
