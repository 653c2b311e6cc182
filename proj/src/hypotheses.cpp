#include "seu/hypotheses.hpp"

#include <algorithm>

#include "seu/errors.hpp"

namespace seu {

std::vector<PairClassification> classify_pairs(const Digraph& d) {
    std::vector<PairClassification> out;
    const int n = d.order();
    for (int u = 0; u < n; ++u) {
        const DegreeRecord du = d.degree(u);
        for (int v = u + 1; v < n; ++v) {
            if (d.adjacent(u, v)) continue;
            const DegreeRecord dv = d.degree(v);
            PairClassification rec;
            rec.u = u;
            rec.v = v;
            rec.dominated_by = d.in_mask(u) & d.in_mask(v);
            rec.dominates = d.out_mask(u) & d.out_mask(v);
            rec.degree_sum = du.total() + dv.total();
            rec.mixed_min = std::min(du.in_deg + dv.out_deg, du.out_deg + dv.in_deg);
            out.push_back(rec);
        }
    }
    return out;
}

const char* to_string(HypothesisId h) {
    switch (h) {
        case HypothesisId::bjm_2n3: return "bjm-2n3";
        case HypothesisId::c12: return "c12";
        case HypothesisId::c13: return "c13";
        case HypothesisId::t24_smd: return "t24-smd";
        case HypothesisId::t25_min: return "t25-min";
        case HypothesisId::t26_5n2: return "t26-5n2";
    }
    return "unknown";
}

std::optional<HypothesisId> parse_hypothesis(std::string_view id) {
    for (HypothesisId h : kAllHypotheses)
        if (id == to_string(h)) return h;
    return std::nullopt;
}

const char* to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::satisfied: return "satisfied";
        case HypothesisStatus::violated: return "violated";
        case HypothesisStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

namespace {

enum class PairScope { all_nonadjacent, dominated, dominated_or_dominating };

PairScope scope_of(HypothesisId h) {
    switch (h) {
        case HypothesisId::bjm_2n3: return PairScope::all_nonadjacent;
        case HypothesisId::c12:
        case HypothesisId::t24_smd: return PairScope::dominated;
        case HypothesisId::c13:
        case HypothesisId::t25_min:
        case HypothesisId::t26_5n2: return PairScope::dominated_or_dominating;
    }
    return PairScope::all_nonadjacent;
}

bool in_scope(const PairClassification& p, PairScope s) {
    switch (s) {
        case PairScope::all_nonadjacent: return true;
        case PairScope::dominated: return p.dominated_by != 0;
        case PairScope::dominated_or_dominating: return p.dominated_by != 0 || p.dominates != 0;
    }
    return false;
}

bool pair_passes(const PairClassification& p, HypothesisId h, int n) {
    switch (h) {
        case HypothesisId::bjm_2n3:
        case HypothesisId::c12:
        case HypothesisId::c13:
        case HypothesisId::t24_smd: return p.degree_sum >= 2 * n - 3;
        case HypothesisId::t25_min: return p.degree_sum >= 2 * n - 3 && p.mixed_min >= n - 2;
        case HypothesisId::t26_5n2: return 2 * p.degree_sum >= 5 * n - 11;
    }
    return false;
}

} // namespace

HypothesisOutcome evaluate_hypothesis(const std::vector<PairClassification>& pairs, int order, bool strong,
                                      bool semicomplete_multipartite, HypothesisId h) {
    HypothesisOutcome out;
    if (!strong) {
        out.status = HypothesisStatus::not_applicable;
        out.reason = "digraph is not strongly connected";
        return out;
    }
    if (h == HypothesisId::t24_smd && !semicomplete_multipartite) {
        out.status = HypothesisStatus::not_applicable;
        out.reason = "digraph is not semicomplete multipartite";
        return out;
    }
    if (h == HypothesisId::t26_5n2 && order < 2) {
        out.status = HypothesisStatus::not_applicable;
        out.reason = "order below 2";
        return out;
    }
    const PairScope scope = scope_of(h);
    for (const PairClassification& p : pairs) {
        if (!in_scope(p, scope)) continue;
        if (!pair_passes(p, h, order)) {
            out.status = HypothesisStatus::violated;
            out.violator = p;
            return out;
        }
    }
    return out;
}

HypothesisOutcome hypothesis_holds(const Digraph& d, HypothesisId h) {
    const bool strong = is_strong(d);
    const bool smd = h == HypothesisId::t24_smd && is_semicomplete_multipartite(d);
    return evaluate_hypothesis(classify_pairs(d), d.order(), strong, smd, h);
}

std::array<HypothesisOutcome, 6> evaluate_all_hypotheses(const Digraph& d) {
    const bool strong = is_strong(d);
    const bool smd = is_semicomplete_multipartite(d);
    const auto pairs = classify_pairs(d);
    std::array<HypothesisOutcome, 6> out;
    for (std::size_t i = 0; i < kAllHypotheses.size(); ++i)
        out[i] = evaluate_hypothesis(pairs, d.order(), strong, smd, kAllHypotheses[i]);
    return out;
}

SharpnessReport sharpness_audit(const Digraph& d) {
    SharpnessReport report;
    const int n = d.order();
    report.order = n;
    const auto pairs = classify_pairs(d);
    const bool smd = is_semicomplete_multipartite(d);

    auto add_row = [&](const char* label, PairScope scope, bool applicable, auto slack) {
        MarginRow row;
        row.label = label;
        row.applicable = applicable;
        if (applicable) {
            for (const PairClassification& p : pairs) {
                if (!in_scope(p, scope)) continue;
                const int s = slack(p);
                if (row.vacuous || s < row.margin) {
                    row.margin = s;
                    row.worst = p;
                }
                row.vacuous = false;
            }
        }
        report.rows.push_back(std::move(row));
    };

    const auto base_slack = [n](const PairClassification& p) { return p.degree_sum - (2 * n - 3); };
    add_row(to_string(HypothesisId::bjm_2n3), PairScope::all_nonadjacent, true, base_slack);
    add_row(to_string(HypothesisId::c12), PairScope::dominated, true, base_slack);
    add_row(to_string(HypothesisId::c13), PairScope::dominated_or_dominating, true, base_slack);
    add_row(to_string(HypothesisId::t24_smd), PairScope::dominated, smd, base_slack);
    add_row(to_string(HypothesisId::t25_min), PairScope::dominated_or_dominating, true,
            [n](const PairClassification& p) {
                return std::min(p.degree_sum - (2 * n - 3), p.mixed_min - (n - 2));
            });
    add_row(to_string(HypothesisId::t26_5n2), PairScope::dominated_or_dominating, n >= 2,
            [n](const PairClassification& p) { return 2 * p.degree_sum - (5 * n - 11); });
    add_row("t26-5n2-weak", PairScope::dominated_or_dominating, n >= 2,
            [n](const PairClassification& p) { return 2 * p.degree_sum - (5 * n - 13); });
    return report;
}

} // namespace seu
