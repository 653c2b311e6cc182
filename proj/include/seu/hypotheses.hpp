#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seu/digraph.hpp"

namespace seu {

// One nonadjacent pair {u,v} with its witness sets and degree figures.
struct PairClassification {
    int u = 0, v = 0;               // u < v, nonadjacent in the host
    std::uint32_t dominated_by = 0; // bitmask of w with arcs (w,u) and (w,v)
    std::uint32_t dominates = 0;    // bitmask of w with arcs (u,w) and (v,w)
    int degree_sum = 0;             // d(u) + d(v)
    int mixed_min = 0;              // min(d-(u) + d+(v), d+(u) + d-(v))

    friend bool operator==(const PairClassification&, const PairClassification&) = default;
};

// One record per nonadjacent pair, ordered by (u, v).
std::vector<PairClassification> classify_pairs(const Digraph& d);

// The six degree conditions under test. All inequalities are evaluated in
// integers; the fractional 5/2 n - 11/2 bound is doubled first.
enum class HypothesisId {
    bjm_2n3, // all nonadjacent pairs:         d(u)+d(v) >= 2n-3
    c12,     // dominated pairs:               d(u)+d(v) >= 2n-3
    c13,     // dominated or dominating pairs: d(u)+d(v) >= 2n-3
    t24_smd, // c12 scope, semicomplete multipartite hosts only
    t25_min, // c13 scope, additionally mixed_min >= n-2
    t26_5n2, // dominated or dominating pairs: 2(d(u)+d(v)) >= 5n-11, n >= 2
};

inline constexpr std::array<HypothesisId, 6> kAllHypotheses{
    HypothesisId::bjm_2n3, HypothesisId::c12,     HypothesisId::c13,
    HypothesisId::t24_smd, HypothesisId::t25_min, HypothesisId::t26_5n2,
};

// Stable CLI ids: bjm-2n3, c12, c13, t24-smd, t25-min, t26-5n2.
const char* to_string(HypothesisId h);
std::optional<HypothesisId> parse_hypothesis(std::string_view id);

enum class HypothesisStatus {
    satisfied,      // every scoped pair passes the inequality test
    violated,       // some scoped pair fails; the first one is reported
    not_applicable, // a structural precondition fails; sweeps skip these
};

const char* to_string(HypothesisStatus s);

struct HypothesisOutcome {
    HypothesisStatus status = HypothesisStatus::satisfied;
    std::optional<PairClassification> violator; // set iff status == violated
    std::string reason;                         // set iff status == not_applicable
};

// Premise evaluation against precomputed facts, letting sweeps share one
// strongness / classification / recognition pass across all six conditions.
HypothesisOutcome evaluate_hypothesis(const std::vector<PairClassification>& pairs, int order, bool strong,
                                      bool semicomplete_multipartite, HypothesisId h);

// Evaluates one premise from scratch. Strongness is part of every premise
// and is checked first; a vacuous scope counts as satisfied.
HypothesisOutcome hypothesis_holds(const Digraph& d, HypothesisId h);

// All six premises from one classification pass, in kAllHypotheses order.
std::array<HypothesisOutcome, 6> evaluate_all_hypotheses(const Digraph& d);

// Slack of the worst scoped pair against each bound. A negative margin
// means some pair sits below the threshold; `worst` attains the minimum.
// Rows follow kAllHypotheses order plus a final weakened variant of the
// doubled bound (5n-13 instead of 5n-11) that is exactly attained by the
// generated family. Pure pair arithmetic; strongness is not required.
struct MarginRow {
    std::string label;      // hypothesis id, or "t26-5n2-weak"
    bool applicable = true; // false: structural precondition failed
    bool vacuous = true;    // no pairs in scope
    int margin = 0;
    std::optional<PairClassification> worst;
};

struct SharpnessReport {
    int order = 0;
    std::vector<MarginRow> rows;
};

SharpnessReport sharpness_audit(const Digraph& d);

} // namespace seu
