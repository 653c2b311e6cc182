#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seu/digraph.hpp"
#include "seu/family.hpp"
#include "seu/hypotheses.hpp"

using namespace seu;
using test::complete_digraph;
using test::dicycle;

TEST_CASE("hypothesis ids round trip") {
    for (const HypothesisId h : kAllHypotheses) {
        const auto parsed = parse_hypothesis(to_string(h));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == h);
    }
    CHECK_FALSE(parse_hypothesis("bjm").has_value());
    CHECK_FALSE(parse_hypothesis("").has_value());
}

TEST_CASE("pair classification on the witness family") {
    for (const FamilyParams p : {FamilyParams{1, 1}, FamilyParams{2, 3}}) {
        const FamilyInstance inst = build_family(p);
        const int n = inst.digraph.order();
        const auto pairs = classify_pairs(inst.digraph);
        REQUIRE(pairs.size() == 1); // {u,v} is the only nonadjacent pair
        const PairClassification& uv = pairs.front();
        CHECK(uv.u == inst.u);
        CHECK(uv.v == inst.v);
        CHECK(uv.degree_sum == 2 * n - 4);
        CHECK(uv.mixed_min == n - 2);
        CHECK(uv.dominated_by == inst.block2_mask());
        CHECK(uv.dominates == inst.block1_mask());
    }
}

// First order-4 digraph (in pair-code order) whose only scoped pair for the
// dominated-pair bound passes while a dominating-only pair fails the shared
// bound: separates the two conjecture scopes.
TEST_CASE("scope separation: dominated versus dominated-or-dominating") {
    const Digraph d = Digraph::from_pair_code(4, 123);
    REQUIRE(is_strong(d));
    const auto pairs = classify_pairs(d);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].u == 1);
    CHECK(pairs[0].v == 3);
    CHECK(pairs[0].dominated_by == 0b0001u);
    CHECK(pairs[0].degree_sum == 5);
    CHECK(pairs[1].u == 2);
    CHECK(pairs[1].v == 3);
    CHECK(pairs[1].dominated_by == 0u);
    CHECK(pairs[1].dominates == 0b0001u);
    CHECK(pairs[1].degree_sum == 4);

    CHECK(hypothesis_holds(d, HypothesisId::c12).status == HypothesisStatus::satisfied);
    const HypothesisOutcome c13 = hypothesis_holds(d, HypothesisId::c13);
    CHECK(c13.status == HypothesisStatus::violated);
    REQUIRE(c13.violator.has_value());
    CHECK(c13.violator->u == 2);
    CHECK(c13.violator->v == 3);
    const HypothesisOutcome bjm = hypothesis_holds(d, HypothesisId::bjm_2n3);
    CHECK(bjm.status == HypothesisStatus::violated);
    CHECK(bjm.violator->u == 2);
}

// First order-4 digraph where an unscoped nonadjacent pair fails the bound:
// the all-pairs hypothesis is violated while both scoped ones hold.
TEST_CASE("scope separation: all pairs versus scoped pairs") {
    const Digraph d = Digraph::from_pair_code(4, 243);
    REQUIRE(is_strong(d));
    const HypothesisOutcome bjm = hypothesis_holds(d, HypothesisId::bjm_2n3);
    CHECK(bjm.status == HypothesisStatus::violated);
    REQUIRE(bjm.violator.has_value());
    CHECK(bjm.violator->u == 2);
    CHECK(bjm.violator->v == 3);
    CHECK(bjm.violator->dominated_by == 0u);
    CHECK(bjm.violator->dominates == 0u);
    CHECK(hypothesis_holds(d, HypothesisId::c12).status == HypothesisStatus::satisfied);
    CHECK(hypothesis_holds(d, HypothesisId::c13).status == HypothesisStatus::satisfied);
}

// First order-5 digraph separating the conjunction with the mixed-degree
// floor from the plain degree bound on the same scope.
TEST_CASE("scope separation: mixed minimum conjunction") {
    const Digraph d = Digraph::from_pair_code(5, 22268);
    REQUIRE(is_strong(d));
    CHECK(hypothesis_holds(d, HypothesisId::c13).status == HypothesisStatus::satisfied);
    CHECK(hypothesis_holds(d, HypothesisId::bjm_2n3).status == HypothesisStatus::satisfied);
    const HypothesisOutcome t25 = hypothesis_holds(d, HypothesisId::t25_min);
    CHECK(t25.status == HypothesisStatus::violated);
    REQUIRE(t25.violator.has_value());
    CHECK(t25.violator->u == 2);
    CHECK(t25.violator->v == 4);
    CHECK(t25.violator->degree_sum == 7);  // bound part holds
    CHECK(t25.violator->mixed_min == 2);   // floor part fails (needs n-2 = 3)
}

TEST_CASE("structural preconditions produce not_applicable") {
    const Digraph non_strong(3);
    for (const HypothesisId h : kAllHypotheses) {
        const HypothesisOutcome out = hypothesis_holds(non_strong, h);
        CHECK(out.status == HypothesisStatus::not_applicable);
        CHECK(out.reason == "digraph is not strongly connected");
        CHECK_FALSE(out.violator.has_value());
    }

    const Digraph strong_non_smd = Digraph::from_pair_code(4, 121);
    REQUIRE(is_strong(strong_non_smd));
    const HypothesisOutcome t24 = hypothesis_holds(strong_non_smd, HypothesisId::t24_smd);
    CHECK(t24.status == HypothesisStatus::not_applicable);
    CHECK(t24.reason == "digraph is not semicomplete multipartite");

    const HypothesisOutcome t26 = hypothesis_holds(Digraph(1), HypothesisId::t26_5n2);
    CHECK(t26.status == HypothesisStatus::not_applicable);
    CHECK(t26.reason == "order below 2");
    CHECK(hypothesis_holds(Digraph(1), HypothesisId::bjm_2n3).status == HypothesisStatus::satisfied);
}

TEST_CASE("implication nesting over all small strong digraphs") {
    auto sat = [](const std::array<HypothesisOutcome, 6>& o, HypothesisId h) {
        return o[static_cast<std::size_t>(h)].status == HypothesisStatus::satisfied;
    };
    for (int n = 2; n <= 4; ++n)
        test::for_each_digraph(n, [&](const Digraph& d) {
            if (!is_strong(d)) return;
            const auto o = evaluate_all_hypotheses(d);
            if (sat(o, HypothesisId::bjm_2n3)) CHECK(sat(o, HypothesisId::c13));
            if (sat(o, HypothesisId::c13)) CHECK(sat(o, HypothesisId::c12));
            if (sat(o, HypothesisId::t25_min)) CHECK(sat(o, HypothesisId::c13));
            if (sat(o, HypothesisId::t24_smd)) CHECK(sat(o, HypothesisId::c12));
            // the doubled bound is weaker than the plain one up to order 5
            if (sat(o, HypothesisId::c13)) CHECK(sat(o, HypothesisId::t26_5n2));
        });
}

TEST_CASE("evaluate_all matches per-id evaluation") {
    for (const std::uint64_t code : {0ull, 123ull, 243ull, 1000ull, 4000ull}) {
        const Digraph d = Digraph::from_pair_code(4, code);
        const auto all = evaluate_all_hypotheses(d);
        for (std::size_t i = 0; i < kAllHypotheses.size(); ++i) {
            const HypothesisOutcome solo = hypothesis_holds(d, kAllHypotheses[i]);
            CHECK(all[i].status == solo.status);
            CHECK(all[i].violator == solo.violator);
            CHECK(all[i].reason == solo.reason);
        }
    }
}

TEST_CASE("sharpness margins on the witness family") {
    const SharpnessReport r11 = sharpness_audit(build_family({1, 1}).digraph);
    REQUIRE(r11.rows.size() == 7);
    CHECK(r11.rows[0].label == "bjm-2n3");
    CHECK(r11.rows[0].margin == -1); // degree sum one short of the theorem bound
    CHECK(r11.rows[0].worst->u == 0);
    CHECK(r11.rows[0].worst->v == 1);
    CHECK(r11.rows[6].label == "t26-5n2-weak");
    CHECK(r11.rows[6].margin == 1);

    const SharpnessReport r12 = sharpness_audit(build_family({1, 2}).digraph);
    CHECK(r12.rows[0].margin == -1);
    CHECK(r12.rows[5].label == "t26-5n2");
    CHECK(r12.rows[5].margin == -2);
    CHECK(r12.rows[6].margin == 0); // weakened bound attained exactly
    CHECK(r12.rows[4].label == "t25-min");
    CHECK(r12.rows[4].margin == -1);

    const SharpnessReport r22 = sharpness_audit(build_family({2, 2}).digraph);
    CHECK(r22.rows[6].margin == -1); // larger members fall below even the weak bound
}

TEST_CASE("sharpness applicability flags") {
    const SharpnessReport complete = sharpness_audit(complete_digraph(3));
    for (const MarginRow& row : complete.rows) {
        CHECK(row.applicable);
        CHECK(row.vacuous); // no nonadjacent pairs at all
        CHECK_FALSE(row.worst.has_value());
    }

    const SharpnessReport tiny = sharpness_audit(Digraph(1));
    CHECK_FALSE(tiny.rows[5].applicable);
    CHECK_FALSE(tiny.rows[6].applicable);
    CHECK(tiny.rows[0].applicable);

    const SharpnessReport non_smd = sharpness_audit(Digraph::from_pair_code(4, 121));
    CHECK(non_smd.rows[3].label == "t24-smd");
    CHECK_FALSE(non_smd.rows[3].applicable);
}
