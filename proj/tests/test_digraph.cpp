#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seu/digraph.hpp"
#include "seu/enumerate.hpp"
#include "seu/errors.hpp"
#include "seu/rng.hpp"

using namespace seu;
using test::complete_digraph;
using test::dicycle;
using test::for_each_digraph;

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Digraph(-1), input_error);
    CHECK_THROWS_AS(Digraph(kMaxOrder + 1), input_error);
    CHECK_NOTHROW(Digraph{kMaxOrder});
    CHECK(Digraph().order() == 0);

    Digraph d(3);
    d.add_arc(0, 1);
    CHECK_THROWS_AS(d.add_arc(0, 1), input_error); // duplicate
    CHECK_THROWS_AS(d.add_arc(2, 2), input_error); // loop
    CHECK_THROWS_AS(d.add_arc(0, 3), input_error); // out of range
    CHECK_THROWS_AS(d.add_arc(-1, 0), input_error);
    CHECK(d.arc_count() == 1);

    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 1}, {0, 1}}), input_error);
}

TEST_CASE("degree bookkeeping matches the arc list") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Digraph d = random_digraph(6, 0.5, rng);
        const auto arcs = d.arcs();
        int total = 0;
        for (int v = 0; v < d.order(); ++v) {
            int in = 0, out = 0;
            for (const auto& [a, b] : arcs) {
                in += b == v;
                out += a == v;
            }
            const DegreeRecord rec = d.degree(v);
            CHECK(rec.in_deg == in);
            CHECK(rec.out_deg == out);
            CHECK(rec.total() == in + out);
            total += rec.total();
        }
        CHECK(total == 2 * d.arc_count());
        CHECK(std::is_sorted(arcs.begin(), arcs.end()));
        CHECK(Digraph::from_arcs(d.order(), arcs) == d);
    }
}

TEST_CASE("masks agree with has_arc") {
    SplitMix64 rng(7);
    const Digraph d = random_digraph(7, 0.4, rng);
    for (int a = 0; a < d.order(); ++a)
        for (int b = 0; b < d.order(); ++b) {
            CHECK(((d.out_mask(a) >> b) & 1u) == (d.has_arc(a, b) ? 1u : 0u));
            CHECK(((d.in_mask(b) >> a) & 1u) == (d.has_arc(a, b) ? 1u : 0u));
        }
    CHECK(d.vertex_mask() == 0x7fu);
}

TEST_CASE("degree_toward counts only arcs meeting the member set") {
    // 0->1, 1->2, 2->0, 0->2
    const Digraph d = Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    const DegreeRecord r = d.degree_toward(2, 0b011u); // members {0,1}
    CHECK(r.in_deg == 2);  // 0->2, 1->2
    CHECK(r.out_deg == 1); // 2->0
    // v in the member set contributes nothing extra (no loops exist)
    const DegreeRecord with_self = d.degree_toward(2, 0b111u);
    CHECK(with_self == r);
    CHECK(d.degree_toward(2, std::vector<int>{0, 1}) == r);
}

TEST_CASE("pair codes round trip") {
    for (int n = 1; n <= 4; ++n) {
        for_each_digraph(n, [&](const Digraph& d) {
            CHECK(Digraph::from_pair_code(n, d.pair_code()) == d);
        });
        CHECK(test::code_count(n) == (1ull << (2 * pair_count(n))));
    }
    // digit semantics: pair (0,1) is the first base-4 digit
    CHECK(Digraph::from_pair_code(2, 1).has_arc(0, 1));
    CHECK_FALSE(Digraph::from_pair_code(2, 1).has_arc(1, 0));
    CHECK(Digraph::from_pair_code(2, 2).has_arc(1, 0));
    CHECK(Digraph::from_pair_code(2, 3).arc_count() == 2);
}

TEST_CASE("relabelling preserves structure") {
    const Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const std::vector<int> perm{2, 0, 3, 1};
    const Digraph r = d.relabelled(perm);
    CHECK(r.arc_count() == d.arc_count());
    CHECK(r.has_arc(2, 0)); // image of 0->1
    CHECK(is_strong(r) == is_strong(d));
    const std::vector<int> identity{0, 1, 2, 3};
    CHECK(d.relabelled(identity) == d);
    CHECK_THROWS_AS(d.relabelled({0, 1}), input_error);
}

TEST_CASE("strong connectivity basics") {
    CHECK(is_strong(Digraph(1)));
    for (int n = 2; n <= 6; ++n) CHECK(is_strong(dicycle(n)));
    const Digraph path = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_strong(path));
    CHECK_FALSE(is_strong(Digraph(2)));
    const Digraph two_cycles = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    CHECK_FALSE(is_strong(two_cycles));
}

TEST_CASE("strong digraph counts by order") {
    const std::uint64_t expected[] = {1, 18, 1606};
    for (int n = 2; n <= 4; ++n) {
        std::uint64_t count = 0;
        for_each_digraph(n, [&](const Digraph& d) { count += is_strong(d); });
        CHECK(count == expected[n - 2]);
    }
}

TEST_CASE("strong components partition the vertex set") {
    // two 2-cycles bridged by 1->2, plus a sink 4
    const Digraph d = Digraph::from_arcs(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {3, 4}});
    auto comps = strong_components(d);
    std::set<std::set<int>> got;
    std::set<int> seen;
    for (auto& c : comps) {
        got.insert(std::set<int>(c.begin(), c.end()));
        for (int v : c) CHECK(seen.insert(v).second); // no vertex twice
    }
    CHECK(seen.size() == 5);
    CHECK(got == std::set<std::set<int>>{{0, 1}, {2, 3}, {4}});
    CHECK(strong_components(dicycle(4)).size() == 1);
}

TEST_CASE("nonadjacent pair listing") {
    CHECK(nonadjacent_pairs(complete_digraph(4)).empty());
    const auto all = nonadjacent_pairs(Digraph(3));
    CHECK(all == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    const Digraph d = Digraph::from_arcs(3, {{0, 1}});
    CHECK(nonadjacent_pairs(d) == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}

namespace {

// Definition-level check: no triple with a,b adjacent while both are
// nonadjacent to c.
bool smd_by_definition(const Digraph& d) {
    const int n = d.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (d.adjacent(a, b) && !d.adjacent(a, c) && !d.adjacent(b, c)) return false;
            }
    return true;
}

} // namespace

TEST_CASE("semicomplete multipartite recognition matches the definition") {
    const std::uint64_t expected[] = {1, 4, 55, 2539};
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t count = 0;
        for_each_digraph(n, [&](const Digraph& d) {
            const SmdResult res = recognize_semicomplete_multipartite(d);
            const bool accepted = std::holds_alternative<PartitionCertificate>(res);
            CHECK(accepted == smd_by_definition(d));
            if (accepted) {
                ++count;
                const auto& classes = std::get<PartitionCertificate>(res).classes;
                // classes ordered by smallest member and reconstruct nonadjacency
                int prev = -1;
                std::vector<int> cls_of(static_cast<std::size_t>(n), -1);
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    CHECK(classes[i].front() > prev);
                    prev = classes[i].front();
                    for (int v : classes[i]) cls_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
                }
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        CHECK((cls_of[static_cast<std::size_t>(a)] == cls_of[static_cast<std::size_t>(b)]) ==
                              !d.adjacent(a, b));
            } else {
                const auto& w = std::get<SmdWitness>(res);
                CHECK(d.adjacent(w.a, w.b));
                CHECK_FALSE(d.adjacent(w.a, w.c));
                CHECK_FALSE(d.adjacent(w.b, w.c));
            }
        });
        CHECK(count == expected[n - 1]);
    }
}
