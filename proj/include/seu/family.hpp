#pragma once

#include <string>
#include <vector>

#include "seu/decide.hpp"
#include "seu/digraph.hpp"

namespace seu {

// Parameters of the two-block construction: a complete block of n1
// vertices, a complete block of n2 vertices, and the special pair {u,v},
// giving order n = n1 + n2 + 2.
struct FamilyParams {
    int n1 = 1;
    int n2 = 1;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Generated instance with role metadata. Vertex layout: u = 0, v = 1,
// block 1 occupies [2, 2+n1), block 2 occupies [2+n1, 2+n1+n2). w' is the
// first vertex of block 1 and w the first vertex of block 2; (w',w) is the
// only arc entering block 2 from outside.
struct FamilyInstance {
    FamilyParams params;
    Digraph digraph;
    int u = 0;
    int v = 1;
    int w_prime = 2;
    int w = 3;
    std::vector<int> block1, block2;

    std::uint32_t block1_mask() const;
    std::uint32_t block2_mask() const;
    // "u", "v", "w'", "b1_1", ..., "w", "b2_1", ... (for DOT export)
    std::vector<std::string> vertex_labels() const;
};

// Arcs: both directions inside each block; (w',w); every block-2 vertex to
// every vertex of {u,v} and block 1; u and v to every block-1 vertex.
// Arc count: n1(n1-1) + n2(n2-1) + 1 + n2(n1+2) + 2*n1.
FamilyInstance build_family(FamilyParams p);

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string expected, actual;
};

// Outcome of auditing one instance. The doubled-degree-sum bound
// 2(d(u)+d(v)) >= 5n-13 is reported as data, not as a pass/fail check: it
// holds only for (1,1), (1,2), (2,1), with equality at the latter two.
struct FamilyAudit {
    FamilyParams params;
    int order = 0;
    int arcs = 0;
    bool all_pass = false;
    int bound_lhs = 0; // 2(d(u)+d(v))
    int bound_rhs = 0; // 5n-13
    bool bound_holds = false;
    bool bound_equality = false;
    std::vector<AuditCheck> checks;
};

// Verifies every structural property the construction is designed to
// exhibit: strongness, the not-supereulerian verdict, the unique
// nonadjacent pair {u,v} dominated by block 2 and dominating block 1, the
// degree equalities d(u) = d(v) = n-2 and mixed_min = n-2, the partition
// into {u,v} plus singletons, and the single-entry cut into block 2. When
// the instance fits the 2^m sweep, the brute-force decider is cross-checked
// as well.
FamilyAudit audit_family(FamilyParams p, const DecideLimits& limits = {});

} // namespace seu
