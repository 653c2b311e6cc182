#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seu/digraph.hpp"

namespace seu {

// An arc-distinct directed walk in a host digraph. Vertices may repeat, arcs
// may not. The empty ditrail at a single vertex is valid (length 0). The
// host digraph must outlive the ditrail.
class Ditrail {
public:
    Ditrail(const Digraph& host, int start);
    Ditrail(const Digraph& host, std::vector<std::pair<int, int>> arc_sequence);

    const Digraph& host() const { return *host_; }
    int initial() const { return start_; }
    int terminal() const { return arcs_.empty() ? start_ : arcs_.back().second; }
    int length() const { return static_cast<int>(arcs_.size()); }
    bool closed() const { return initial() == terminal(); }
    const std::vector<std::pair<int, int>>& arc_sequence() const { return arcs_; }

    // Walk as vertices, length()+1 entries (a single entry when empty).
    std::vector<int> vertex_sequence() const;
    std::uint32_t vertex_set() const;
    int vertex_count() const;

    // Sub-ditrail between walk positions i and j, 0 <= i <= j <= length().
    Ditrail slice(int i, int j) const;

    // "v0 -> v1 -> ... -> vk"
    std::string to_string() const;

private:
    const Digraph* host_;
    int start_;
    std::vector<std::pair<int, int>> arcs_;
};

// A selectable subset of a host digraph's arcs. Bit i of the mask refers to
// arc i in the host's lexicographic arc order; hosts are limited to 64 arcs.
// The host must outlive the subset.
struct ArcSubset {
    ArcSubset(const Digraph& host, std::uint64_t mask);
    static ArcSubset from_arcs(const Digraph& host, const std::vector<std::pair<int, int>>& arcs);

    int count() const;
    std::vector<std::pair<int, int>> arcs() const;

    const Digraph* host;
    std::uint64_t mask;

    friend bool operator==(const ArcSubset&, const ArcSubset&) = default;
};

// True iff (V(host), F) is a spanning eulerian subdigraph: every vertex
// balanced (in-degree = out-degree), every vertex covered, and one weak
// component. Equivalently, a closed ditrail through all vertices. On a
// single-vertex digraph the empty subset qualifies (the length-0 closed
// ditrail).
bool is_spanning_eulerian(const Digraph& d, const ArcSubset& f);

// Closed vertex sequence using every selected arc exactly once, starting at
// the smallest covered vertex. Requires is_spanning_eulerian(d, f).
std::vector<int> eulerian_circuit(const Digraph& d, const ArcSubset& f);

// Searches for an (a,b)-ditrail whose vertex set is exactly the given set.
// Returns a witness trail, or nullopt when none exists. Requires a, b in the
// set. Depth-first over arc-distinct walks in the induced subdigraph with a
// residual-reachability bound; worst case exponential (callers stay small).
std::optional<Ditrail> find_ditrail_with_vertex_set(const Digraph& d, int a, int b, std::uint32_t vertex_set);

inline bool exists_ditrail_with_vertex_set(const Digraph& d, int a, int b, std::uint32_t vertex_set) {
    return find_ditrail_with_vertex_set(d, a, b, vertex_set).has_value();
}

// Outcome of one executable implication check. `holds` false means the
// implication failed, which for the proved statements below indicates an
// engine bug; the intermediate numbers make the failure auditable.
struct CheckerOutcome {
    bool holds = true;
    bool premise_trail_exists = false; // the required ditrail exists, implication vacuous
    int lhs = 0;                       // degree expression
    int rhs = 0;                       // |V(S)|
    std::string witness;               // human-readable description when violated
};

// For arc-disjoint ditrails S (from u1 to us) and T (from v1 to vt) of d:
// if d has no (u1,us)-ditrail with vertex set V(S) u V(T), then the in-degree
// of v1 toward V(S) plus the out-degree of vt toward V(S) is at most |V(S)|.
// Arc overlap or foreign hosts are input errors, not violations.
CheckerOutcome check_lemma_notST(const Digraph& d, const Ditrail& s, const Ditrail& t);

// Single-vertex specialization: if d has no (u1,us)-ditrail with vertex set
// V(S) u {x}, then the degree of x toward V(S) is at most |V(S)|.
CheckerOutcome check_corollary_notSx(const Digraph& d, const Ditrail& s, int x);

struct SmdLemmaOutcome {
    bool holds = true;
    int u = -1, v = -1, w = -1; // violating triple when !holds
};

// For a semicomplete multipartite digraph: every third vertex w has an arc
// to or from at least one endpoint of every adjacent pair {u,v}. Requires
// the recognizer to accept d (input error otherwise).
SmdLemmaOutcome check_smd_lemma(const Digraph& d);

} // namespace seu
