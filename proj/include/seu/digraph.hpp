#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "seu/errors.hpp"

namespace seu {

// Hard cap on the vertex count of the dense representation: neighbourhoods
// are 32-bit masks. All supported workflows stay far below this (deciders
// guard at 16, exhaustive enumeration at 5).
inline constexpr int kMaxOrder = 31;

struct DegreeRecord {
    int in_deg = 0;
    int out_deg = 0;
    int total() const { return in_deg + out_deg; }
    friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

// Loopless simple digraph on vertices 0..n-1. No parallel arcs in the same
// direction; opposite arcs between a pair are allowed. Stored densely as
// per-vertex in/out neighbourhood bitmasks. Values are immutable once built
// (add_arc is for construction) and safe to share between threads.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    int arc_count() const { return m_; }
    std::uint32_t vertex_mask() const { return n_ == 0 ? 0u : (~0u >> (32 - n_)); }

    bool has_arc(int tail, int head) const {
        check_vertex(tail);
        check_vertex(head);
        return (out_[static_cast<std::size_t>(tail)] >> head) & 1u;
    }
    bool adjacent(int a, int b) const { return has_arc(a, b) || has_arc(b, a); }

    // Construction only. Rejects loops, duplicates and out-of-range vertices.
    void add_arc(int tail, int head);

    std::uint32_t out_mask(int v) const {
        check_vertex(v);
        return out_[static_cast<std::size_t>(v)];
    }
    std::uint32_t in_mask(int v) const {
        check_vertex(v);
        return in_[static_cast<std::size_t>(v)];
    }

    DegreeRecord degree(int v) const;
    // Arcs between v and the members of S only. v itself may lie in S;
    // loops cannot occur so the self bit never counts.
    DegreeRecord degree_toward(int v, std::uint32_t members) const;
    DegreeRecord degree_toward(int v, const std::vector<int>& members) const;

    // All arcs in lexicographic (tail, head) order. This ordering is the
    // canonical arc indexing used by ArcSubset masks and the deciders.
    std::vector<std::pair<int, int>> arcs() const;

    // Base-4 encoding over unordered pairs (i<j) in lexicographic order:
    // digit 0 = no arc, 1 = i->j, 2 = j->i, 3 = both. Two bits per pair,
    // pair p occupies bits [2p, 2p+2). Requires order <= 8 (64-bit code).
    std::uint64_t pair_code() const;
    static Digraph from_pair_code(int n, std::uint64_t code);

    // Relabel vertex v as perm[v].
    Digraph relabelled(const std::vector<int>& perm) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }

    int n_ = 0;
    int m_ = 0;
    std::array<std::uint32_t, kMaxOrder> out_{};
    std::array<std::uint32_t, kMaxOrder> in_{};
};

inline std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

// True iff every vertex is reachable from every other. n == 1 is strong.
bool is_strong(const Digraph& d);

// Tarjan decomposition; components in reverse topological order, vertices
// ascending within each component.
std::vector<std::vector<int>> strong_components(const Digraph& d);

// All unordered pairs {u,v} with no arc in either direction, u < v, lex order.
std::vector<std::pair<int, int>> nonadjacent_pairs(const Digraph& d);

// Partite classes of a semicomplete multipartite digraph: two vertices share
// a class iff they are nonadjacent. Classes ordered by smallest member.
struct PartitionCertificate {
    std::vector<std::vector<int>> classes;
    friend bool operator==(const PartitionCertificate&, const PartitionCertificate&) = default;
};

// Witness that nonadjacency is not transitive: a,c nonadjacent and b,c
// nonadjacent but a,b adjacent.
struct SmdWitness {
    int a = -1, b = -1, c = -1;
    friend bool operator==(const SmdWitness&, const SmdWitness&) = default;
};

using SmdResult = std::variant<PartitionCertificate, SmdWitness>;

// Decides whether d is a biorientation of a complete multipartite graph,
// i.e. whether nonadjacency (plus reflexivity) is an equivalence relation.
// Returns the partite classes on success, the first witness triple otherwise.
SmdResult recognize_semicomplete_multipartite(const Digraph& d);

inline bool is_semicomplete_multipartite(const Digraph& d) {
    return std::holds_alternative<PartitionCertificate>(recognize_semicomplete_multipartite(d));
}

} // namespace seu
