#include "seu/digraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace seu {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
        throw input_error("digraph order must be between 0 and " + std::to_string(kMaxOrder) +
                          ", got " + std::to_string(n));
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (const auto& [a, b] : arcs) d.add_arc(a, b);
    return d;
}

void Digraph::add_arc(int tail, int head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head)
        throw input_error("loop arc " + std::to_string(tail) + " " + std::to_string(head) + " not allowed");
    if (has_arc(tail, head))
        throw input_error("duplicate arc " + std::to_string(tail) + " " + std::to_string(head));
    out_[static_cast<std::size_t>(tail)] |= 1u << head;
    in_[static_cast<std::size_t>(head)] |= 1u << tail;
    ++m_;
}

DegreeRecord Digraph::degree(int v) const {
    check_vertex(v);
    return {std::popcount(in_[static_cast<std::size_t>(v)]), std::popcount(out_[static_cast<std::size_t>(v)])};
}

DegreeRecord Digraph::degree_toward(int v, std::uint32_t members) const {
    check_vertex(v);
    if ((members & ~vertex_mask()) != 0) throw input_error("member set contains vertices out of range");
    return {std::popcount(in_[static_cast<std::size_t>(v)] & members),
            std::popcount(out_[static_cast<std::size_t>(v)] & members)};
}

DegreeRecord Digraph::degree_toward(int v, const std::vector<int>& members) const {
    std::uint32_t mask = 0;
    for (int s : members) {
        check_vertex(s);
        mask |= 1u << s;
    }
    return degree_toward(v, mask);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(m_));
    for (int tail = 0; tail < n_; ++tail) {
        for (std::uint32_t heads = out_[static_cast<std::size_t>(tail)]; heads != 0; heads &= heads - 1)
            result.emplace_back(tail, std::countr_zero(heads));
    }
    return result;
}

std::uint64_t Digraph::pair_code() const {
    if (n_ > 8) throw guard_refusal("pair codes support order <= 8, got n=" + std::to_string(n_));
    std::uint64_t code = 0;
    int p = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++p) {
            std::uint64_t digit = 0;
            if (has_arc(i, j)) digit |= 1;
            if (has_arc(j, i)) digit |= 2;
            code |= digit << (2 * p);
        }
    }
    return code;
}

Digraph Digraph::from_pair_code(int n, std::uint64_t code) {
    if (n < 0 || n > 8) throw guard_refusal("pair codes support order <= 8, got n=" + std::to_string(n));
    if (n > 1 && (code >> (2 * pair_count(n))) != 0)
        throw input_error("pair code has digits beyond pair count for n=" + std::to_string(n));
    Digraph d(n);
    int p = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++p) {
            const auto digit = (code >> (2 * p)) & 3u;
            if (digit & 1) d.add_arc(i, j);
            if (digit & 2) d.add_arc(j, i);
        }
    }
    return d;
}

Digraph Digraph::relabelled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw input_error("permutation size does not match order");
    Digraph d(n_);
    for (const auto& [a, b] : arcs()) d.add_arc(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return d;
}

namespace {

std::uint32_t closure(const Digraph& d, int start, bool forward) {
    std::uint32_t reached = 1u << start;
    std::uint32_t frontier = reached;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            const int v = std::countr_zero(f);
            next |= forward ? d.out_mask(v) : d.in_mask(v);
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached;
}

} // namespace

bool is_strong(const Digraph& d) {
    if (d.order() < 1) throw input_error("is_strong requires at least one vertex");
    if (d.order() == 1) return true;
    const std::uint32_t all = d.vertex_mask();
    return closure(d, 0, true) == all && closure(d, 0, false) == all;
}

namespace {

struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low, stack_pos, stack;
    int next_index = 0;
    std::vector<std::vector<int>> components;

    explicit TarjanState(const Digraph& dd)
        : d(dd), index(static_cast<std::size_t>(dd.order()), -1), low(static_cast<std::size_t>(dd.order()), -1),
          stack_pos(static_cast<std::size_t>(dd.order()), -1) {}

    void visit(int v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
        stack_pos[static_cast<std::size_t>(v)] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (std::uint32_t succ = d.out_mask(v); succ != 0; succ &= succ - 1) {
            const int w = std::countr_zero(succ);
            if (index[static_cast<std::size_t>(w)] == -1) {
                visit(w);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (stack_pos[static_cast<std::size_t>(w)] != -1) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            const int cut = stack_pos[static_cast<std::size_t>(v)];
            std::vector<int> comp(stack.begin() + cut, stack.end());
            for (int w : comp) stack_pos[static_cast<std::size_t>(w)] = -1;
            stack.resize(static_cast<std::size_t>(cut));
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
};

} // namespace

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    TarjanState state(d);
    for (int v = 0; v < d.order(); ++v)
        if (state.index[static_cast<std::size_t>(v)] == -1) state.visit(v);
    std::reverse(state.components.begin(), state.components.end());
    return state.components;
}

std::vector<std::pair<int, int>> nonadjacent_pairs(const Digraph& d) {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (!d.adjacent(u, v)) result.emplace_back(u, v);
    return result;
}

SmdResult recognize_semicomplete_multipartite(const Digraph& d) {
    const int n = d.order();
    const std::uint32_t all = d.vertex_mask();
    std::vector<std::uint32_t> nonadj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        nonadj[static_cast<std::size_t>(v)] = all & ~(d.out_mask(v) | d.in_mask(v)) & ~(1u << v);

    // Transitivity scan: two vertices nonadjacent to a common c must be
    // nonadjacent to each other.
    for (int c = 0; c < n; ++c) {
        const std::uint32_t m = nonadj[static_cast<std::size_t>(c)];
        for (std::uint32_t ai = m; ai != 0; ai &= ai - 1) {
            const int a = std::countr_zero(ai);
            for (std::uint32_t bi = ai & (ai - 1); bi != 0; bi &= bi - 1) {
                const int b = std::countr_zero(bi);
                if (((nonadj[static_cast<std::size_t>(a)] >> b) & 1u) == 0) return SmdWitness{a, b, c};
            }
        }
    }

    PartitionCertificate cert;
    std::uint32_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1u) continue;
        const std::uint32_t cls = nonadj[static_cast<std::size_t>(v)] | (1u << v);
        seen |= cls;
        std::vector<int> members;
        for (std::uint32_t m = cls; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
        cert.classes.push_back(std::move(members));
    }
    return cert;
}

} // namespace seu
