#include "seu/trail.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace seu {

Ditrail::Ditrail(const Digraph& host, int start) : host_(&host), start_(start) {
    if (start < 0 || start >= host.order())
        throw input_error("ditrail start vertex " + std::to_string(start) + " out of range");
}

Ditrail::Ditrail(const Digraph& host, std::vector<std::pair<int, int>> arc_sequence)
    : host_(&host), start_(0), arcs_(std::move(arc_sequence)) {
    if (arcs_.empty()) throw input_error("empty arc sequence: construct the single-vertex ditrail with a start vertex");
    std::set<std::pair<int, int>> seen;
    int at = arcs_.front().first;
    start_ = at;
    for (const auto& arc : arcs_) {
        if (!host.has_arc(arc.first, arc.second))
            throw input_error("ditrail uses arc " + std::to_string(arc.first) + "->" + std::to_string(arc.second) +
                              " absent from the host digraph");
        if (arc.first != at) throw input_error("ditrail arcs are not head-to-tail consecutive");
        if (!seen.insert(arc).second)
            throw input_error("ditrail repeats arc " + std::to_string(arc.first) + "->" + std::to_string(arc.second));
        at = arc.second;
    }
}

std::vector<int> Ditrail::vertex_sequence() const {
    std::vector<int> seq{start_};
    seq.reserve(arcs_.size() + 1);
    for (const auto& arc : arcs_) seq.push_back(arc.second);
    return seq;
}

std::uint32_t Ditrail::vertex_set() const {
    std::uint32_t mask = 1u << start_;
    for (const auto& arc : arcs_) mask |= 1u << arc.second;
    return mask;
}

int Ditrail::vertex_count() const { return std::popcount(vertex_set()); }

Ditrail Ditrail::slice(int i, int j) const {
    if (i < 0 || j < i || j > length()) throw input_error("ditrail slice positions out of range");
    if (i == j) return Ditrail(*host_, vertex_sequence()[static_cast<std::size_t>(i)]);
    return Ditrail(*host_, std::vector<std::pair<int, int>>(arcs_.begin() + i, arcs_.begin() + j));
}

std::string Ditrail::to_string() const {
    std::string out;
    for (int v : vertex_sequence()) {
        if (!out.empty()) out += " -> ";
        out += std::to_string(v);
    }
    return out;
}

ArcSubset::ArcSubset(const Digraph& h, std::uint64_t m) : host(&h), mask(m) {
    if (h.arc_count() > 64)
        throw guard_refusal("arc subsets support hosts with at most 64 arcs, got m=" + std::to_string(h.arc_count()));
    if (h.arc_count() < 64 && (m >> h.arc_count()) != 0)
        throw input_error("arc subset mask has bits beyond the host's arc count");
}

ArcSubset ArcSubset::from_arcs(const Digraph& host, const std::vector<std::pair<int, int>>& selected) {
    const auto all = host.arcs();
    std::uint64_t mask = 0;
    for (const auto& arc : selected) {
        const auto it = std::find(all.begin(), all.end(), arc);
        if (it == all.end())
            throw input_error("arc " + std::to_string(arc.first) + "->" + std::to_string(arc.second) +
                              " absent from the host digraph");
        mask |= 1ull << (it - all.begin());
    }
    return ArcSubset(host, mask);
}

int ArcSubset::count() const { return std::popcount(mask); }

std::vector<std::pair<int, int>> ArcSubset::arcs() const {
    const auto all = host->arcs();
    std::vector<std::pair<int, int>> result;
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1ull) result.push_back(all[i]);
    return result;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    int components;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
};

} // namespace

bool is_spanning_eulerian(const Digraph& d, const ArcSubset& f) {
    if (f.host != &d) throw input_error("arc subset belongs to a different digraph");
    const int n = d.order();
    if (n == 1) return true; // the length-0 closed ditrail covers the single vertex
    const auto arcs = d.arcs();
    std::vector<int> in(static_cast<std::size_t>(n), 0), out(static_cast<std::size_t>(n), 0);
    Dsu dsu(n);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (((f.mask >> i) & 1ull) == 0) continue;
        ++out[static_cast<std::size_t>(arcs[i].first)];
        ++in[static_cast<std::size_t>(arcs[i].second)];
        dsu.unite(arcs[i].first, arcs[i].second);
    }
    for (int v = 0; v < n; ++v)
        if (in[static_cast<std::size_t>(v)] != out[static_cast<std::size_t>(v)] || in[static_cast<std::size_t>(v)] == 0)
            return false;
    return dsu.components == 1;
}

std::vector<int> eulerian_circuit(const Digraph& d, const ArcSubset& f) {
    if (!is_spanning_eulerian(d, f)) throw input_error("arc subset is not a spanning eulerian subdigraph");
    if (d.order() == 1) return {0};
    const auto arcs = d.arcs();
    // successor lists in lex order, consumed front to back
    std::vector<std::vector<int>> next(static_cast<std::size_t>(d.order()));
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if ((f.mask >> i) & 1ull) next[static_cast<std::size_t>(arcs[i].first)].push_back(arcs[i].second);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(d.order()), 0);

    std::vector<int> stack{0}, circuit;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& c = cursor[static_cast<std::size_t>(v)];
        if (c < next[static_cast<std::size_t>(v)].size()) {
            stack.push_back(next[static_cast<std::size_t>(v)][c++]);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

namespace {

// Search context for find_ditrail_with_vertex_set. Arcs are re-indexed
// locally over the induced subdigraph, so the used-arc mask always fits.
struct TrailSearch {
    int target;
    std::uint32_t want;                        // required vertex set
    std::vector<std::pair<int, int>> arcs;     // induced arcs, lex order
    std::vector<std::vector<int>> out_arcs;    // arc indices by tail
    std::vector<std::uint32_t> avail_heads;    // heads of unused arcs by tail
    std::uint64_t used = 0;
    std::uint32_t visited = 0;
    std::vector<int> walk;                     // arc indices taken

    bool run(int at) {
        if (at == target && visited == want) return true;
        // Every still-missing vertex, and the target, must be reachable
        // through unused arcs from here.
        std::uint32_t reach = 1u << at;
        std::uint32_t frontier = reach;
        while (frontier != 0) {
            std::uint32_t grown = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1)
                grown |= avail_heads[static_cast<std::size_t>(std::countr_zero(f))];
            frontier = grown & ~reach;
            reach |= grown;
        }
        if ((want & ~visited & ~reach) != 0) return false;
        if (((reach >> target) & 1u) == 0) return false;

        for (int idx : out_arcs[static_cast<std::size_t>(at)]) {
            if ((used >> idx) & 1ull) continue;
            const int head = arcs[static_cast<std::size_t>(idx)].second;
            used |= 1ull << idx;
            avail_heads[static_cast<std::size_t>(at)] = recompute_avail(at);
            const std::uint32_t prev_visited = visited;
            visited |= 1u << head;
            walk.push_back(idx);
            if (run(head)) return true;
            walk.pop_back();
            visited = prev_visited;
            used &= ~(1ull << idx);
            avail_heads[static_cast<std::size_t>(at)] = recompute_avail(at);
        }
        return false;
    }

    std::uint32_t recompute_avail(int tail) {
        std::uint32_t heads = 0;
        for (int idx : out_arcs[static_cast<std::size_t>(tail)])
            if (((used >> idx) & 1ull) == 0) heads |= 1u << arcs[static_cast<std::size_t>(idx)].second;
        return heads;
    }
};

} // namespace

std::optional<Ditrail> find_ditrail_with_vertex_set(const Digraph& d, int a, int b, std::uint32_t vertex_set) {
    if ((vertex_set & ~d.vertex_mask()) != 0) throw input_error("vertex set contains vertices out of range");
    if (a < 0 || a >= d.order() || ((vertex_set >> a) & 1u) == 0)
        throw input_error("initial vertex must belong to the vertex set");
    if (b < 0 || b >= d.order() || ((vertex_set >> b) & 1u) == 0)
        throw input_error("terminal vertex must belong to the vertex set");

    if (vertex_set == (1u << a) && a == b) return Ditrail(d, a); // length-0 convention

    TrailSearch search;
    search.target = b;
    search.want = vertex_set;
    search.out_arcs.resize(static_cast<std::size_t>(d.order()));
    search.avail_heads.resize(static_cast<std::size_t>(d.order()), 0);
    for (const auto& [t, h] : d.arcs()) {
        if (((vertex_set >> t) & 1u) == 0 || ((vertex_set >> h) & 1u) == 0) continue;
        const int idx = static_cast<int>(search.arcs.size());
        search.arcs.emplace_back(t, h);
        search.out_arcs[static_cast<std::size_t>(t)].push_back(idx);
        search.avail_heads[static_cast<std::size_t>(t)] |= 1u << h;
    }
    search.visited = 1u << a;
    if (!search.run(a)) return std::nullopt;

    std::vector<std::pair<int, int>> seq;
    seq.reserve(search.walk.size());
    for (int idx : search.walk) seq.push_back(search.arcs[static_cast<std::size_t>(idx)]);
    if (seq.empty()) return Ditrail(d, a);
    return Ditrail(d, std::move(seq));
}

namespace {

void require_same_host(const Digraph& d, const Ditrail& t, const char* name) {
    if (&t.host() != &d) throw input_error(std::string(name) + " belongs to a different digraph");
}

CheckerOutcome evaluate_not_implication(const Digraph& d, const Ditrail& s, std::uint32_t joint_set, int lhs,
                                        const std::string& witness_prefix) {
    CheckerOutcome outcome;
    outcome.premise_trail_exists = exists_ditrail_with_vertex_set(d, s.initial(), s.terminal(), joint_set);
    outcome.lhs = lhs;
    outcome.rhs = s.vertex_count();
    outcome.holds = outcome.premise_trail_exists || outcome.lhs <= outcome.rhs;
    if (!outcome.holds)
        outcome.witness = witness_prefix + ": no ditrail with the joint vertex set, yet degree sum " +
                          std::to_string(outcome.lhs) + " exceeds |V(S)| = " + std::to_string(outcome.rhs);
    return outcome;
}

} // namespace

CheckerOutcome check_lemma_notST(const Digraph& d, const Ditrail& s, const Ditrail& t) {
    require_same_host(d, s, "ditrail S");
    require_same_host(d, t, "ditrail T");
    for (const auto& arc : s.arc_sequence())
        for (const auto& other : t.arc_sequence())
            if (arc == other)
                throw input_error("ditrails share arc " + std::to_string(arc.first) + "->" + std::to_string(arc.second));

    const int lhs = d.degree_toward(t.initial(), s.vertex_set()).in_deg +
                    d.degree_toward(t.terminal(), s.vertex_set()).out_deg;
    return evaluate_not_implication(d, s, s.vertex_set() | t.vertex_set(), lhs,
                                    "S=" + s.to_string() + " T=" + t.to_string());
}

CheckerOutcome check_corollary_notSx(const Digraph& d, const Ditrail& s, int x) {
    require_same_host(d, s, "ditrail S");
    if (x < 0 || x >= d.order()) throw input_error("vertex x out of range");
    const int lhs = d.degree_toward(x, s.vertex_set()).total();
    return evaluate_not_implication(d, s, s.vertex_set() | (1u << x), lhs,
                                    "S=" + s.to_string() + " x=" + std::to_string(x));
}

SmdLemmaOutcome check_smd_lemma(const Digraph& d) {
    if (!is_semicomplete_multipartite(d))
        throw input_error("digraph is not semicomplete multipartite");
    const int n = d.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!d.adjacent(u, v)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (!d.adjacent(w, u) && !d.adjacent(w, v)) return {false, u, v, w};
            }
        }
    return {};
}

} // namespace seu
