#include "seu/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <vector>

#include "seu/errors.hpp"

namespace seu {

std::string PopulationSpec::describe() const {
    std::string s = "mode=";
    s += mode == PopulationMode::exhaustive ? "exhaustive" : "random";
    s += " n=" + std::to_string(n);
    if (mode == PopulationMode::random) {
        char density_text[32];
        std::snprintf(density_text, sizeof density_text, "%g", density);
        s += " count=" + std::to_string(count);
        s += " seed=" + std::to_string(seed);
        s += " density=";
        s += density_text;
    }
    s += " strong_only=";
    s += strong_only ? '1' : '0';
    s += " smd_only=";
    s += smd_only ? '1' : '0';
    s += " canonical_only=";
    s += canonical_only ? '1' : '0';
    return s;
}

void validate(const PopulationSpec& spec, const EnumerationGuards& guards) {
    if (spec.n < 1) throw input_error("population order must be at least 1");
    if (spec.mode == PopulationMode::exhaustive) {
        if (spec.n > guards.max_exhaustive_order)
            throw guard_refusal("exhaustive enumeration at n=" + std::to_string(spec.n) + " exceeds the guard n<=" +
                                std::to_string(guards.max_exhaustive_order) +
                                " (4^(n(n-1)/2) members); use random mode or raise the guard");
        if (spec.n > 8) throw guard_refusal("pair codes support n<=8");
    } else {
        if (spec.n > guards.max_random_order)
            throw guard_refusal("random population order " + std::to_string(spec.n) + " exceeds the guard n<=" +
                                std::to_string(guards.max_random_order));
        if (spec.count < 1) throw input_error("random mode requires count >= 1");
        if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw input_error("density must lie in [0,1]");
        if (spec.canonical_only) throw input_error("the canonical filter applies to exhaustive mode only");
    }
}

std::uint64_t population_size(const PopulationSpec& spec) {
    if (spec.mode == PopulationMode::random) return spec.count;
    return 1ull << (2 * pair_count(spec.n));
}

Digraph population_member(const PopulationSpec& spec, std::uint64_t index) {
    if (index >= population_size(spec)) throw input_error("population index out of range");
    if (spec.mode == PopulationMode::exhaustive) return Digraph::from_pair_code(spec.n, index);
    SplitMix64 rng(mix_seed(spec.seed, index));
    return random_digraph(spec.n, spec.density, rng);
}

bool passes_filters(const PopulationSpec& spec, const Digraph& d) {
    if (spec.strong_only && !is_strong(d)) return false;
    if (spec.smd_only && !is_semicomplete_multipartite(d)) return false;
    if (spec.canonical_only && !is_canonical(d)) return false;
    return true;
}

std::uint64_t canonical_code(const Digraph& d) {
    std::vector<int> perm(d.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = d.pair_code();
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, d.relabelled(perm).pair_code());
    return best;
}

bool is_canonical(const Digraph& d) { return d.pair_code() == canonical_code(d); }

Digraph random_digraph(int n, double density, SplitMix64& rng) {
    Digraph d(n);
    for (int tail = 0; tail < n; ++tail)
        for (int head = 0; head < n; ++head) {
            if (head == tail) continue;
            if (rng.chance(density)) d.add_arc(tail, head);
        }
    return d;
}

std::uint64_t stable_hash(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace seu
