#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "seu/digraph.hpp"
#include "seu/rng.hpp"

namespace seu {

enum class PopulationMode { exhaustive, random };

// A digraph population for sweeps. Exhaustive mode walks every labeled
// loopless digraph on n vertices once, one base-4 digit per unordered pair
// (none, forward, backward, both). Random mode draws `count` digraphs with
// each ordered arc present independently with probability `density`; member
// `index` is derived from (seed, index) alone, so any subrange regenerates
// without drawing predecessors.
struct PopulationSpec {
    int n = 3;
    PopulationMode mode = PopulationMode::exhaustive;
    std::uint64_t count = 0;    // random mode
    std::uint64_t seed = 0;     // random mode
    double density = 0.5;       // random mode
    bool strong_only = false;
    bool smd_only = false;      // semicomplete multipartite hosts only
    bool canonical_only = false; // exhaustive mode: minimum-code representatives

    // One-line stable form, e.g. "mode=exhaustive n=4 strong_only=1 ...";
    // feeds checkpoint fingerprints, so any semantic change must alter it.
    std::string describe() const;

    friend bool operator==(const PopulationSpec&, const PopulationSpec&) = default;
};

struct EnumerationGuards {
    int max_exhaustive_order = 5; // 4^10 members at n=5
    int max_random_order = kMaxOrder;
};

// Rejects specs outside the guards (guard refusal, with the random-mode
// suggestion for oversized exhaustive requests) or malformed (input error).
void validate(const PopulationSpec& spec, const EnumerationGuards& guards = {});

// Raw instance count before filtering: 4^C(n,2) or `count`.
std::uint64_t population_size(const PopulationSpec& spec);

// The member at a raw position, independent of any other position.
Digraph population_member(const PopulationSpec& spec, std::uint64_t index);

// Applies the spec's filters; never alters counts of raw positions.
bool passes_filters(const PopulationSpec& spec, const Digraph& d);

// Minimum pair code over all relabellings; representative-of-isomorphism-class test.
std::uint64_t canonical_code(const Digraph& d);
bool is_canonical(const Digraph& d);

// Each ordered non-loop (tail, head) slot is drawn once, in lexicographic
// order, so equal seeds give equal digraphs.
Digraph random_digraph(int n, double density, SplitMix64& rng);

// FNV-1a over bytes; used for checkpoint fingerprints.
std::uint64_t stable_hash(std::string_view text);

} // namespace seu
