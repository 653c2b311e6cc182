#pragma once

#include <cstdint>
#include <optional>

#include "seu/trail.hpp"

namespace seu {

enum class Verdict { supereulerian, not_supereulerian, not_strong_shortcut };

// Stable report strings: "supereulerian", "not_supereulerian", "not_strong_shortcut".
const char* to_string(Verdict v);

// Outcome of one decision. The certificate, when present, references the
// decided digraph and passes is_spanning_eulerian; keep the digraph alive
// while the certificate is in use.
struct Decision {
    Verdict verdict = Verdict::not_supereulerian;
    std::optional<ArcSubset> certificate; // present iff verdict == supereulerian
    std::uint64_t nodes_expanded = 0;
    double seconds = 0.0; // wall time; informational, never serialized by default
};

// Size guards for decide(). Exceeding them is a refusal, never a wrong
// answer. Arc masks cap max_arcs at 64 regardless of the configured value.
struct DecideLimits {
    int max_order = 16;
    int max_arcs = 64;
};

// Exact decision: is there an arc subset that is balanced, covers every
// vertex, and forms one weak component? Backtracks over arcs in
// lexicographic order with balance-feasibility, connectivity and
// circulation-relaxation pruning. Digraphs that are not strongly connected
// short-circuit (a spanning closed ditrail reaches every vertex from every
// vertex). A single-vertex digraph qualifies via the empty subset.
Decision decide(const Digraph& d, const DecideLimits& limits = {});

// Independent oracle: sweeps all 2^m arc subsets (gray-code order, so one
// arc flips per step) applying the same acceptance test. Used only for
// cross-validation; guard m <= max_arcs.
Decision decide_bruteforce(const Digraph& d, int max_arcs = 24);

} // namespace seu
