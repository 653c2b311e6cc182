#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seu/decide.hpp"
#include "seu/enumerate.hpp"
#include "seu/hypotheses.hpp"

namespace seu {

struct SweepCounts {
    std::uint64_t examined = 0;      // raw members seen
    std::uint64_t filtered = 0;      // passed the population filters
    std::uint64_t strong = 0;        // strongly connected among filtered
    std::uint64_t satisfying = 0;    // premise satisfied (implies strong)
    std::uint64_t supereulerian = 0; // supereulerian among satisfying

    friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

// A premise-satisfying member that decided not supereulerian. The edge list
// alone re-verifies it; `index` pins its raw population position.
struct Counterexample {
    std::uint64_t index = 0;
    std::string edge_list;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    HypothesisId hypothesis = HypothesisId::bjm_2n3;
    PopulationSpec population;
    SweepCounts counts;
    std::vector<Counterexample> counterexamples; // ascending by raw index
    bool complete = true; // false when stop_after cut the sweep short
    double seconds = 0.0; // informational, never serialized by default

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SweepOptions {
    DecideLimits decide_limits;
    EnumerationGuards guards;
    int threads = 0; // parallel path only; 0 = runtime default
    std::optional<std::string> checkpoint_path; // exhaustive mode only
    std::uint64_t checkpoint_every = 1ull << 20; // raw indices per persisted block
    std::optional<std::uint64_t> stop_after; // process raw indices below this only
};

// Sweeps the population once, evaluating every listed premise per member
// with one shared classification pass and at most one decision per member.
// Reports come back in input order; each is self-contained. The serial
// path is the reference the parallel path is tested against: equal inputs
// must produce equal reports for any thread count.
std::vector<VerificationReport> verify_many_serial(const PopulationSpec& spec, std::span<const HypothesisId> hyps,
                                                   const SweepOptions& options = {});
std::vector<VerificationReport> verify_many_parallel(const PopulationSpec& spec, std::span<const HypothesisId> hyps,
                                                     const SweepOptions& options = {});

VerificationReport verify_implication_serial(const PopulationSpec& spec, HypothesisId h,
                                             const SweepOptions& options = {});
VerificationReport verify_implication_parallel(const PopulationSpec& spec, HypothesisId h,
                                               const SweepOptions& options = {});
// Default entry point (the parallel path; identical results by contract).
VerificationReport verify_implication(const PopulationSpec& spec, HypothesisId h, const SweepOptions& options = {});

// Re-derives the finding from the edge list alone: premise satisfied and
// decided not supereulerian.
bool reverify_counterexample(HypothesisId h, const std::string& edge_list, const DecideLimits& limits = {});

// Persisted sweep position: everything below next_index is accumulated.
// Bound to one (population, hypothesis list) pair via key_hash.
struct SweepCheckpoint {
    std::uint64_t key_hash = 0;
    std::uint64_t next_index = 0;
    std::uint64_t examined = 0, filtered = 0, strong = 0;
    struct PerHypothesis {
        std::uint64_t satisfying = 0, supereulerian = 0;
        std::vector<std::uint64_t> counterexample_indices; // ascending

        friend bool operator==(const PerHypothesis&, const PerHypothesis&) = default;
    };
    std::vector<PerHypothesis> per_hypothesis; // parallel to the hypothesis list

    friend bool operator==(const SweepCheckpoint&, const SweepCheckpoint&) = default;
};

// Fingerprint a sweep is keyed by; any change to the population or the
// hypothesis list invalidates existing checkpoints.
std::uint64_t checkpoint_key(const PopulationSpec& spec, std::span<const HypothesisId> hyps);

// ASCII round-trip. The position is written as base-4 digits over the
// unordered pairs of the given order (one extra leading digit so the
// one-past-the-end position stays representable). Corrupt or structurally
// wrong text is a guard refusal, never a silent skip.
std::string encode_checkpoint(const SweepCheckpoint& cp, int order);
SweepCheckpoint parse_checkpoint(const std::string& text, int order, std::size_t hypothesis_count);

} // namespace seu
