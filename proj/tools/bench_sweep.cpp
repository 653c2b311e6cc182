// Throughput measurement: full-population sweeps serial versus parallel,
// decision cost on witness-family instances, and random-instance decide
// rate. Informational only; not registered as a test.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "seu/decide.hpp"
#include "seu/family.hpp"
#include "seu/rng.hpp"
#include "seu/serialize.hpp"
#include "seu/sweep.hpp"

using namespace seu;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void sweep_pass(const PopulationSpec& spec, bool parallel) {
    const auto t0 = Clock::now();
    const auto reports =
        parallel ? verify_many_parallel(spec, kAllHypotheses) : verify_many_serial(spec, kAllHypotheses);
    const double dt = elapsed(t0);
    const auto& c = reports.front().counts;
    std::printf("%-8s n=%d  %.3fs  %.0f members/s  examined=%llu strong=%llu\n",
                parallel ? "parallel" : "serial", spec.n, dt, static_cast<double>(c.examined) / dt,
                static_cast<unsigned long long>(c.examined), static_cast<unsigned long long>(c.strong));
    for (const auto& r : reports)
        std::printf("  %-9s satisfying=%-7llu supereulerian=%-7llu cx=%zu\n", to_string(r.hypothesis),
                    static_cast<unsigned long long>(r.counts.satisfying),
                    static_cast<unsigned long long>(r.counts.supereulerian), r.counterexamples.size());
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 5;

    PopulationSpec spec;
    spec.n = n;
    sweep_pass(spec, false);
    sweep_pass(spec, true);

    for (const FamilyParams p : {FamilyParams{2, 3}, FamilyParams{3, 3}, FamilyParams{4, 4}}) {
        const auto inst = build_family(p);
        const auto t0 = Clock::now();
        const auto dec = decide(inst.digraph);
        std::printf("family(%d,%d) order=%d arcs=%d: %s nodes=%llu %.4fs\n", p.n1, p.n2,
                    inst.digraph.order(), inst.digraph.arc_count(), to_string(dec.verdict),
                    static_cast<unsigned long long>(dec.nodes_expanded), elapsed(t0));
    }

    constexpr int kSamples = 2000;
    SplitMix64 rng(12345);
    const auto t0 = Clock::now();
    std::uint64_t nodes = 0;
    int supereulerian = 0;
    for (int i = 0; i < kSamples; ++i) {
        const Digraph d = random_digraph(6, 0.5, rng);
        const Decision dec = decide(d);
        nodes += dec.nodes_expanded;
        supereulerian += dec.verdict == Verdict::supereulerian;
    }
    const double dt = elapsed(t0);
    std::printf("random n=6: %d decides in %.3fs (%.0f/s), %d supereulerian, %llu nodes\n", kSamples,
                dt, kSamples / dt, supereulerian, static_cast<unsigned long long>(nodes));
    return 0;
}
