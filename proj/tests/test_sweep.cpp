#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seu/decide.hpp"
#include "seu/io.hpp"
#include "seu/serialize.hpp"
#include "seu/sweep.hpp"

using namespace seu;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const char* name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::remove(path.c_str());
    }
    ~TempPath() { std::remove(path.c_str()); }
};

std::vector<VerificationReport> strip_timing(std::vector<VerificationReport> reports) {
    for (auto& r : reports) r.seconds = 0.0;
    return reports;
}

// Direct per-member recomputation with none of the sweep machinery: no
// shared classification pass, no lazy decision, no parallel merge.
VerificationReport naive_sweep(const PopulationSpec& spec, HypothesisId h) {
    VerificationReport report;
    report.hypothesis = h;
    report.population = spec;
    for (std::uint64_t i = 0; i < population_size(spec); ++i) {
        const Digraph d = population_member(spec, i);
        report.counts.examined++;
        if (!passes_filters(spec, d)) continue;
        report.counts.filtered++;
        if (is_strong(d)) report.counts.strong++;
        if (hypothesis_holds(d, h).status != HypothesisStatus::satisfied) continue;
        report.counts.satisfying++;
        if (decide(d).verdict == Verdict::supereulerian)
            report.counts.supereulerian++;
        else
            report.counterexamples.push_back({i, to_edge_list(d)});
    }
    return report;
}

} // namespace

TEST_CASE("frozen satisfying counts through order 4") {
    struct Row {
        int n;
        std::uint64_t strong;
        std::uint64_t satisfying[6]; // kAllHypotheses order
    };
    const Row expected[] = {
        {2, 1, {1, 1, 1, 1, 1, 1}},
        {3, 18, {18, 18, 18, 18, 18, 18}},
        {4, 1606, {1452, 1530, 1506, 1386, 1506, 1506}},
    };
    for (const Row& row : expected) {
        PopulationSpec spec;
        spec.n = row.n;
        const auto reports = verify_many_parallel(spec, kAllHypotheses);
        REQUIRE(reports.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(reports[i].counts.examined == population_size(spec));
            CHECK(reports[i].counts.strong == row.strong);
            CHECK(reports[i].counts.satisfying == row.satisfying[i]);
            CHECK(reports[i].counts.supereulerian == row.satisfying[i]); // zero counterexamples
            CHECK(reports[i].counterexamples.empty());
            CHECK(reports[i].complete);
        }
    }
}

TEST_CASE("sweep matches the naive recomputation") {
    PopulationSpec spec;
    spec.n = 3;
    for (const HypothesisId h : kAllHypotheses) {
        VerificationReport naive = naive_sweep(spec, h);
        VerificationReport swept = verify_implication(spec, h);
        naive.seconds = swept.seconds = 0.0;
        CHECK(naive == swept);
    }

    PopulationSpec filtered;
    filtered.n = 4;
    filtered.smd_only = true;
    VerificationReport naive = naive_sweep(filtered, HypothesisId::t24_smd);
    VerificationReport swept = verify_implication(filtered, HypothesisId::t24_smd);
    naive.seconds = swept.seconds = 0.0;
    CHECK(naive == swept);
    CHECK(swept.counts.filtered == 2539);
    CHECK(swept.counts.satisfying == 1386); // filter does not change the satisfying set
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
    PopulationSpec spec;
    spec.n = 4;
    SweepOptions opts;
    const auto serial = strip_timing(verify_many_serial(spec, kAllHypotheses, opts));
    for (int threads : {1, 2, 3}) {
        opts.threads = threads;
        CHECK(strip_timing(verify_many_parallel(spec, kAllHypotheses, opts)) == serial);
    }

    PopulationSpec rnd;
    rnd.mode = PopulationMode::random;
    rnd.n = 6;
    rnd.count = 300;
    rnd.seed = 42;
    const auto rnd_serial = strip_timing(verify_many_serial(rnd, kAllHypotheses));
    CHECK(strip_timing(verify_many_parallel(rnd, kAllHypotheses)) == rnd_serial);
}

TEST_CASE("single-hypothesis wrapper matches the list form") {
    PopulationSpec spec;
    spec.n = 3;
    const auto many = strip_timing(verify_many_serial(spec, kAllHypotheses));
    VerificationReport one = verify_implication_parallel(spec, HypothesisId::c13);
    one.seconds = 0.0;
    CHECK(one == many[2]);
}

TEST_CASE("stop_after truncates and reports incompleteness") {
    PopulationSpec spec;
    spec.n = 4;
    SweepOptions opts;
    opts.stop_after = 1000;
    const auto partial = verify_many_serial(spec, kAllHypotheses, opts);
    CHECK_FALSE(partial[0].complete);
    CHECK(partial[0].counts.examined == 1000);

    // prefix recomputation
    VerificationReport naive;
    naive.hypothesis = HypothesisId::bjm_2n3;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const Digraph d = population_member(spec, i);
        naive.counts.examined++;
        naive.counts.filtered++;
        naive.counts.strong += is_strong(d);
        if (hypothesis_holds(d, HypothesisId::bjm_2n3).status == HypothesisStatus::satisfied) {
            naive.counts.satisfying++;
            naive.counts.supereulerian += decide(d).verdict == Verdict::supereulerian;
        }
    }
    CHECK(partial[0].counts == naive.counts);

    opts.stop_after = 0;
    CHECK(verify_many_serial(spec, kAllHypotheses, opts)[0].counts.examined == 0);
}

TEST_CASE("checkpoint text round trips") {
    SweepCheckpoint cp;
    cp.key_hash = 0xdeadbeefcafe1234ull;
    cp.next_index = 2500;
    cp.examined = 2500;
    cp.filtered = 2400;
    cp.strong = 900;
    cp.per_hypothesis.resize(2);
    cp.per_hypothesis[0] = {800, 799, {17}};
    cp.per_hypothesis[1] = {500, 500, {}};
    const std::string text = encode_checkpoint(cp, 4);
    CHECK(parse_checkpoint(text, 4, 2) == cp);

    CHECK_THROWS_AS(parse_checkpoint(text, 4, 3), guard_refusal);      // hypothesis count mismatch
    CHECK_THROWS_AS(parse_checkpoint(text, 5, 2), guard_refusal);      // wrong position width
    CHECK_THROWS_AS(parse_checkpoint(text + "junk\n", 4, 2), guard_refusal);
    CHECK_THROWS_AS(parse_checkpoint("", 4, 2), guard_refusal);
    CHECK_THROWS_AS(parse_checkpoint("seu-checkpoint 2\n", 4, 2), guard_refusal);
    std::string flipped = text;
    flipped[flipped.find("pos ") + 4] = '7'; // non-base-4 digit
    CHECK_THROWS_AS(parse_checkpoint(flipped, 4, 2), guard_refusal);
}

TEST_CASE("checkpointed sweeps resume to the uninterrupted result") {
    TempPath cp("seu_sweep_cp_test.txt");
    PopulationSpec spec;
    spec.n = 4;
    spec.strong_only = true;

    SweepOptions first;
    first.checkpoint_path = cp.path;
    first.checkpoint_every = 300;
    first.stop_after = 1700;
    const auto partial = verify_many_serial(spec, kAllHypotheses, first);
    CHECK_FALSE(partial[0].complete);
    CHECK(std::filesystem::exists(cp.path));

    SweepOptions resume;
    resume.checkpoint_path = cp.path;
    const auto resumed = strip_timing(verify_many_parallel(spec, kAllHypotheses, resume));
    const auto fresh = strip_timing(verify_many_serial(spec, kAllHypotheses));
    CHECK(resumed == fresh);
    CHECK(resumed[0].complete);
}

TEST_CASE("checkpoint refusals") {
    TempPath cp("seu_sweep_cp_guard.txt");
    PopulationSpec spec;
    spec.n = 3;
    SweepOptions opts;
    opts.checkpoint_path = cp.path;
    opts.checkpoint_every = 10;
    opts.stop_after = 30;
    (void)verify_many_serial(spec, kAllHypotheses, opts);

    // same file, different population: key mismatch
    PopulationSpec other = spec;
    other.strong_only = true;
    CHECK_THROWS_AS(verify_many_serial(other, kAllHypotheses, opts), guard_refusal);

    // corrupted file
    write_text_file(cp.path, "not a checkpoint\n");
    CHECK_THROWS_AS(verify_many_serial(spec, kAllHypotheses, opts), guard_refusal);

    // random-mode checkpointing is refused outright
    TempPath cp2("seu_sweep_cp_rnd.txt");
    PopulationSpec rnd;
    rnd.mode = PopulationMode::random;
    rnd.n = 5;
    rnd.count = 10;
    SweepOptions ropts;
    ropts.checkpoint_path = cp2.path;
    CHECK_THROWS_AS(verify_many_serial(rnd, kAllHypotheses, ropts), guard_refusal);
}

TEST_CASE("counterexample records re-verify only when genuine") {
    // satisfied and supereulerian: not a counterexample
    CHECK_FALSE(reverify_counterexample(HypothesisId::c12, "n 2\n0 1\n1 0\n"));
    // hypothesis violated: not a counterexample either
    const std::string family11 = "n 4\n0 2\n1 2\n2 3\n3 0\n3 1\n3 2\n";
    CHECK_FALSE(reverify_counterexample(HypothesisId::c12, family11));
    CHECK_THROWS_AS(reverify_counterexample(HypothesisId::c12, "garbage"), input_error);
}

TEST_CASE("reports serialize with stable shape") {
    PopulationSpec spec;
    spec.n = 3;
    const VerificationReport report = verify_implication(spec, HypothesisId::bjm_2n3);
    const ordered_json j = to_json(report);
    CHECK(j["hypothesis"] == "bjm-2n3");
    CHECK(j["population"]["mode"] == "exhaustive");
    CHECK(j["counts"]["examined"] == 64);
    CHECK(j["counts"]["satisfying"] == 18);
    CHECK(j["complete"] == true);
    CHECK(j["counterexamples"].is_array());
    CHECK(!j.contains("seconds"));
    CHECK(to_json(report, true).contains("seconds"));
    // identical runs serialize identically
    CHECK(to_text(to_json(verify_implication(spec, HypothesisId::bjm_2n3))) == to_text(j));
}
