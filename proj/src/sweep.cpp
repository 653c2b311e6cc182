#include "seu/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seu/errors.hpp"
#include "seu/io.hpp"

namespace seu {

namespace {

struct PerHyp {
    std::uint64_t satisfying = 0, supereulerian = 0;
    std::vector<std::uint64_t> cx;
};

struct Accumulator {
    std::uint64_t examined = 0, filtered = 0, strong = 0;
    std::vector<PerHyp> per;

    explicit Accumulator(std::size_t hyps) : per(hyps) {}

    void merge(const Accumulator& other) {
        examined += other.examined;
        filtered += other.filtered;
        strong += other.strong;
        for (std::size_t i = 0; i < per.size(); ++i) {
            per[i].satisfying += other.per[i].satisfying;
            per[i].supereulerian += other.per[i].supereulerian;
            per[i].cx.insert(per[i].cx.end(), other.per[i].cx.begin(), other.per[i].cx.end());
        }
    }
};

void process_member(const PopulationSpec& spec, std::span<const HypothesisId> hyps, const DecideLimits& limits,
                    bool need_smd, std::uint64_t index, Accumulator& acc) {
    const Digraph d = population_member(spec, index);
    ++acc.examined;
    if (!passes_filters(spec, d)) return;
    ++acc.filtered;
    if (!is_strong(d)) return; // every premise assumes strongness
    ++acc.strong;

    const auto pairs = classify_pairs(d);
    const bool smd = spec.smd_only || (need_smd && is_semicomplete_multipartite(d));
    std::optional<Verdict> verdict; // at most one decision per member
    for (std::size_t i = 0; i < hyps.size(); ++i) {
        const HypothesisOutcome outcome = evaluate_hypothesis(pairs, d.order(), true, smd, hyps[i]);
        if (outcome.status != HypothesisStatus::satisfied) continue;
        ++acc.per[i].satisfying;
        if (!verdict) verdict = decide(d, limits).verdict;
        if (*verdict == Verdict::supereulerian)
            ++acc.per[i].supereulerian;
        else
            acc.per[i].cx.push_back(index);
    }
}

void process_range_serial(const PopulationSpec& spec, std::span<const HypothesisId> hyps, const DecideLimits& limits,
                          bool need_smd, std::uint64_t lo, std::uint64_t hi, Accumulator& acc) {
    for (std::uint64_t i = lo; i < hi; ++i) process_member(spec, hyps, limits, need_smd, i, acc);
}

void process_range_parallel(const PopulationSpec& spec, std::span<const HypothesisId> hyps, const DecideLimits& limits,
                            bool need_smd, std::uint64_t lo, std::uint64_t hi, int threads, Accumulator& acc) {
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
    {
        Accumulator local(acc.per.size());
#pragma omp for schedule(dynamic, 64)
        for (long long i = static_cast<long long>(lo); i < static_cast<long long>(hi); ++i)
            process_member(spec, hyps, limits, need_smd, static_cast<std::uint64_t>(i), local);
#pragma omp critical
        acc.merge(local);
    }
#else
    (void)threads;
    process_range_serial(spec, hyps, limits, need_smd, lo, hi, acc);
#endif
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SweepCheckpoint snapshot(std::uint64_t key, std::uint64_t next_index, const Accumulator& acc) {
    SweepCheckpoint cp;
    cp.key_hash = key;
    cp.next_index = next_index;
    cp.examined = acc.examined;
    cp.filtered = acc.filtered;
    cp.strong = acc.strong;
    for (const PerHyp& ph : acc.per) {
        SweepCheckpoint::PerHypothesis out;
        out.satisfying = ph.satisfying;
        out.supereulerian = ph.supereulerian;
        out.counterexample_indices = ph.cx;
        std::sort(out.counterexample_indices.begin(), out.counterexample_indices.end());
        cp.per_hypothesis.push_back(std::move(out));
    }
    return cp;
}

void save_checkpoint(const std::string& path, const SweepCheckpoint& cp, int order) {
    const std::string tmp = path + ".tmp";
    write_text_file(tmp, encode_checkpoint(cp, order));
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw input_error("cannot move checkpoint into place at " + path);
}

std::vector<VerificationReport> run_sweep(const PopulationSpec& spec, std::span<const HypothesisId> hyps,
                                          const SweepOptions& opt, bool parallel) {
    validate(spec, opt.guards);
    if (hyps.empty()) throw input_error("at least one hypothesis required");
    const auto t0 = std::chrono::steady_clock::now();

    const std::uint64_t total = population_size(spec);
    const bool need_smd = std::find(hyps.begin(), hyps.end(), HypothesisId::t24_smd) != hyps.end();

    Accumulator acc(hyps.size());
    std::uint64_t begin = 0;
    const bool checkpointing = opt.checkpoint_path.has_value();
    std::uint64_t key = 0;
    if (checkpointing) {
        if (spec.mode != PopulationMode::exhaustive)
            throw guard_refusal("checkpointing applies to exhaustive sweeps only");
        key = checkpoint_key(spec, hyps);
        if (const auto text = read_file(*opt.checkpoint_path)) {
            const SweepCheckpoint cp = parse_checkpoint(*text, spec.n, hyps.size());
            if (cp.key_hash != key)
                throw guard_refusal("checkpoint does not match this sweep (population or hypothesis list changed)");
            begin = cp.next_index;
            acc.examined = cp.examined;
            acc.filtered = cp.filtered;
            acc.strong = cp.strong;
            for (std::size_t i = 0; i < hyps.size(); ++i) {
                acc.per[i].satisfying = cp.per_hypothesis[i].satisfying;
                acc.per[i].supereulerian = cp.per_hypothesis[i].supereulerian;
                acc.per[i].cx = cp.per_hypothesis[i].counterexample_indices;
            }
        }
    }

    const std::uint64_t end = std::max(begin, std::min(total, opt.stop_after.value_or(total)));
    const std::uint64_t block =
        checkpointing ? std::max<std::uint64_t>(1, opt.checkpoint_every) : std::max<std::uint64_t>(1, end - begin);
    for (std::uint64_t lo = begin; lo < end; lo += block) {
        const std::uint64_t hi = std::min(end, lo + block);
        if (parallel)
            process_range_parallel(spec, hyps, opt.decide_limits, need_smd, lo, hi, opt.threads, acc);
        else
            process_range_serial(spec, hyps, opt.decide_limits, need_smd, lo, hi, acc);
        if (checkpointing) save_checkpoint(*opt.checkpoint_path, snapshot(key, hi, acc), spec.n);
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<VerificationReport> reports;
    reports.reserve(hyps.size());
    for (std::size_t i = 0; i < hyps.size(); ++i) {
        VerificationReport report;
        report.hypothesis = hyps[i];
        report.population = spec;
        report.counts = {acc.examined, acc.filtered, acc.strong, acc.per[i].satisfying, acc.per[i].supereulerian};
        std::sort(acc.per[i].cx.begin(), acc.per[i].cx.end());
        for (std::uint64_t idx : acc.per[i].cx)
            report.counterexamples.push_back({idx, to_edge_list(population_member(spec, idx))});
        report.complete = end == total;
        report.seconds = seconds;
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace

std::vector<VerificationReport> verify_many_serial(const PopulationSpec& spec, std::span<const HypothesisId> hyps,
                                                   const SweepOptions& options) {
    return run_sweep(spec, hyps, options, false);
}

std::vector<VerificationReport> verify_many_parallel(const PopulationSpec& spec, std::span<const HypothesisId> hyps,
                                                     const SweepOptions& options) {
    return run_sweep(spec, hyps, options, true);
}

VerificationReport verify_implication_serial(const PopulationSpec& spec, HypothesisId h, const SweepOptions& options) {
    return std::move(verify_many_serial(spec, {&h, 1}, options).front());
}

VerificationReport verify_implication_parallel(const PopulationSpec& spec, HypothesisId h,
                                               const SweepOptions& options) {
    return std::move(verify_many_parallel(spec, {&h, 1}, options).front());
}

VerificationReport verify_implication(const PopulationSpec& spec, HypothesisId h, const SweepOptions& options) {
    return verify_implication_parallel(spec, h, options);
}

bool reverify_counterexample(HypothesisId h, const std::string& edge_list, const DecideLimits& limits) {
    const Digraph d = parse_edge_list_string(edge_list);
    if (hypothesis_holds(d, h).status != HypothesisStatus::satisfied) return false;
    return decide(d, limits).verdict == Verdict::not_supereulerian;
}

std::uint64_t checkpoint_key(const PopulationSpec& spec, std::span<const HypothesisId> hyps) {
    std::string key = spec.describe() + " hyp=";
    for (std::size_t i = 0; i < hyps.size(); ++i) {
        if (i > 0) key += ",";
        key += to_string(hyps[i]);
    }
    return stable_hash(key);
}

std::string encode_checkpoint(const SweepCheckpoint& cp, int order) {
    const int digits = static_cast<int>(pair_count(order)) + 1;
    std::string pos(digits, '0');
    std::uint64_t rest = cp.next_index;
    for (int i = digits - 1; i >= 0; --i) {
        pos[i] = static_cast<char>('0' + (rest & 3));
        rest >>= 2;
    }
    if (rest != 0) throw input_error("checkpoint position does not fit the pair counter for this order");

    char key_hex[17];
    std::snprintf(key_hex, sizeof key_hex, "%016llx", static_cast<unsigned long long>(cp.key_hash));

    std::string out = "seu-checkpoint 1\n";
    out += "key ";
    out += key_hex;
    out += "\npos " + pos;
    out += "\ncounts " + std::to_string(cp.examined) + " " + std::to_string(cp.filtered) + " " +
           std::to_string(cp.strong) + "\n";
    for (const auto& ph : cp.per_hypothesis) {
        out += "hyp " + std::to_string(ph.satisfying) + " " + std::to_string(ph.supereulerian) + " " +
               std::to_string(ph.counterexample_indices.size());
        for (std::uint64_t idx : ph.counterexample_indices) out += " " + std::to_string(idx);
        out += "\n";
    }
    return out;
}

SweepCheckpoint parse_checkpoint(const std::string& text, int order, std::size_t hypothesis_count) {
    std::istringstream in(text);
    std::string word;
    auto fail = [](const std::string& why) { return guard_refusal("corrupt checkpoint: " + why); };
    auto expect = [&](const char* what) {
        if (!(in >> word) || word != what) throw fail(std::string("expected '") + what + "'");
    };
    auto read_u64 = [&](const char* what) {
        std::uint64_t value = 0;
        if (!(in >> value)) throw fail(std::string("bad ") + what);
        return value;
    };

    SweepCheckpoint cp;
    expect("seu-checkpoint");
    expect("1");
    expect("key");
    if (!(in >> word) || word.size() != 16 || word.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw fail("bad key");
    cp.key_hash = std::strtoull(word.c_str(), nullptr, 16);

    expect("pos");
    const std::size_t digits = pair_count(order) + 1;
    if (!(in >> word) || word.size() != digits || word.find_first_not_of("0123") != std::string::npos)
        throw fail("bad position counter");
    for (char c : word) cp.next_index = (cp.next_index << 2) | static_cast<std::uint64_t>(c - '0');
    const std::uint64_t total = 1ull << (2 * pair_count(order));
    if (cp.next_index > total) throw fail("position beyond the population");

    expect("counts");
    cp.examined = read_u64("examined count");
    cp.filtered = read_u64("filtered count");
    cp.strong = read_u64("strong count");

    for (std::size_t h = 0; h < hypothesis_count; ++h) {
        expect("hyp");
        SweepCheckpoint::PerHypothesis ph;
        ph.satisfying = read_u64("satisfying count");
        ph.supereulerian = read_u64("supereulerian count");
        const std::uint64_t k = read_u64("counterexample count");
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t idx = read_u64("counterexample index");
            if (idx >= total) throw fail("counterexample index beyond the population");
            if (!ph.counterexample_indices.empty() && idx <= ph.counterexample_indices.back())
                throw fail("counterexample indices not ascending");
            ph.counterexample_indices.push_back(idx);
        }
        cp.per_hypothesis.push_back(std::move(ph));
    }
    if (in >> word) throw fail("trailing content");
    return cp;
}

} // namespace seu
