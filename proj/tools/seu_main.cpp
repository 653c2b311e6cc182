// Command-line front end. Subcommands: check, verify, family, lemma-test,
// export. Exit status: 0 clean, 1 usage or parse error, 2 guard refusal,
// 3 counterexample or violation found.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "seu/decide.hpp"
#include "seu/digraph.hpp"
#include "seu/enumerate.hpp"
#include "seu/errors.hpp"
#include "seu/family.hpp"
#include "seu/hypotheses.hpp"
#include "seu/io.hpp"
#include "seu/lemma_tests.hpp"
#include "seu/serialize.hpp"
#include "seu/sweep.hpp"
#include "seu/trail.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitFound = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        seu::write_text_file(out_path, text);
}

std::string set_string(std::uint32_t mask) {
    std::string s = "{";
    for (int v = 0; v < seu::kMaxOrder; ++v)
        if (mask >> v & 1u) {
            if (s.size() > 1) s += ",";
            s += std::to_string(v);
        }
    return s + "}";
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct CheckOpts {
    std::string path;
    std::string format = "text";
    std::string out;
    bool sharpness = false;
    bool timing = false;
    seu::DecideLimits limits;
};

std::string check_text(const seu::Digraph& d, const seu::Decision& dec, bool sharpness) {
    std::string s;
    s += "order: " + std::to_string(d.order()) + "\n";
    s += "arcs: " + std::to_string(d.arc_count()) + "\n";
    s += std::string("strong: ") + (seu::is_strong(d) ? "yes" : "no") + "\n";
    switch (dec.verdict) {
    case seu::Verdict::supereulerian: {
        s += "verdict: supereulerian\n";
        s += "certificate:";
        for (int v : seu::eulerian_circuit(d, *dec.certificate))
            s += (s.back() == ':' ? " " : " -> ") + std::to_string(v);
        s += "\n";
        break;
    }
    case seu::Verdict::not_supereulerian:
        s += "verdict: NOT supereulerian\n";
        break;
    case seu::Verdict::not_strong_shortcut:
        s += "verdict: NOT supereulerian (not strongly connected)\n";
        break;
    }
    const auto smd = seu::recognize_semicomplete_multipartite(d);
    if (const auto* cert = std::get_if<seu::PartitionCertificate>(&smd)) {
        s += "semicomplete multipartite: yes, classes:";
        for (const auto& cls : cert->classes) {
            std::uint32_t mask = 0;
            for (int v : cls) mask |= 1u << v;
            s += " " + set_string(mask);
        }
        s += "\n";
    } else {
        const auto& w = std::get<seu::SmdWitness>(smd);
        s += "semicomplete multipartite: no (vertices " + std::to_string(w.a) + "," +
             std::to_string(w.b) + " adjacent yet both nonadjacent to " + std::to_string(w.c) + ")\n";
    }
    const auto pairs = seu::classify_pairs(d);
    if (pairs.empty()) {
        s += "nonadjacent pairs: none\n";
    } else {
        s += "nonadjacent pairs:\n";
        for (const auto& p : pairs) {
            s += "  {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                 "}: degree_sum=" + std::to_string(p.degree_sum) +
                 " mixed_min=" + std::to_string(p.mixed_min);
            if (p.dominated_by) s += " dominated_by=" + set_string(p.dominated_by);
            if (p.dominates) s += " dominates=" + set_string(p.dominates);
            s += "\n";
        }
    }
    s += "hypotheses:\n";
    const auto outcomes = seu::evaluate_all_hypotheses(d);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        s += std::string("  ") + seu::to_string(seu::kAllHypotheses[i]) + ": " +
             seu::to_string(outcomes[i].status);
        if (outcomes[i].violator)
            s += " at {" + std::to_string(outcomes[i].violator->u) + "," +
                 std::to_string(outcomes[i].violator->v) + "}";
        if (!outcomes[i].reason.empty()) s += " (" + outcomes[i].reason + ")";
        s += "\n";
    }
    if (sharpness) {
        s += "margins:\n";
        for (const auto& row : seu::sharpness_audit(d).rows) {
            s += "  " + row.label + ": ";
            if (!row.applicable)
                s += "not applicable";
            else if (row.vacuous)
                s += "vacuous";
            else
                s += "margin=" + std::to_string(row.margin) + " worst={" +
                     std::to_string(row.worst->u) + "," + std::to_string(row.worst->v) + "}";
            s += "\n";
        }
    }
    return s;
}

seu::ordered_json check_json(const CheckOpts& o, const seu::Digraph& d, const seu::Decision& dec) {
    seu::ordered_json j;
    j["config"] = {{"input", o.path},
                   {"sharpness", o.sharpness},
                   {"max_order", o.limits.max_order},
                   {"max_arcs", o.limits.max_arcs}};
    j["order"] = d.order();
    j["arcs"] = d.arc_count();
    j["strong"] = seu::is_strong(d);
    j["decision"] = seu::to_json(dec, o.timing);
    const auto smd = seu::recognize_semicomplete_multipartite(d);
    if (const auto* cert = std::get_if<seu::PartitionCertificate>(&smd)) {
        j["semicomplete_multipartite"] = true;
        j["partite_classes"] = cert->classes;
    } else {
        const auto& w = std::get<seu::SmdWitness>(smd);
        j["semicomplete_multipartite"] = false;
        j["smd_witness"] = {{"a", w.a}, {"b", w.b}, {"c", w.c}};
    }
    auto pairs_json = seu::ordered_json::array();
    for (const auto& p : seu::classify_pairs(d)) pairs_json.push_back(seu::to_json(p));
    j["nonadjacent_pairs"] = std::move(pairs_json);
    seu::ordered_json hyp_json;
    const auto outcomes = seu::evaluate_all_hypotheses(d);
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        hyp_json[seu::to_string(seu::kAllHypotheses[i])] = seu::to_json(outcomes[i]);
    j["hypotheses"] = std::move(hyp_json);
    if (o.sharpness) j["sharpness"] = seu::to_json(seu::sharpness_audit(d));
    return j;
}

int run_check(const CheckOpts& o) {
    const seu::Digraph d = seu::parse_edge_list_file(o.path);
    const seu::Decision dec = seu::decide(d, o.limits);
    if (o.format == "json")
        emit(seu::to_text(check_json(o, d, dec)), o.out);
    else
        emit(check_text(d, dec, o.sharpness), o.out);
    return kExitClean;
}

struct VerifyOpts {
    std::vector<std::string> hypothesis_ids;
    int n = 0;
    bool exhaustive = false;
    bool random = false;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    bool strong_only = false;
    bool smd_only = false;
    bool canonical_only = false;
    int max_exhaustive_n = 0;
    int threads = 0;
    bool serial = false;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 1ull << 20;
    std::optional<std::uint64_t> stop_after;
    bool timing = false;
    std::string out;
    std::string cx_dir;
    seu::DecideLimits limits;
};

int run_verify(const VerifyOpts& o) {
    seu::PopulationSpec spec;
    spec.n = o.n;
    spec.mode = o.random ? seu::PopulationMode::random : seu::PopulationMode::exhaustive;
    spec.count = o.count;
    spec.seed = o.seed;
    spec.density = o.density;
    spec.strong_only = o.strong_only;
    spec.smd_only = o.smd_only;
    spec.canonical_only = o.canonical_only;

    std::vector<seu::HypothesisId> hyps;
    if (o.hypothesis_ids.empty()) {
        hyps.assign(seu::kAllHypotheses.begin(), seu::kAllHypotheses.end());
    } else {
        for (const auto& id : o.hypothesis_ids) hyps.push_back(*seu::parse_hypothesis(id));
    }

    seu::SweepOptions opt;
    opt.decide_limits = o.limits;
    if (o.max_exhaustive_n > 0) opt.guards.max_exhaustive_order = o.max_exhaustive_n;
    opt.threads = o.threads;
    if (!o.checkpoint.empty()) opt.checkpoint_path = o.checkpoint;
    opt.checkpoint_every = o.checkpoint_every;
    opt.stop_after = o.stop_after;

    const auto reports = o.serial ? seu::verify_many_serial(spec, hyps, opt)
                                  : seu::verify_many_parallel(spec, hyps, opt);

    auto arr = seu::ordered_json::array();
    bool found = false;
    for (const auto& r : reports) {
        arr.push_back(seu::to_json(r, o.timing));
        found = found || !r.counterexamples.empty();
    }
    emit(seu::to_text(arr), o.out);

    if (!o.cx_dir.empty()) {
        std::filesystem::create_directories(o.cx_dir);
        for (const auto& r : reports)
            for (const auto& cx : r.counterexamples) {
                const auto name = std::string(seu::to_string(r.hypothesis)) + "-" +
                                  std::to_string(cx.index) + ".txt";
                seu::write_text_file((std::filesystem::path(o.cx_dir) / name).string(), cx.edge_list);
            }
    }
    return found ? kExitFound : kExitClean;
}

struct FamilyOpts {
    int n1 = 0;
    int n2 = 0;
    bool audit = false;
    std::string format = "edge-list";
    std::string out;
};

int run_family(const FamilyOpts& o) {
    const seu::FamilyParams params{o.n1, o.n2};
    if (o.audit) {
        const seu::FamilyAudit audit = seu::audit_family(params);
        emit(seu::to_text(seu::to_json(audit)), o.out);
        return audit.all_pass ? kExitClean : kExitFound;
    }
    const seu::FamilyInstance inst = seu::build_family(params);
    if (o.format == "dot") {
        const auto labels = inst.vertex_labels();
        emit(seu::to_dot(inst.digraph, &labels), o.out);
    } else {
        emit(seu::to_edge_list(inst.digraph), o.out);
    }
    return kExitClean;
}

struct LemmaOpts {
    seu::LemmaTrialConfig config;
    std::string out;
};

int run_lemma_test(const LemmaOpts& o) {
    const seu::LemmaSuiteReport report = seu::run_lemma_suite(o.config);
    emit(seu::to_text(seu::to_json(report)), o.out);
    return report.total_violations() == 0 ? kExitClean : kExitFound;
}

struct ExportOpts {
    std::string path;
    std::string format = "dot";
    std::string labels_csv;
    std::string out;
};

int run_export(const ExportOpts& o) {
    const seu::Digraph d = seu::parse_edge_list_file(o.path);
    if (o.format == "dot") {
        if (!o.labels_csv.empty()) {
            const auto labels = split_labels(o.labels_csv);
            if (static_cast<int>(labels.size()) != d.order())
                throw seu::input_error("expected " + std::to_string(d.order()) + " labels, got " +
                                       std::to_string(labels.size()));
            emit(seu::to_dot(d, &labels), o.out);
        } else {
            emit(seu::to_dot(d), o.out);
        }
    } else {
        emit(seu::to_edge_list(d), o.out);
    }
    return kExitClean;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supereulerian digraph workbench: decide instances, sweep degree-condition "
                 "hypotheses over digraph populations, and audit the two-block witness family"};
    app.require_subcommand(1);
    int rc = kExitClean;

    std::vector<std::string> hypothesis_names;
    for (const auto h : seu::kAllHypotheses) hypothesis_names.emplace_back(seu::to_string(h));

    CheckOpts co;
    auto* check = app.add_subcommand("check", "Analyze one digraph from an edge-list file");
    check->add_option("file", co.path, "Edge-list file, one 'tail head' arc per line")->required();
    check->add_option("--format", co.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    check->add_flag("--sharpness", co.sharpness, "Include slack margins for every degree bound");
    check->add_flag("--timing", co.timing, "Include wall-clock seconds (json only)");
    check->add_option("--max-order", co.limits.max_order, "Decision guard: largest order accepted")
        ->capture_default_str();
    check->add_option("--max-arcs", co.limits.max_arcs, "Decision guard: largest arc count accepted")
        ->capture_default_str();
    check->add_option("--out", co.out, "Write output here instead of stdout");
    check->callback([&] { rc = run_check(co); });

    VerifyOpts vo;
    auto* verify = app.add_subcommand(
        "verify", "Sweep a digraph population for members that satisfy a hypothesis yet are "
                  "not supereulerian");
    verify->add_option("--hypothesis", vo.hypothesis_ids, "Hypothesis id, repeatable (default: all)")
        ->check(CLI::IsMember(hypothesis_names));
    verify->add_option("--n", vo.n, "Digraph order")->required()->check(CLI::Range(1, seu::kMaxOrder));
    auto* exhaustive = verify->add_flag("--exhaustive", vo.exhaustive, "Enumerate every labeled digraph (default)");
    auto* random = verify->add_flag("--random", vo.random, "Sample seeded random digraphs")->excludes(exhaustive);
    verify->add_option("--count", vo.count, "Random mode: number of samples")->needs(random);
    verify->add_option("--seed", vo.seed, "Random mode: stream seed, echoed in the report")
        ->capture_default_str();
    verify->add_option("--density", vo.density, "Random mode: independent arc probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    verify->add_flag("--strong-only", vo.strong_only, "Keep only strongly connected members");
    verify->add_flag("--smd-only", vo.smd_only, "Keep only semicomplete multipartite members");
    verify->add_flag("--canonical-only", vo.canonical_only,
                     "Exhaustive mode: keep one representative per isomorphism class");
    verify->add_option("--max-exhaustive-n", vo.max_exhaustive_n,
                       "Raise the exhaustive-mode order guard (default 5)");
    verify->add_option("--threads", vo.threads, "Worker threads, 0 = runtime default")
        ->capture_default_str();
    verify->add_flag("--serial", vo.serial, "Force the serial reference path");
    verify->add_option("--checkpoint", vo.checkpoint, "Exhaustive mode: resumable progress file");
    verify->add_option("--checkpoint-every", vo.checkpoint_every, "Population indices per checkpoint block")
        ->capture_default_str();
    verify->add_option("--stop-after", vo.stop_after, "Process only this many population indices");
    verify->add_flag("--timing", vo.timing, "Include wall-clock seconds in the report");
    verify->add_option("--out", vo.out, "Write the JSON report array here instead of stdout");
    verify->add_option("--cx-dir", vo.cx_dir, "Write each counterexample edge list into this directory");
    verify->callback([&] { rc = run_verify(vo); });

    FamilyOpts fo;
    auto* family = app.add_subcommand("family", "Emit or audit a two-block witness digraph");
    family->add_option("--n1", fo.n1, "Size of the first complete block")->required();
    family->add_option("--n2", fo.n2, "Size of the second complete block")->required();
    family->add_flag("--audit", fo.audit, "Emit a JSON structural audit instead of the digraph");
    family->add_option("--format", fo.format, "Digraph output format")
        ->check(CLI::IsMember({"edge-list", "dot"}))
        ->capture_default_str();
    family->add_option("--out", fo.out, "Write output here instead of stdout");
    family->callback([&] { rc = run_family(fo); });

    LemmaOpts lo;
    auto* lemma = app.add_subcommand("lemma-test", "Property-test the ditrail checkers on random digraphs");
    lemma->add_option("--trials", lo.config.trials, "Trials per randomized checker")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    lemma->add_option("--seed", lo.config.seed, "Stream seed, echoed in the report")->capture_default_str();
    lemma->add_option("--max-n", lo.config.max_order, "Largest random host order")->capture_default_str();
    lemma->add_option("--density", lo.config.density, "Random host arc probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    lemma->add_option("--smd-max-n", lo.config.smd_exhaustive_order,
                      "Exhaustive semicomplete-multipartite sweep up to this order")
        ->capture_default_str();
    lemma->add_option("--out", lo.out, "Write the JSON report here instead of stdout");
    lemma->callback([&] { rc = run_lemma_test(lo); });

    ExportOpts eo;
    auto* exp = app.add_subcommand("export", "Re-emit an edge-list file in another format");
    exp->add_option("file", eo.path, "Edge-list file")->required();
    exp->add_option("--format", eo.format, "Target format")
        ->check(CLI::IsMember({"edge-list", "dot"}))
        ->capture_default_str();
    exp->add_option("--labels", eo.labels_csv, "Comma-separated vertex labels for dot output");
    exp->add_option("--out", eo.out, "Write output here instead of stdout");
    exp->callback([&] { rc = run_export(eo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitClean : kExitUsage;
    } catch (const seu::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const seu::guard_refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    }
    return rc;
}
