#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "ufrac/coprime.hpp"
#include "ufrac/errors.hpp"
#include "ufrac/exact_arith.hpp"
#include "ufrac/family.hpp"
#include "ufrac/primes.hpp"
#include "ufrac/records.hpp"
#include "ufrac/scan_driver.hpp"
#include "ufrac/sigma_seq.hpp"
#include "ufrac/stars.hpp"
#include "ufrac/sylvester.hpp"
#include "ufrac/words.hpp"

using namespace ufrac;

namespace {

// Exit codes: 0 success, 2 usage or bad input, 3 a cap or budget cut the
// run short, 4 a verified claim failed (the most interesting outcome).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitViolation = 4;

struct RunConfig {
    std::string format = "plain";
    std::string out_path;
    unsigned workers = 1;
    unsigned max_k = 20;
    std::size_t digit_cap = 100000;
    std::uint64_t subset_cap = 1u << 20;
    std::uint64_t budget = 400'000'000;  // rho iterations
    std::uint64_t trial_bound = 100000;
    std::uint64_t checkpoint_every = 256;
    std::string resume;

    LevelCaps level_caps() const { return LevelCaps{max_k, digit_cap}; }
    FactorBudget factor_budget() const { return FactorBudget{trial_bound, budget}; }
    StarCaps star_caps() const { return StarCaps{digit_cap, factor_budget()}; }
    ScanOptions scan_options() const {
        ScanOptions o;
        o.workers = workers;
        o.checkpoint_every = checkpoint_every;
        o.resume_token = resume;
        return o;
    }
};

// "{a,b,c}" or "m..n".
FinSet parse_set_arg(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        Nat m = parse_nat(text.substr(0, dots));
        Nat n = parse_nat(text.substr(dots + 2));
        return FinSet::interval(m, n);
    }
    return FinSet::parse(text);
}

std::string join_nat_list(const std::vector<Nat>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].get_str();
    }
    return out;
}

struct Output {
    std::unique_ptr<std::ofstream> file;
    OutputFormat fmt = OutputFormat::Plain;
    std::ostream* stream = nullptr;

    explicit Output(const RunConfig& cfg) {
        fmt = parse_format(cfg.format);
        if (cfg.out_path.empty()) {
            stream = &std::cout;
        } else {
            file = std::make_unique<std::ofstream>(cfg.out_path);
            if (!*file) throw std::domain_error("cannot open output file " + cfg.out_path);
            stream = file.get();
        }
    }
    RecordSink sink() { return stream_sink(*stream, fmt); }
    void write(const ScanRecord& rec) { *stream << format_record(rec, fmt) << '\n'; }
};

ScanRecord make_record(std::string kind,
                       std::vector<std::pair<std::string, std::string>> payload,
                       RecordStatus status = RecordStatus::Ok) {
    ScanRecord rec;
    rec.kind = std::move(kind);
    rec.payload = std::move(payload);
    rec.status = status;
    return rec;
}

int summary_exit(const ScanSummary& sum) {
    if (sum.violations > 0) return kExitViolation;
    if (sum.truncated) return kExitResource;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unit-fraction arithmetic, word trees and search harnesses"};
    app.fallthrough();  // global flags may follow the subcommand
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "record format: json, csv or plain")
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "write records to this file instead of stdout");
    app.add_option("--workers", cfg.workers, "worker threads for scans")->capture_default_str();
    app.add_option("--max-k", cfg.max_k, "largest admissible level index (2^k values)")
        ->capture_default_str();
    app.add_option("--digit-cap", cfg.digit_cap, "per-integer decimal digit cap")
        ->capture_default_str();
    app.add_option("--subset-cap", cfg.subset_cap, "subset enumeration cap")
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "factoring budget (rho iterations)")
        ->capture_default_str();
    app.add_option("--trial-bound", cfg.trial_bound, "trial division bound for factoring")
        ->capture_default_str();
    app.add_option("--checkpoint-every", cfg.checkpoint_every,
                   "outer units between scan checkpoints")
        ->capture_default_str();
    app.add_option("--resume", cfg.resume, "resume a scan from a checkpoint token");

    std::function<int(Output&)> action;

    // ---- sigma ----
    {
        auto* cmd = app.add_subcommand("sigma", "exact sigma, nu, delta and mu of a set");
        auto arg = std::make_shared<std::string>();
        cmd->add_option("set", *arg, "set literal {a,b,c} or interval m..n")->required();
        cmd->callback([&, arg] {
            action = [&, arg](Output& out) {
                FinSet s = parse_set_arg(*arg);
                PosRational sg = sigma(s);
                out.write(make_record("sigma", {{"set", s.str()},
                                                {"sigma", sg.str()},
                                                {"nu", sg.num().get_str()},
                                                {"delta", sg.den().get_str()},
                                                {"mu", mu(s).get_str()}}));
                return kExitOk;
            };
        });
    }

    // ---- decompose ----
    {
        auto* cmd = app.add_subcommand(
            "decompose", "pairwise disjoint sets with reciprocal sum a/b each");
        struct Args {
            std::string a = "1", b = "2";
            std::size_t count = 1;
            unsigned k_max = 16;
            std::string strategy = "greedy";
        };
        auto args = std::make_shared<Args>();
        cmd->add_option("--a", args->a, "target numerator")->capture_default_str();
        cmd->add_option("--b", args->b, "target denominator (>= 2)")->capture_default_str();
        cmd->add_option("--count", args->count, "how many disjoint sets")->capture_default_str();
        cmd->add_option("--k-max", args->k_max, "greedy level search bound")
            ->capture_default_str();
        cmd->add_option("--strategy", args->strategy, "greedy or growth")->capture_default_str();
        cmd->callback([&, args] {
            action = [&, args](Output& out) {
                IndexStrategy strategy;
                if (args->strategy == "greedy") {
                    strategy = IndexStrategy::Greedy;
                } else if (args->strategy == "growth") {
                    strategy = IndexStrategy::Growth;
                } else {
                    throw std::domain_error("strategy must be greedy or growth");
                }
                RationalTarget target = make_target(parse_nat(args->a), parse_nat(args->b));
                AssembleResult res = assemble_family(target, args->count, args->k_max, strategy,
                                                     cfg.level_caps());
                for (const FamilyBlock& blk : res.blocks) {
                    bool verified = blk.sigma_value == target.value;
                    out.write(make_record(
                        "family-member",
                        {{"b", target.b.get_str()},
                         {"a", target.a.get_str()},
                         {"block_id", std::to_string(blk.block_id)},
                         {"levels", join_nat_list(blk.level_indices_big)},
                         {"elements", blk.elements.str()},
                         {"sigma", blk.sigma_value.str()},
                         {"verified", verified ? "true" : "false"}},
                        verified ? RecordStatus::Ok : RecordStatus::Violation));
                }
                out.write(make_record(
                    "family-summary",
                    {{"strategy", to_string(res.strategy)},
                     {"requested", std::to_string(res.requested)},
                     {"achieved", std::to_string(res.blocks.size())},
                     {"note", res.note}},
                    res.complete() ? RecordStatus::Ok : RecordStatus::Truncated));
                return res.complete() ? kExitOk : kExitResource;
            };
        });
    }

    // ---- words ----
    {
        auto* words = app.add_subcommand("words", "the d/s word monoid");
        words->require_subcommand(1);
        {
            auto* cmd = words->add_subcommand("apply", "apply a word to an integer");
            auto w = std::make_shared<std::string>();
            auto n = std::make_shared<std::string>();
            cmd->add_option("word", *w, "word over {d,s}, rightmost letter acts first")
                ->required();
            cmd->add_option("n", *n, "argument (>= 1)")->required();
            cmd->callback([&, w, n] {
                action = [&, w, n](Output& out) {
                    Word word = Word::parse(*w);
                    Nat value = apply(word, parse_nat(*n));
                    out.write(make_record("word-apply", {{"word", word.str()},
                                                         {"length", std::to_string(word.length())},
                                                         {"n", *n},
                                                         {"result", value.get_str()}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = words->add_subcommand("level", "all values of length-k words at base b");
            auto k = std::make_shared<unsigned>(0);
            auto b = std::make_shared<std::string>("2");
            cmd->add_option("-k,--k", *k, "word length")->required();
            cmd->add_option("-b,--b", *b, "base")->capture_default_str();
            cmd->callback([&, k, b] {
                action = [&, k, b](Output& out) {
                    LevelMultiset lvl = level_multiset(*k, parse_nat(*b), cfg.level_caps());
                    out.write(make_record("level", {{"k", std::to_string(lvl.k)},
                                                    {"b", lvl.b.get_str()},
                                                    {"size", std::to_string(lvl.values.size())},
                                                    {"simple", lvl.simple() ? "true" : "false"},
                                                    {"sigma", lvl.sigma_value().str()},
                                                    {"values", join_nat_list(lvl.values)}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = words->add_subcommand("preimages", "every word sending b to n");
            auto b = std::make_shared<std::string>();
            auto n = std::make_shared<std::string>();
            cmd->add_option("-b,--b", *b, "base (>= 2)")->required();
            cmd->add_option("-n,--n", *n, "target value (>= b)")->required();
            cmd->callback([&, b, n] {
                action = [&, b, n](Output& out) {
                    auto ws = preimages(parse_nat(*b), parse_nat(*n));
                    for (const Word& w : ws) {
                        out.write(make_record("preimage", {{"b", *b},
                                                           {"n", *n},
                                                           {"word", w.str()},
                                                           {"length", std::to_string(w.length())}}));
                    }
                    out.write(make_record("preimage-summary",
                                          {{"b", *b}, {"n", *n},
                                           {"count", std::to_string(ws.size())}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = words->add_subcommand(
                "check-lengths", "distinct word lengths per value, longest all-d");
            auto b = std::make_shared<std::string>("2");
            auto n_max = std::make_shared<std::string>("1000");
            cmd->add_option("-b,--b", *b, "base (>= 2)")->capture_default_str();
            cmd->add_option("--n-max", *n_max, "check every n up to this")->capture_default_str();
            cmd->callback([&, b, n_max] {
                action = [&, b, n_max](Output& out) {
                    LengthUniquenessReport rep =
                        check_length_uniqueness(parse_nat(*b), parse_nat(*n_max));
                    for (const auto& v : rep.violations) {
                        out.write(make_record("length-violation",
                                              {{"n", v.n.get_str()}, {"detail", v.detail}},
                                              RecordStatus::Violation));
                    }
                    out.write(make_record(
                        "length-summary",
                        {{"b", rep.b.get_str()},
                         {"n_max", rep.n_max.get_str()},
                         {"values", std::to_string(rep.values_checked)},
                         {"words", std::to_string(rep.words_seen)},
                         {"violations", std::to_string(rep.violations.size())}},
                        rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
    }

    // ---- seq ----
    {
        auto* seq = app.add_subcommand("seq", "sigma-sequences from a seed set");
        seq->require_subcommand(1);
        {
            auto* cmd = seq->add_subcommand("run", "trace the sequence to a given index");
            auto seed = std::make_shared<std::string>("{2}");
            auto to = std::make_shared<std::uint64_t>(6);
            auto first = std::make_shared<std::uint64_t>(1);
            auto cap = std::make_shared<std::uint64_t>(1'000'000);
            auto quiet = std::make_shared<bool>(false);
            cmd->add_option("--seed", *seed, "seed set literal")->capture_default_str();
            cmd->add_option("--to", *to, "last state index (1 echoes the seed)")
                ->capture_default_str();
            cmd->add_option("--first-index", *first,
                            "index label of the seed state; pass a streamed state's elements "
                            "as the seed and its index here to continue a long run")
                ->capture_default_str();
            cmd->add_option("--index-cap", *cap, "hard index cap")->capture_default_str();
            cmd->add_flag("--final-only", *quiet, "emit only the final state and summary");
            cmd->callback([&, seed, to, first, cap, quiet] {
                action = [&, seed, to, first, cap, quiet](Output& out) {
                    if (*first < 1) throw std::domain_error("--first-index must be >= 1");
                    if (*to < *first) throw std::domain_error("--to must be >= --first-index");
                    std::uint64_t offset = *first - 1;
                    auto emit_state = [&](const SeqState& st) {
                        out.write(make_record("seq-state",
                                              {{"index", std::to_string(st.index + offset)},
                                               {"elements", st.elements.str()},
                                               {"min", st.min_value.get_str()},
                                               {"replaced", st.replaced.get_str()},
                                               {"doomed", st.doomed ? "true" : "false"}}));
                    };
                    SeqRun run = run_sigma_sequence(
                        FinSet::parse(*seed), *to - offset,
                        *quiet ? std::function<void(const SeqState&)>{} : emit_state, *cap);
                    if (*quiet) emit_state(run.final_state);
                    out.write(make_record(
                        "seq-summary",
                        {{"seed", *seed},
                         {"sigma", run.sigma_value.str()},
                         {"last_index", std::to_string(run.last_index + offset)},
                         {"doomed_events", std::to_string(run.doomed_events.size())}},
                        run.truncated ? RecordStatus::Truncated : RecordStatus::Ok));
                    return run.truncated ? kExitResource : kExitOk;
                };
            });
        }
        {
            auto* cmd = seq->add_subcommand("disjoint", "greedy pairwise disjoint subsequence");
            auto seed = std::make_shared<std::string>("{2}");
            auto horizon = std::make_shared<std::uint64_t>(30);
            cmd->add_option("--seed", *seed, "seed set literal")->capture_default_str();
            cmd->add_option("--horizon", *horizon, "scan indices up to this")
                ->capture_default_str();
            cmd->callback([&, seed, horizon] {
                action = [&, seed, horizon](Output& out) {
                    DisjointSubseq d = disjoint_subsequence(FinSet::parse(*seed), *horizon);
                    std::string idx;
                    for (std::size_t i = 0; i < d.indices.size(); ++i) {
                        if (i) idx += ",";
                        idx += std::to_string(d.indices[i]);
                    }
                    out.write(make_record(
                        "seq-disjoint",
                        {{"seed", *seed},
                         {"horizon", std::to_string(d.horizon)},
                         {"indices", idx},
                         {"next_requires_min_above", d.union_max.get_str()}}));
                    return kExitOk;
                };
            });
        }
    }

    // ---- sylvester ----
    {
        auto* syl = app.add_subcommand("sylvester", "sylvester powers and delta divisibility");
        syl->require_subcommand(1);
        {
            auto* cmd = syl->add_subcommand("powers", "the sylvester-power set of a set");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg, "set literal or interval m..n")->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    FinSet s = parse_set_arg(*arg);
                    auto ps = sylvester_powers(s, cfg.factor_budget());
                    std::string text;
                    for (std::size_t i = 0; i < ps.size(); ++i) {
                        if (i) text += ",";
                        text += ps[i].str();
                    }
                    out.write(make_record("sylvester-powers",
                                          {{"set", s.str()},
                                           {"count", std::to_string(ps.size())},
                                           {"powers", text}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = syl->add_subcommand("delta-div",
                                            "each sylvester power exactly divides delta");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg, "set literal or interval m..n")->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    DeltaDivisibilityReport rep =
                        verify_delta_divisibility(parse_set_arg(*arg), cfg.factor_budget());
                    for (const auto& f : rep.failures) {
                        out.write(make_record("delta-div-violation", {{"detail", f}},
                                              RecordStatus::Violation));
                    }
                    std::string text;
                    for (std::size_t i = 0; i < rep.powers.size(); ++i) {
                        if (i) text += ",";
                        text += rep.powers[i].str();
                    }
                    out.write(make_record("delta-div",
                                          {{"set", rep.x.str()},
                                           {"delta", rep.delta_value.get_str()},
                                           {"powers", text}},
                                          rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
    }

    // ---- scan ----
    {
        auto* scan = app.add_subcommand("scan", "bounded resumable search harnesses");
        scan->require_subcommand(1);
        {
            auto* cmd = scan->add_subcommand("tk", "integral interval sums (expect only [1,1])");
            auto bound = std::make_shared<std::uint64_t>(2000);
            cmd->add_option("--bound", *bound, "checks all 1 <= m <= n <= bound")
                ->capture_default_str();
            cmd->callback([&, bound] {
                action = [&, bound](Output& out) {
                    auto sink = out.sink();
                    return summary_exit(
                        scan_theisinger_kurschak(*bound, *bound, sink, cfg.scan_options()));
                };
            });
        }
        {
            auto* cmd = scan->add_subcommand("erdos-niven",
                                             "pairwise distinct interval sums inside [1,N]");
            auto bound = std::make_shared<std::uint64_t>(400);
            cmd->add_option("--n", *bound, "interval domain bound N")->capture_default_str();
            cmd->callback([&, bound] {
                action = [&, bound](Output& out) {
                    auto sink = out.sink();
                    return summary_exit(scan_erdos_niven(*bound, sink, cfg.scan_options()));
                };
            });
        }
        {
            auto* cmd = scan->add_subcommand(
                "quadruple", "separated interval pairs with equal sylvester sets");
            auto bound = std::make_shared<std::uint64_t>(300);
            cmd->add_option("--bound", *bound, "n' runs up to this")->capture_default_str();
            cmd->callback([&, bound] {
                action = [&, bound](Output& out) {
                    auto sink = out.sink();
                    return summary_exit(scan_quadruples(*bound, sink, cfg.scan_options()));
                };
            });
        }
        {
            auto* cmd = scan->add_subcommand("nu-collision",
                                             "equal numerators among same-size subsets");
            auto pool = std::make_shared<std::string>("{2,3,5,7,11,13}");
            auto size = std::make_shared<unsigned>(2);
            cmd->add_option("--pool", *pool, "ground set literal")->capture_default_str();
            cmd->add_option("--size", *size, "subset size")->capture_default_str();
            cmd->callback([&, pool, size] {
                action = [&, pool, size](Output& out) {
                    auto sink = out.sink();
                    return summary_exit(scan_nu_collisions(FinSet::parse(*pool), *size, sink,
                                                           cfg.scan_options(), cfg.subset_cap));
                };
            });
        }
        {
            auto* cmd = scan->add_subcommand("nonintegrality",
                                             "progression and weighted sums are never integers");
            auto c = std::make_shared<NonintegralityConfig>();
            cmd->add_option("--m-min", c->m_min)->capture_default_str();
            cmd->add_option("--m-max", c->m_max)->capture_default_str();
            cmd->add_option("--d-max", c->d_max)->capture_default_str();
            cmd->add_option("--k-max", c->k_max)->capture_default_str();
            cmd->add_option("--power-vectors", c->power_vectors)->capture_default_str();
            cmd->add_option("--weighted-vectors", c->weighted_vectors)->capture_default_str();
            cmd->add_option("--seed", c->seed)->capture_default_str();
            cmd->callback([&, c] {
                action = [&, c](Output& out) {
                    auto sink = out.sink();
                    return summary_exit(scan_nonintegrality(*c, sink, cfg.scan_options()));
                };
            });
        }
    }

    // ---- coprime ----
    {
        auto* cop = app.add_subcommand("coprime", "pairwise-coprime ground set studies");
        cop->require_subcommand(1);
        {
            auto* cmd = cop->add_subcommand("check", "is the set pairwise coprime");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg)->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    FinSet s = parse_set_arg(*arg);
                    out.write(make_record("coprime-check",
                                          {{"set", s.str()},
                                           {"pairwise_coprime",
                                            is_pairwise_coprime(s) ? "true" : "false"}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = cop->add_subcommand("verify",
                                            "sigma and delta injective over all subsets");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg)->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    CoprimeInjectivityReport rep =
                        verify_coprime_injectivity(parse_set_arg(*arg), cfg.subset_cap);
                    for (const auto& [a, b] : rep.delta_collisions) {
                        out.write(make_record("delta-collision",
                                              {{"set_a", a.str()}, {"set_b", b.str()},
                                               {"delta", delta(a).get_str()}},
                                              RecordStatus::Violation));
                    }
                    for (const auto& [a, b] : rep.sigma_collisions) {
                        out.write(make_record("sigma-collision",
                                              {{"set_a", a.str()}, {"set_b", b.str()}},
                                              RecordStatus::Violation));
                    }
                    for (const FinSet& s : rep.integral_subsets) {
                        bool permitted = s.size() == 1 && s.min() == 1;
                        out.write(make_record("integral-subset",
                                              {{"set", s.str()}, {"sigma", sigma(s).str()}},
                                              permitted ? RecordStatus::Ok
                                                        : RecordStatus::Violation));
                    }
                    out.write(make_record(
                        "coprime-verify",
                        {{"set", rep.ground.str()},
                         {"pairwise_coprime", rep.pairwise_coprime ? "true" : "false"},
                         {"subsets", std::to_string(rep.subsets)},
                         {"delta_collisions", std::to_string(rep.delta_collisions.size())},
                         {"sigma_collisions", std::to_string(rep.sigma_collisions.size())}},
                        rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
        {
            auto* cmd = cop->add_subcommand("nu-histogram",
                                            "numerator frequencies over all subsets");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg)->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    NuHistogram hist = nu_histogram(parse_set_arg(*arg), cfg.subset_cap);
                    for (const auto& [value, count] : hist.counts) {
                        out.write(make_record("nu-count", {{"nu", value.get_str()},
                                                           {"subsets", std::to_string(count)}}));
                    }
                    out.write(make_record(
                        "nu-histogram",
                        {{"pool", hist.pool.str()},
                         {"subsets", std::to_string(hist.subsets)},
                         {"distinct_values", std::to_string(hist.counts.size())}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = cop->add_subcommand("nu-bound", "nu >= |C| prod(C) / max(C)^|C|");
            auto arg = std::make_shared<std::string>();
            cmd->add_option("set", *arg)->required();
            cmd->callback([&, arg] {
                action = [&, arg](Output& out) {
                    NuBoundReport rep = check_nu_lower_bound(parse_set_arg(*arg));
                    out.write(make_record("nu-bound",
                                          {{"set", rep.c.str()},
                                           {"nu", rep.nu_value.get_str()},
                                           {"bound", rep.bound.str()},
                                           {"holds", rep.holds ? "true" : "false"}},
                                          rep.holds ? RecordStatus::Ok
                                                    : RecordStatus::Violation));
                    return rep.holds ? kExitOk : kExitViolation;
                };
            });
        }
        {
            auto* cmd = cop->add_subcommand("hunt", "nu over prime powers is coprime to them");
            auto primes = std::make_shared<std::string>("2,3");
            auto exps = std::make_shared<std::string>("1,1");
            cmd->add_option("--primes", *primes, "comma-separated distinct primes")
                ->capture_default_str();
            cmd->add_option("--exponents", *exps, "comma-separated exponents")
                ->capture_default_str();
            cmd->callback([&, primes, exps] {
                action = [&, primes, exps](Output& out) {
                    auto split = [](const std::string& text) {
                        std::vector<std::string> parts;
                        std::size_t pos = 0;
                        while (pos <= text.size()) {
                            auto comma = text.find(',', pos);
                            parts.push_back(comma == std::string::npos
                                                ? text.substr(pos)
                                                : text.substr(pos, comma - pos));
                            if (comma == std::string::npos) break;
                            pos = comma + 1;
                        }
                        return parts;
                    };
                    std::vector<Nat> qs;
                    for (const auto& p : split(*primes)) qs.push_back(parse_nat(p));
                    std::vector<unsigned long> es;
                    for (const auto& e : split(*exps)) {
                        es.push_back(static_cast<unsigned long>(to_u64(parse_nat(e))));
                    }
                    PrimeHunterResult r = prime_hunter(qs, es, cfg.factor_budget());
                    out.write(make_record(
                        "prime-hunter",
                        {{"powers", join_nat_list(r.powers)},
                         {"nu", r.nu_value.get_str()},
                         {"coprime_to_inputs", r.coprime_to_inputs ? "true" : "false"},
                         {"nu_factors", factor_map_str(r.nu_factors.factors)},
                         {"factors_complete", r.nu_factors.complete() ? "true" : "false"}},
                        r.coprime_to_inputs ? RecordStatus::Ok : RecordStatus::Violation));
                    return r.coprime_to_inputs ? kExitOk : kExitViolation;
                };
            });
        }
    }

    // ---- stars ----
    {
        auto* stars = app.add_subcommand("stars", "iteration of n -> n(n+1)");
        stars->require_subcommand(1);
        {
            auto* cmd = stars->add_subcommand("iterate", "k-fold star iterate");
            auto b = std::make_shared<std::string>("2");
            auto k = std::make_shared<unsigned>(3);
            cmd->add_option("-b,--b", *b)->capture_default_str();
            cmd->add_option("-k,--k", *k)->capture_default_str();
            cmd->callback([&, b, k] {
                action = [&, b, k](Output& out) {
                    Nat v = star_iterate(parse_nat(*b), *k, cfg.digit_cap);
                    out.write(make_record("star-iterate",
                                          {{"b", *b},
                                           {"k", std::to_string(*k)},
                                           {"value", v.get_str()},
                                           {"digits", std::to_string(decimal_digits(v))}}));
                    return kExitOk;
                };
            });
        }
        {
            auto* cmd = stars->add_subcommand("profile", "per-prime first index and exponent");
            auto b = std::make_shared<std::string>("2");
            auto depth = std::make_shared<unsigned>(4);
            cmd->add_option("-b,--b", *b)->capture_default_str();
            cmd->add_option("--depth", *depth)->capture_default_str();
            cmd->callback([&, b, depth] {
                action = [&, b, depth](Output& out) {
                    StarProfile p = exponent_profile(parse_nat(*b), *depth, cfg.star_caps());
                    for (const auto& e : p.entries) {
                        out.write(make_record(
                            "star-profile",
                            {{"b", p.b.get_str()},
                             {"prime", e.prime.get_str()},
                             {"first_index", std::to_string(e.first_index)},
                             {"exponent", std::to_string(e.exponent)},
                             {"verified_through_depth", std::to_string(p.depth_completed)}}));
                    }
                    for (const auto& f : p.stabilization_failures) {
                        out.write(make_record("star-violation", {{"detail", f}},
                                              RecordStatus::Violation));
                    }
                    out.write(make_record(
                        "star-summary",
                        {{"b", p.b.get_str()},
                         {"depth_requested", std::to_string(p.depth_requested)},
                         {"depth_completed", std::to_string(p.depth_completed)},
                         {"primes", std::to_string(p.entries.size())}},
                        !p.ok() ? RecordStatus::Violation
                                : (p.complete() ? RecordStatus::Ok : RecordStatus::Truncated)));
                    if (!p.ok()) return kExitViolation;
                    return p.complete() ? kExitOk : kExitResource;
                };
            });
        }
        {
            auto* cmd = stars->add_subcommand("growth", "growth and prime-count lower bounds");
            auto b_min = std::make_shared<std::uint64_t>(2);
            auto b_max = std::make_shared<std::uint64_t>(10);
            auto depth = std::make_shared<unsigned>(6);
            cmd->add_option("--b-min", *b_min)->capture_default_str();
            cmd->add_option("--b-max", *b_max)->capture_default_str();
            cmd->add_option("--depth", *depth)->capture_default_str();
            cmd->callback([&, b_min, b_max, depth] {
                action = [&, b_min, b_max, depth](Output& out) {
                    StarGrowthReport rep = check_star_growth_and_primecount(
                        *b_min, *b_max, *depth, cfg.star_caps());
                    for (const auto& v : rep.violations) {
                        out.write(make_record("star-growth-violation", {{"detail", v}},
                                              RecordStatus::Violation));
                    }
                    out.write(make_record("star-growth",
                                          {{"b_min", std::to_string(rep.b_min)},
                                           {"b_max", std::to_string(rep.b_max)},
                                           {"depth", std::to_string(rep.depth)},
                                           {"checks", std::to_string(rep.checks)}},
                                          rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
        {
            auto* cmd = stars->add_subcommand("pb", "primes observed among the iterates");
            auto b = std::make_shared<std::string>("2");
            auto depth = std::make_shared<unsigned>(4);
            auto bound = std::make_shared<std::uint64_t>(50);
            cmd->add_option("-b,--b", *b)->capture_default_str();
            cmd->add_option("--depth", *depth)->capture_default_str();
            cmd->add_option("--prime-bound", *bound)->capture_default_str();
            cmd->callback([&, b, depth, bound] {
                action = [&, b, depth, bound](Output& out) {
                    PbReport rep = pb_membership(parse_nat(*b), *depth, *bound, cfg.star_caps());
                    out.write(make_record(
                        "star-pb",
                        {{"b", rep.b.get_str()},
                         {"depth", std::to_string(rep.depth)},
                         {"prime_bound", std::to_string(rep.prime_bound)},
                         {"observed", join_nat_list(rep.observed)},
                         {"undetermined", join_nat_list(rep.undetermined)},
                         {"observed_all", join_nat_list(rep.observed_all)}}));
                    return kExitOk;
                };
            });
        }
    }

    // ---- verify ----
    {
        auto* ver = app.add_subcommand("verify", "report-style theorem checks");
        ver->require_subcommand(1);
        {
            auto* cmd = ver->add_subcommand("two-power",
                                            "one multiple of 2^v per interval, size < 2^(v+1)");
            auto bound = std::make_shared<std::uint64_t>(500);
            cmd->add_option("--bound", *bound)->capture_default_str();
            cmd->callback([&, bound] {
                action = [&, bound](Output& out) {
                    TwoPowerReport rep = verify_two_power_lemma(*bound);
                    for (const auto& v : rep.violations) {
                        out.write(make_record("two-power-violation", {{"detail", v}},
                                              RecordStatus::Violation));
                    }
                    out.write(make_record("two-power",
                                          {{"bound", std::to_string(rep.bound)},
                                           {"intervals", std::to_string(rep.intervals)}},
                                          rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
        {
            auto* cmd = ver->add_subcommand("primes",
                                            "prime in (n,2n); interval witness above the gap");
            auto cheb = std::make_shared<std::uint64_t>(100000);
            auto syl = std::make_shared<std::uint64_t>(2000);
            cmd->add_option("--bertrand-max", *cheb)->capture_default_str();
            cmd->add_option("--sylvester-max", *syl)->capture_default_str();
            cmd->callback([&, cheb, syl] {
                action = [&, cheb, syl](Output& out) {
                    PrimeTheoremsReport rep = verify_prime_theorems(*cheb, *syl);
                    for (const auto& v : rep.violations) {
                        out.write(make_record("prime-violation", {{"detail", v}},
                                              RecordStatus::Violation));
                    }
                    out.write(make_record(
                        "prime-theorems",
                        {{"bertrand_max", std::to_string(rep.chebyshev_max)},
                         {"bertrand_checked", std::to_string(rep.chebyshev_checked)},
                         {"interval_max", std::to_string(rep.sylvester_max)},
                         {"interval_checked", std::to_string(rep.sylvester_checked)}},
                        rep.ok() ? RecordStatus::Ok : RecordStatus::Violation));
                    return rep.ok() ? kExitOk : kExitViolation;
                };
            });
        }
        {
            auto* cmd = ver->add_subcommand("levels", "2^k distinct values summing to 1/b");
            auto b = std::make_shared<std::string>("2");
            auto k_max = std::make_shared<unsigned>(10);
            cmd->add_option("-b,--b", *b)->capture_default_str();
            cmd->add_option("--k-max", *k_max)->capture_default_str();
            cmd->callback([&, b, k_max] {
                action = [&, b, k_max](Output& out) {
                    Nat base = parse_nat(*b);
                    std::uint64_t violations = 0;
                    for (unsigned k = 0; k <= *k_max; ++k) {
                        LevelMultiset lvl = level_multiset(k, base, cfg.level_caps());
                        bool size_ok = lvl.values.size() == (std::size_t{1} << k);
                        bool simple_ok = base < 2 || lvl.simple();
                        bool sigma_ok = lvl.sigma_value() == PosRational::unit(base);
                        bool ok = size_ok && simple_ok && sigma_ok;
                        if (!ok) ++violations;
                        out.write(make_record(
                            "level-law",
                            {{"b", base.get_str()},
                             {"k", std::to_string(k)},
                             {"distinct", lvl.simple() ? "true" : "false"},
                             {"sigma", lvl.sigma_value().str()}},
                            ok ? RecordStatus::Ok : RecordStatus::Violation));
                    }
                    return violations == 0 ? kExitOk : kExitViolation;
                };
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output out(cfg);
        return action(out);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
}
