#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ufrac/coprime.hpp"
#include "ufrac/exact_arith.hpp"
#include "ufrac/family.hpp"
#include "ufrac/primes.hpp"
#include "ufrac/records.hpp"
#include "ufrac/sigma_seq.hpp"
#include "ufrac/stars.hpp"
#include "ufrac/sylvester.hpp"
#include "ufrac/words.hpp"

// Acceptance suite: every check is exact rational or integer equality, no
// tolerances anywhere. Each criterion prints one [PASS]/[FAIL] line; the
// process exit code is the number of failed criteria.
using namespace ufrac;

namespace {

int g_failed = 0;

struct Criterion {
    std::string title;
    std::vector<std::string> notes;
    bool pass = true;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

void run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    c.title = title;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", c.pass ? "PASS" : "FAIL", number,
                c.title.c_str(), static_cast<long long>(ms));
    for (const auto& note : c.notes) std::printf("         - %s\n", note.c_str());
    if (!c.pass) ++g_failed;
    std::fflush(stdout);
}

std::string scan_stream(const char* which, std::uint64_t a, unsigned workers) {
    std::ostringstream out;
    RecordSink sink = stream_sink(out, OutputFormat::Json);
    ScanOptions opts;
    opts.workers = workers;
    opts.checkpoint_every = 16;
    std::string w(which);
    if (w == "tk") scan_theisinger_kurschak(a, a, sink, opts);
    if (w == "en") scan_erdos_niven(a, sink, opts);
    if (w == "quad") scan_quadruples(a, sink, opts);
    if (w == "nu") scan_nu_collisions(FinSet::parse("{2,3,5,7,11,13}"), 2, sink, opts);
    if (w == "nonint") {
        NonintegralityConfig cfg;
        cfg.m_max = a;
        cfg.d_max = 8;
        cfg.k_max = 8;
        cfg.power_vectors = 16;
        cfg.weighted_vectors = 16;
        scan_nonintegrality(cfg, sink, opts);
    }
    return out.str();
}

}  // namespace

int main() {
    std::printf("acceptance suite: exact arithmetic throughout, no tolerances\n");

    run(1, "word paradigm: dssddd applied to 1", [](Criterion& c) {
        Word w = Word::parse("dssddd");
        c.require(apply(w, Nat(1)) == 421, "dssddd(1) != 421");
        c.require(w.length() == 6, "|dssddd| != 6");
    });

    run(2, "level laws: 2^k distinct values summing to 1/b (b in {2,3,5}, k <= 10)",
        [](Criterion& c) {
            for (unsigned long b : {2ul, 3ul, 5ul}) {
                for (unsigned k = 0; k <= 10; ++k) {
                    LevelMultiset lvl = level_multiset(k, Nat(b));
                    c.require(lvl.values.size() == (std::size_t{1} << k),
                              "level size != 2^k at b=" + std::to_string(b) + " k=" +
                                  std::to_string(k));
                    c.require(lvl.simple(), "level not distinct at b=" + std::to_string(b) +
                                                " k=" + std::to_string(k));
                    c.require(lvl.sigma_value() == PosRational::unit(Nat(b)),
                              "level sigma != 1/b at b=" + std::to_string(b) + " k=" +
                                  std::to_string(k));
                }
            }
        });

    run(3, "length uniqueness for b=2 up to n=1000, exhaustive cross-check to 20",
        [](Criterion& c) {
            LengthUniquenessReport rep = check_length_uniqueness(Nat(2), Nat(1000));
            c.require(rep.ok(), "violations found below 1000");
            c.require(rep.values_checked == 999, "wrong value count");

            auto reached = oracles::words_reaching(Nat(2), Nat(20));
            for (Nat n(2); n <= 20; ++n) {
                std::set<std::string> brute;
                for (const Word& w : reached.at(n)) brute.insert(w.str());
                std::set<std::string> rec;
                for (const Word& w : preimages(Nat(2), n)) rec.insert(w.str());
                c.require(brute == rec, "preimage mismatch at n=" + n.get_str());
            }
        });

    run(4, "disjoint family blocks: a/b targets met exactly", [](Criterion& c) {
        AssembleResult two = assemble_family(make_target(Nat(2), Nat(2)), 1, 12);
        c.require(two.blocks.size() == 1 && two.blocks[0].elements.str() == "{2,3,6}",
                  "a=2,b=2 block is not {2,3,6}");
        c.require(two.blocks[0].sigma_value == PosRational(Nat(1), Nat(1)),
                  "sigma{2,3,6} != 1");

        AssembleResult three = assemble_family(make_target(Nat(3), Nat(2)), 1, 12);
        c.require(three.blocks.size() == 1 &&
                      three.blocks[0].sigma_value == PosRational(Nat(3), Nat(2)),
                  "a=3,b=2 sigma != 3/2");

        AssembleResult many = assemble_family(make_target(Nat(2), Nat(2)), 3, 14);
        c.require(many.blocks.size() == 3, "three blocks not achievable within k_max=14");
        for (std::size_t i = 0; i < many.blocks.size(); ++i) {
            c.require(many.blocks[i].sigma_value == PosRational(Nat(1), Nat(1)),
                      "block sigma != 1");
            for (std::size_t j = i + 1; j < many.blocks.size(); ++j) {
                c.require(many.blocks[i].elements.disjoint_with(many.blocks[j].elements),
                          "blocks overlap");
            }
        }
    });

    run(5, "sigma-sequence from {2}: printed terms, min trace, disjoint picks",
        [](Criterion& c) {
            std::map<std::uint64_t, std::string> want = {{2, "{3,6}"},
                                                         {3, "{4,6,12}"},
                                                         {4, "{5,6,12,20}"},
                                                         {5, "{5,7,12,20,42}"},
                                                         {6, "{6,7,12,20,30,42}"}};
            SeqRun probe = run_sigma_sequence(FinSet::parse("{2}"), 60, [&](const SeqState& st) {
                auto it = want.find(st.index);
                if (it != want.end() && st.elements.str() != it->second) {
                    // recorded through the closure; checked below
                    it->second = "MISMATCH:" + st.elements.str();
                }
            });
            for (const auto& [idx, text] : want) {
                c.require(text.rfind("MISMATCH:", 0) != 0,
                          "state " + std::to_string(idx) + " diverges: " + text);
            }

            std::uint64_t first_min7 = 0;
            for (const auto& [value, index] : probe.min_first_index) {
                if (value == 7) first_min7 = index;
            }
            c.require(first_min7 == 27,
                      "first index with min 7 is " + std::to_string(first_min7) +
                          ", not 27; the recursion that reproduces the printed terms keeps 6 "
                          "alive until its star child 42 is replaced at step 41 (the general "
                          "law: min first equals m at index m(m-1))");

            DisjointSubseq d = disjoint_subsequence(FinSet::parse("{2}"), 30);
            c.require(d.indices == (std::vector<std::uint64_t>{1, 2, 5}),
                      "greedy disjoint indices differ from [1,2,5]");
        });

    run(6, "sylvester powers of [1000,1004] and their exact division of delta",
        [](Criterion& c) {
            std::vector<SylvesterPower> expected = {{Nat(2), 3},  {Nat(5), 3},  {Nat(7), 1},
                                                    {Nat(11), 1}, {Nat(13), 1}, {Nat(17), 1},
                                                    {Nat(59), 1}, {Nat(167), 1}, {Nat(251), 1}};
            auto got = sylvester_powers(FinSet::interval(Nat(1000), Nat(1004)));
            if (got != expected) {
                std::string text;
                for (const auto& p : got) text += p.str() + " ";
                c.require(false,
                          "computed set is {" + text + "}: the listed nine powers plus 3, " +
                              "which qualifies since 1002 = 2*3*167 is the interval's only " +
                              "multiple of 3 and 3 exactly divides the lcm");
            }

            DeltaDivisibilityReport rep =
                verify_delta_divisibility(FinSet::interval(Nat(1000), Nat(1004)));
            for (const SylvesterPower& sp : expected) {
                c.require(valuation(sp.p, rep.delta_value) == sp.v,
                          sp.str() + " does not exactly divide delta");
            }
            c.require(rep.ok(), "delta divisibility failed");
        });

    run(7, "only [1,1] has an integral interval sum up to 2000", [](Criterion& c) {
        std::ostringstream out;
        RecordSink sink = stream_sink(out, OutputFormat::Json);
        ScanOptions opts;
        opts.workers = 2;
        ScanSummary sum = scan_theisinger_kurschak(2000, 2000, sink, opts);
        c.require(sum.counter("intervals") == 2001000, "wrong interval count");
        c.require(sum.counter("integral") == 1, "unexpected integral interval count");
        c.require(sum.violations == 0, "an interval beyond [1,1] summed to an integer");
    });

    run(8, "all interval sums inside [1,400] pairwise distinct", [](Criterion& c) {
        std::ostringstream out;
        RecordSink sink = stream_sink(out, OutputFormat::Json);
        ScanOptions opts;
        opts.workers = 2;
        ScanSummary sum = scan_erdos_niven(400, sink, opts);
        c.require(sum.counter("intervals") == 80200, "wrong interval count");
        c.require(sum.counter("collisions") == 0, "collision found");
        c.require(sum.violations == 0, "violations recorded");
    });

    run(9, "equal sylvester sets: exactly the two known pairs at 25, no violations to 300",
        [](Criterion& c) {
            std::vector<ScanRecord> records;
            RecordSink sink = [&](const ScanRecord& r) {
                if (r.kind == "quadruple") records.push_back(r);
            };
            ScanSummary at25 = scan_quadruples(25, sink, {});
            c.require(records.size() == 2, "expected exactly two quadruples at bound 25");
            if (records.size() == 2) {
                auto quad = [](const ScanRecord& r) {
                    return r.parameters[0].second + "," + r.parameters[1].second + "," +
                           r.parameters[2].second + "," + r.parameters[3].second;
                };
                c.require(quad(records[0]) == "4,7,20,21", "first quadruple differs");
                c.require(quad(records[1]) == "5,7,14,15", "second quadruple differs");
            }
            c.require(at25.violations == 0, "gap-condition violation at bound 25");

            std::ostringstream sink300;
            RecordSink s300 = stream_sink(sink300, OutputFormat::Json);
            ScanOptions opts;
            opts.workers = 2;
            ScanSummary at300 = scan_quadruples(300, s300, opts);
            c.require(at300.violations == 0, "gap-condition violation at bound 300");
        });

    run(10, "coprime ground {1,2,...,23}: injectivity and integrality over 1023 subsets",
        [](Criterion& c) {
            FinSet x = FinSet::parse("{1,2,3,5,7,11,13,17,19,23}");
            CoprimeInjectivityReport rep = verify_coprime_injectivity(x);
            c.require(rep.subsets == 1023, "wrong subset count");
            c.require(rep.sigma_collisions.empty(), "sigma collision found");
            c.require(rep.integral_subsets.size() == 1 &&
                          rep.integral_subsets[0].str() == "{1}",
                      "integral sigma somewhere beyond {1}");
            c.require(rep.delta_collisions.empty(),
                      std::to_string(rep.delta_collisions.size()) +
                          " delta collisions: with 1 in the ground set, delta(S) always "
                          "equals delta(S+{1}) (adding 1 adds an integer and keeps the "
                          "denominator), e.g. delta{2} = 2 = delta{1,2}; delta injectivity "
                          "holds for ground sets without 1");
        });

    run(11, "numerator studies: collisions at 16 and 18, lower bound, first-k-primes laws",
        [](Criterion& c) {
            auto cols = nu_collisions(FinSet::parse("{2,3,5,7,11,13}"), 2);
            bool c16 = false, c18 = false;
            for (const auto& col : cols) {
                if (col.a.str() == "{3,13}" && col.b.str() == "{5,11}" && col.nu_value == 16) {
                    c16 = true;
                }
                if (col.a.str() == "{5,13}" && col.b.str() == "{7,11}" && col.nu_value == 18) {
                    c18 = true;
                }
            }
            c.require(c16, "missing collision {3,13} ~ {5,11} at 16");
            c.require(c18, "missing collision {5,13} ~ {7,11} at 18");

            // Lower bound on every scanned 2-subset of the pool.
            FinSet pool_set = FinSet::parse("{2,3,5,7,11,13}");
            const auto& pool = pool_set.elements();
            for (std::size_t i = 0; i < pool.size(); ++i) {
                for (std::size_t j = i + 1; j < pool.size(); ++j) {
                    FinSet pair(std::vector<Nat>{pool[i], pool[j]});
                    c.require(check_nu_lower_bound(pair).holds, "bound fails on " + pair.str());
                }
            }

            auto primes = sieve_primes(29);
            std::vector<Nat> firsts;
            for (auto p : primes) firsts.push_back(Nat(static_cast<unsigned long>(p)));
            for (std::size_t k = 2; k <= 10; ++k) {
                FinSet pk(std::vector<Nat>(firsts.begin(), firsts.begin() + k));
                Nat v = nu(pk);
                Nat rhs(static_cast<unsigned long>(k));
                for (std::size_t i = 0; i + 1 < k; ++i) rhs *= firsts[i];
                c.require(v > rhs, "growth bound fails at k=" + std::to_string(k));
                Factorization f = factor(v);
                c.require(f.complete(), "numerator failed to factor at k=" + std::to_string(k));
                for (const auto& [p, e] : f.factors) {
                    c.require(p > firsts[k - 1],
                              "prime divisor not above p_k at k=" + std::to_string(k));
                }
            }
        });

    run(12, "star dynamics to depth 6 for b in [2,10]: stabilization, growth, prime counts",
        [](Criterion& c) {
            for (unsigned long b = 2; b <= 10; ++b) {
                StarProfile p = exponent_profile(Nat(b), 6);
                c.require(p.complete(), "profile truncated at b=" + std::to_string(b));
                c.require(p.ok(), "stabilization failure at b=" + std::to_string(b));
            }
            StarGrowthReport rep = check_star_growth_and_primecount(2, 10, 6);
            c.require(rep.ok(), "growth or prime-count violation");
        });

    run(13, "classical checks: Bertrand, interval witnesses, nonintegral sums",
        [](Criterion& c) {
            PrimeTheoremsReport primes = verify_prime_theorems(100000, 2000);
            c.require(primes.ok(), "prime witness missing");
            c.require(primes.chebyshev_checked == 99999, "wrong Bertrand range");

            std::ostringstream out;
            RecordSink sink = stream_sink(out, OutputFormat::Json);
            ScanOptions opts;
            opts.workers = 2;
            NonintegralityConfig cfg;  // m in [2,50], d,k <= 50, 200 power vectors
            ScanSummary sum = scan_nonintegrality(cfg, sink, opts);
            c.require(sum.counter("cases") == 49 * 50 * 50 + 200, "wrong case count");
            c.require(sum.counter("skipped") == 0, "unexpected skipped cases");
            c.require(sum.violations == 0, "an excluded sum evaluated to an integer");
        });

    run(14, "determinism: worker count never changes a scan's byte stream", [](Criterion& c) {
        for (const char* which : {"tk", "en", "quad", "nu", "nonint"}) {
            std::uint64_t bound = std::string(which) == "quad" ? 60 : 40;
            std::string one = scan_stream(which, bound, 1);
            std::string three = scan_stream(which, bound, 3);
            c.require(!one.empty() && one == three,
                      std::string(which) + " stream changed with worker count");
        }
    });

    std::printf("acceptance: %d of 14 criteria passed\n", 14 - g_failed);
    if (g_failed) {
        std::printf("failed criteria carry verified analyses; see the notes above and the "
                    "project README\n");
    }
    return g_failed;
}
