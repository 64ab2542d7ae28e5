#include "ufrac/sylvester.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "ufrac/errors.hpp"
#include "ufrac/parallel.hpp"

namespace ufrac {

Interval::Interval(Nat m_, Nat n_) : m(std::move(m_)), n(std::move(n_)) {
    if (m < 1) throw std::domain_error("interval start must be >= 1");
    if (n < m) throw std::domain_error("interval end must be >= start");
}

unsigned valuation(const Nat& p, const Nat& n) {
    if (!is_prime(p)) throw std::domain_error("valuation base " + p.get_str() + " is not prime");
    if (n < 1) throw std::domain_error("valuation of n < 1");
    Nat rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<SylvesterPower> sylvester_powers(const FinSet& x, const FactorBudget& budget) {
    if (x.empty()) throw std::domain_error("sylvester powers of empty set");

    // Merge per-element factorizations into the lcm's prime exponents.
    std::map<Nat, unsigned> max_exp;
    for (const Nat& e : x.elements()) {
        Factorization f = factor(e, budget);
        if (!f.complete()) {
            throw resource_error("factoring budget: element " + e.get_str() +
                                 " left composite part " + f.unfactored.get_str());
        }
        for (const auto& [p, v] : f.factors) {
            auto [it, fresh] = max_exp.emplace(p, v);
            if (!fresh && v > it->second) it->second = v;
        }
    }

    std::vector<SylvesterPower> out;
    for (const auto& [p, v] : max_exp) {
        Nat pv = nat_pow(p, v);
        std::size_t multiples = 0;
        for (const Nat& e : x.elements()) {
            if (mpz_divisible_p(e.get_mpz_t(), pv.get_mpz_t())) ++multiples;
        }
        if (multiples == 1) out.push_back({p, v});
    }
    return out;  // ascending by prime via the map
}

TwoPowerReport verify_two_power_lemma(std::uint64_t bound) {
    if (bound < 2) throw std::domain_error("two-power check needs bound >= 2");
    TwoPowerReport rep;
    rep.bound = bound;
    auto val2 = [](std::uint64_t n) {
        return static_cast<unsigned>(__builtin_ctzll(n));
    };
    for (std::uint64_t m = 1; m <= bound; ++m) {
        unsigned v = val2(m);
        for (std::uint64_t n = m; n <= bound; ++n) {
            if (n > m) v = std::max(v, val2(n));
            ++rep.intervals;
            std::uint64_t pv = std::uint64_t{1} << v;
            std::uint64_t multiples = n / pv - (m - 1) / pv;
            if (multiples != 1) {
                rep.violations.push_back("[" + std::to_string(m) + "," + std::to_string(n) +
                                         "]: " + std::to_string(multiples) + " multiples of 2^" +
                                         std::to_string(v));
            }
            if (n - m + 1 >= 2 * pv) {
                rep.violations.push_back("[" + std::to_string(m) + "," + std::to_string(n) +
                                         "]: size " + std::to_string(n - m + 1) +
                                         " not below 2^" + std::to_string(v + 1));
            }
        }
    }
    return rep;
}

DeltaDivisibilityReport verify_delta_divisibility(const FinSet& x, const FactorBudget& budget) {
    DeltaDivisibilityReport rep;
    rep.x = x;
    rep.delta_value = delta(x);
    rep.powers = sylvester_powers(x, budget);
    for (const SylvesterPower& sp : rep.powers) {
        unsigned got = valuation(sp.p, rep.delta_value);
        if (got != sp.v) {
            rep.failures.push_back(sp.str() + " expected to exactly divide delta, found exponent " +
                                   std::to_string(got));
        }
    }
    return rep;
}

Nat bertrand_witness(std::uint64_t n) {
    if (n < 2) throw std::domain_error("witness search needs n >= 2");
    for (Nat p(static_cast<unsigned long>(n + 1)); p < 2 * Nat(static_cast<unsigned long>(n));
         ++p) {
        if (is_prime(p)) return p;
    }
    return Nat(0);
}

Nat sylvester_witness(std::uint64_t m, std::uint64_t n) {
    if (m < 2 || n < m || n >= 2 * m) {
        throw std::domain_error("witness needs 2 <= m <= n < 2m");
    }
    for (Nat p(static_cast<unsigned long>(n - m + 1)); p <= static_cast<unsigned long>(n); ++p) {
        if (!is_prime(p)) continue;
        // p divides the interval lcm iff a multiple of p lands in [m,n].
        Nat hi = (Nat(static_cast<unsigned long>(n)) / p) * p;
        if (hi >= static_cast<unsigned long>(m)) return p;
    }
    return Nat(0);
}

PrimeTheoremsReport verify_prime_theorems(std::uint64_t chebyshev_max,
                                          std::uint64_t sylvester_max) {
    if (chebyshev_max < 2) throw std::domain_error("chebyshev bound must be >= 2");
    PrimeTheoremsReport rep;
    rep.chebyshev_max = chebyshev_max;
    rep.sylvester_max = sylvester_max;

    std::uint64_t sieve_to = std::max(2 * chebyshev_max, sylvester_max) + 1;
    std::vector<std::uint64_t> primes = sieve_primes(sieve_to);

    for (std::uint64_t n = 2; n <= chebyshev_max; ++n) {
        auto it = std::upper_bound(primes.begin(), primes.end(), n);
        ++rep.chebyshev_checked;
        if (it == primes.end() || *it >= 2 * n) {
            rep.violations.push_back("no prime strictly between " + std::to_string(n) + " and " +
                                     std::to_string(2 * n));
        }
    }

    for (std::uint64_t n = 2; n <= sylvester_max; ++n) {
        for (std::uint64_t m = n / 2 + 1; m <= n; ++m) {
            ++rep.sylvester_checked;
            std::uint64_t gap = n - m;
            auto it = std::upper_bound(primes.begin(), primes.end(), gap);
            bool found = false;
            for (; it != primes.end() && *it <= n; ++it) {
                if ((n / *it) * *it >= m) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.violations.push_back("no prime above " + std::to_string(gap) +
                                         " divides lcm[" + std::to_string(m) + "," +
                                         std::to_string(n) + "]");
            }
        }
    }
    return rep;
}

// ---- scans ----

namespace {

struct UnitOutput {
    std::vector<ScanRecord> records;
    std::vector<std::pair<const char*, std::uint64_t>> counts;
};

std::string u64str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

ScanSummary scan_theisinger_kurschak(std::uint64_t m_max, std::uint64_t n_max,
                                     const RecordSink& sink, const ScanOptions& opts) {
    if (m_max < 1 || n_max < 1) throw std::domain_error("scan bounds must be >= 1");
    std::uint64_t units = std::min(m_max, n_max);
    ScanEmitter em("tk", units, {"intervals", "integral"}, sink, opts);

    auto unit_fn = [&](std::uint64_t u) {
        std::uint64_t m = u + 1;
        UnitOutput out;
        PosRational acc = PosRational::unit(Nat(static_cast<unsigned long>(m)));
        std::uint64_t intervals = 0;
        for (std::uint64_t n = m; n <= n_max; ++n) {
            if (n > m) acc = acc + PosRational::unit(Nat(static_cast<unsigned long>(n)));
            ++intervals;
            if (acc.is_integral()) {
                ScanRecord rec;
                rec.kind = "tk-integral";
                rec.parameters = {{"m", u64str(m)}, {"n", u64str(n)}};
                rec.payload = {{"sigma", acc.str()}};
                rec.status = (m == 1 && n == 1) ? RecordStatus::Ok : RecordStatus::Violation;
                out.records.push_back(std::move(rec));
            }
        }
        out.counts = {{"intervals", intervals},
                      {"integral", static_cast<std::uint64_t>(out.records.size())}};
        return out;
    };

    parallel_for_ordered(em.resume_from(), units, opts.workers, unit_fn,
                         [&](std::uint64_t u, UnitOutput&& out) {
                             for (auto& r : out.records) em.emit(std::move(r));
                             for (auto& [k, v] : out.counts) em.count(k, v);
                             em.unit_done(u);
                         });
    return em.finish();
}

ScanSummary scan_erdos_niven(std::uint64_t n_bound, const RecordSink& sink,
                             const ScanOptions& opts) {
    if (n_bound < 1) throw std::domain_error("scan bound must be >= 1");
    ScanEmitter em("erdos-niven", n_bound, {"intervals", "hash_groups", "collisions"}, sink, opts);

    // Join scan: every interval's value hash is needed before any collision
    // can be ruled out, so the table is rebuilt even when resuming.
    std::vector<std::vector<std::uint64_t>> hashes(n_bound + 1);
    parallel_for_ordered(0, n_bound, opts.workers,
                         [&](std::uint64_t u) {
                             std::uint64_t m = u + 1;
                             std::vector<std::uint64_t> row;
                             row.reserve(n_bound - m + 1);
                             PosRational acc = PosRational::unit(Nat(static_cast<unsigned long>(m)));
                             for (std::uint64_t n = m; n <= n_bound; ++n) {
                                 if (n > m) {
                                     acc = acc + PosRational::unit(Nat(static_cast<unsigned long>(n)));
                                 }
                                 constexpr unsigned long kMod = 0x1fffffffffffffffUL;
                                 std::uint64_t hn = mpz_fdiv_ui(acc.num().get_mpz_t(), kMod);
                                 std::uint64_t hd = mpz_fdiv_ui(acc.den().get_mpz_t(), kMod);
                                 row.push_back(hn * 0x9e3779b97f4a7c15ull ^
                                               (hd + 0x517cc1b727220a95ull + (hn << 6)));
                             }
                             return row;
                         },
                         [&](std::uint64_t u, std::vector<std::uint64_t>&& row) {
                             hashes[u + 1] = std::move(row);
                         });

    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> groups;
    for (std::uint64_t m = 1; m <= n_bound; ++m) {
        for (std::uint64_t n = m; n <= n_bound; ++n) {
            groups[hashes[m][n - m]].push_back(
                {static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n)});
        }
    }

    // Hash groups of size > 1 get re-verified with exact arithmetic; true
    // collisions are attributed to the later interval's m.
    std::uint64_t hash_groups = 0;
    std::map<std::uint64_t, std::vector<ScanRecord>> pending;  // by emission unit
    auto exact_sigma = [](std::uint32_t m, std::uint32_t n) {
        PosRational acc = PosRational::unit(Nat(static_cast<unsigned long>(m)));
        for (std::uint32_t i = m + 1; i <= n; ++i) {
            acc = acc + PosRational::unit(Nat(static_cast<unsigned long>(i)));
        }
        return acc;
    };
    for (auto& [h, members] : groups) {
        if (members.size() < 2) continue;
        ++hash_groups;
        std::sort(members.begin(), members.end());
        std::vector<PosRational> values;
        values.reserve(members.size());
        for (auto& [m, n] : members) values.push_back(exact_sigma(m, n));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (values[i] == values[j]) {
                    ScanRecord rec;
                    rec.kind = "en-collision";
                    rec.parameters = {{"m1", u64str(members[i].first)},
                                      {"n1", u64str(members[i].second)},
                                      {"m2", u64str(members[j].first)},
                                      {"n2", u64str(members[j].second)}};
                    rec.payload = {{"sigma", values[i].str()}};
                    rec.status = RecordStatus::Violation;
                    pending[members[j].first - 1].push_back(std::move(rec));
                }
            }
        }
    }
    if (em.resume_from() == 0) em.count("hash_groups", hash_groups);

    for (std::uint64_t u = em.resume_from(); u < n_bound; ++u) {
        std::uint64_t m = u + 1;
        em.count("intervals", n_bound - m + 1);
        auto it = pending.find(u);
        if (it != pending.end()) {
            std::sort(it->second.begin(), it->second.end(),
                      [](const ScanRecord& a, const ScanRecord& b) {
                          return a.parameters < b.parameters;
                      });
            for (auto& rec : it->second) {
                em.count("collisions", 1);
                em.emit(std::move(rec));
            }
        }
        em.unit_done(u);
    }
    return em.finish();
}

ScanSummary scan_quadruples(std::uint64_t bound, const RecordSink& sink,
                            const ScanOptions& opts) {
    if (bound < 4) throw std::domain_error("quadruple scan needs bound >= 4");
    std::uint64_t units = bound - 2;  // first-interval m runs over [2, bound-1]
    ScanEmitter em("quadruple", units, {"intervals", "equal_pairs"}, sink, opts);

    std::vector<std::uint64_t> primes = sieve_primes(bound);

    // Canonical encoding of the sylvester-power set of [m,n], built from the
    // incremental per-prime maxima of the element valuations.
    auto encode_row = [&](std::uint64_t m) {
        std::vector<std::string> row;  // index n-m-1
        std::vector<unsigned> vmax(primes.size(), 0);
        auto bump = [&](std::uint64_t value) {
            for (std::size_t i = 0; i < primes.size() && primes[i] <= value; ++i) {
                unsigned v = 0;
                std::uint64_t x = value;
                while (x % primes[i] == 0) {
                    x /= primes[i];
                    ++v;
                }
                if (v > vmax[i]) vmax[i] = v;
            }
        };
        bump(m);
        for (std::uint64_t n = m + 1; n <= bound; ++n) {
            bump(n);
            std::string enc;
            for (std::size_t i = 0; i < primes.size() && primes[i] <= n; ++i) {
                if (vmax[i] == 0) continue;
                std::uint64_t pv = 1;
                for (unsigned e = 0; e < vmax[i]; ++e) pv *= primes[i];
                std::uint64_t multiples = n / pv - (m - 1) / pv;
                if (multiples == 1) {
                    enc += std::to_string(primes[i]);
                    if (vmax[i] > 1) enc += "^" + std::to_string(vmax[i]);
                    enc += ",";
                }
            }
            row.push_back(std::move(enc));
        }
        return row;
    };

    std::vector<std::vector<std::string>> rows(units);
    parallel_for_ordered(0, units, opts.workers,
                         [&](std::uint64_t u) { return encode_row(u + 2); },
                         [&](std::uint64_t u, std::vector<std::string>&& row) {
                             rows[u] = std::move(row);
                         });

    std::unordered_map<std::string, std::vector<std::pair<std::uint32_t, std::uint32_t>>> groups;
    std::uint64_t intervals = 0;
    for (std::uint64_t u = 0; u < units; ++u) {
        std::uint64_t m = u + 2;
        for (std::uint64_t n = m + 1; n <= bound; ++n) {
            groups[rows[u][n - m - 1]].push_back(
                {static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n)});
            ++intervals;
        }
    }
    if (em.resume_from() == 0) em.count("intervals", intervals);

    // Group members arrive in (m, n) order; separated pairs become records
    // attributed to the first interval's m.
    std::map<std::uint64_t, std::vector<ScanRecord>> pending;
    for (auto& [enc, members] : groups) {
        if (members.size() < 2) continue;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto [m1, n1] = members[i];
                auto [m2, n2] = members[j];
                if (n1 >= m2) continue;  // overlapping or touching pattern; not a quadruple
                ScanRecord rec;
                rec.kind = "quadruple";
                rec.parameters = {{"m", u64str(m1)},
                                  {"n", u64str(n1)},
                                  {"m2", u64str(m2)},
                                  {"n2", u64str(n2)}};
                std::string powers = enc;
                if (!powers.empty()) powers.pop_back();  // trailing comma
                rec.payload = {{"powers", powers},
                               {"gap1", u64str(n1 - m1)},
                               {"gap2", u64str(n2 - m2)}};
                rec.status = (n1 - m1 <= n2 - m2) ? RecordStatus::Violation : RecordStatus::Ok;
                pending[m1 - 2].push_back(std::move(rec));
            }
        }
    }

    for (std::uint64_t u = em.resume_from(); u < units; ++u) {
        auto it = pending.find(u);
        if (it != pending.end()) {
            std::sort(it->second.begin(), it->second.end(),
                      [](const ScanRecord& a, const ScanRecord& b) {
                          auto key = [](const ScanRecord& r) {
                              return std::array<std::uint64_t, 3>{
                                  std::stoull(r.parameters[1].second),
                                  std::stoull(r.parameters[2].second),
                                  std::stoull(r.parameters[3].second)};
                          };
                          return key(a) < key(b);
                      });
            for (auto& rec : it->second) {
                em.count("equal_pairs", 1);
                em.emit(std::move(rec));
            }
        }
        em.unit_done(u);
    }
    return em.finish();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

ScanSummary scan_nonintegrality(const NonintegralityConfig& cfg, const RecordSink& sink,
                                const ScanOptions& opts) {
    if (cfg.m_min < 1 || cfg.m_max < cfg.m_min || cfg.d_max < 1 || cfg.k_max < 1) {
        throw std::domain_error("bad nonintegrality grid bounds");
    }
    std::uint64_t grid_units = cfg.m_max - cfg.m_min + 1;
    std::uint64_t units = grid_units + cfg.power_vectors + cfg.weighted_vectors;
    ScanEmitter em("nonintegrality", units, {"cases", "skipped"}, sink, opts);

    auto violation_record = [](std::string case_tag,
                               std::vector<std::pair<std::string, std::string>> params,
                               const PosRational& value) {
        ScanRecord rec;
        rec.kind = "nonintegrality";
        rec.parameters = std::move(params);
        rec.parameters.insert(rec.parameters.begin(), {"case", std::move(case_tag)});
        rec.payload = {{"sigma", value.str()}};
        rec.status = RecordStatus::Violation;
        return rec;
    };

    auto unit_fn = [&](std::uint64_t u) {
        UnitOutput out;
        std::uint64_t cases = 0, skipped = 0;
        if (u < grid_units) {
            // Progression grid: sum of 1/(m+dj), j < k.
            std::uint64_t m = cfg.m_min + u;
            for (std::uint64_t d = 1; d <= cfg.d_max; ++d) {
                for (std::uint64_t k = 1; k <= cfg.k_max; ++k) {
                    if (m == 1 && k == 1) {
                        ScanRecord rec;
                        rec.kind = "nonintegrality";
                        rec.parameters = {{"case", "progression"},
                                          {"m", u64str(m)},
                                          {"d", u64str(d)},
                                          {"k", u64str(k)}};
                        rec.payload = {{"result", "skipped (outside hypotheses)"}};
                        out.records.push_back(std::move(rec));
                        ++skipped;
                        continue;
                    }
                    std::vector<WeightedTerm> terms;
                    terms.reserve(k);
                    for (std::uint64_t j = 0; j < k; ++j) {
                        terms.push_back({Nat(static_cast<unsigned long>(m + d * j)), Nat(1), 1});
                    }
                    PosRational s = weighted_sigma(terms);
                    ++cases;
                    if (s.is_integral()) {
                        out.records.push_back(violation_record(
                            "progression",
                            {{"m", u64str(m)}, {"d", u64str(d)}, {"k", u64str(k)}}, s));
                    }
                }
            }
        } else if (u < grid_units + cfg.power_vectors) {
            // Random exponent vector over a progression: sum 1/(m+dj)^(a_j).
            std::uint64_t r = splitmix64(cfg.seed ^ (0xA000000 + u));
            std::uint64_t m = 2 + splitmix64(r + 1) % std::max<std::uint64_t>(cfg.m_max - 1, 1);
            std::uint64_t d = 1 + splitmix64(r + 2) % cfg.d_max;
            std::uint64_t k = 2 + splitmix64(r + 3) % 11;
            std::vector<WeightedTerm> terms;
            std::string exps;
            for (std::uint64_t j = 0; j < k; ++j) {
                unsigned long a =
                    1 + static_cast<unsigned long>(splitmix64(r + 100 + j) % cfg.max_exponent);
                terms.push_back({Nat(static_cast<unsigned long>(m + d * j)), Nat(1), a});
                if (j) exps += ",";
                exps += std::to_string(a);
            }
            PosRational s = weighted_sigma(terms);
            ++cases;
            if (s.is_integral()) {
                out.records.push_back(violation_record(
                    "power-vector",
                    {{"m", u64str(m)}, {"d", u64str(d)}, {"k", u64str(k)}, {"a", exps}}, s));
            }
        } else {
            // Random weights over an interval, odd weight on every even base.
            std::uint64_t r = splitmix64(cfg.seed ^ (0xB000000 + u));
            std::uint64_t m = 1 + splitmix64(r + 1) % 50;
            std::uint64_t len = splitmix64(r + 2) % 20;
            std::uint64_t n = m + len;
            if (m == 1 && n == 1) n = 2;  // the excluded singleton {1}
            std::vector<WeightedTerm> terms;
            std::string weights;
            for (std::uint64_t i = m; i <= n; ++i) {
                unsigned long a =
                    1 + static_cast<unsigned long>(splitmix64(r + 200 + i) % cfg.max_weight);
                if (i % 2 == 0 && a % 2 == 0) ++a;  // keep weights odd on even bases
                terms.push_back({Nat(static_cast<unsigned long>(i)),
                                 Nat(static_cast<unsigned long>(a)), 1});
                if (i > m) weights += ",";
                weights += std::to_string(a);
            }
            PosRational s = weighted_sigma(terms);
            ++cases;
            if (s.is_integral()) {
                out.records.push_back(violation_record(
                    "weighted-interval", {{"m", u64str(m)}, {"n", u64str(n)}, {"a", weights}}, s));
            }
        }
        out.counts = {{"cases", cases}, {"skipped", skipped}};
        return out;
    };

    parallel_for_ordered(em.resume_from(), units, opts.workers, unit_fn,
                         [&](std::uint64_t u, UnitOutput&& out) {
                             for (auto& r : out.records) em.emit(std::move(r));
                             for (auto& [k, v] : out.counts) em.count(k, v);
                             em.unit_done(u);
                         });
    return em.finish();
}

}  // namespace ufrac
