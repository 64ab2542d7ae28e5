#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufrac/exact_arith.hpp"
#include "ufrac/finset.hpp"
#include "ufrac/primes.hpp"
#include "ufrac/records.hpp"
#include "ufrac/scan_driver.hpp"

namespace ufrac {

// The consecutive run {m, m+1, ..., n}.
struct Interval {
    Nat m;
    Nat n;
    Interval(Nat m_, Nat n_);
    Nat count() const { return n - m + 1; }
    FinSet to_finset() const { return FinSet::interval(m, n); }
    std::string str() const { return "[" + m.get_str() + "," + n.get_str() + "]"; }
};

// The unique v with p^v dividing n but p^(v+1) not. p must be prime.
unsigned valuation(const Nat& p, const Nat& n);

struct SylvesterPower {
    Nat p;
    unsigned v = 1;
    Nat value() const { return nat_pow(p, v); }
    std::string str() const { return v == 1 ? p.get_str() : p.get_str() + "^" + std::to_string(v); }
    bool operator==(const SylvesterPower&) const = default;
    bool operator<(const SylvesterPower& o) const { return p < o.p || (p == o.p && v < o.v); }
};

// Prime powers p^v exactly dividing mu(x) that divide exactly one element.
// Every such power exactly divides delta(x) as well. Requires every element
// to factor within the budget.
std::vector<SylvesterPower> sylvester_powers(const FinSet& x, const FactorBudget& budget = {});

struct TwoPowerReport {
    std::uint64_t bound = 0;
    std::uint64_t intervals = 0;
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

// Over every interval inside [1, bound], with 2^v the largest power of two
// dividing its lcm: the interval holds exactly one multiple of 2^v and has
// fewer than 2^(v+1) elements.
TwoPowerReport verify_two_power_lemma(std::uint64_t bound);

struct DeltaDivisibilityReport {
    FinSet x;
    Nat delta_value;
    std::vector<SylvesterPower> powers;
    std::vector<std::string> failures;  // expected empty
    bool ok() const { return failures.empty(); }
};

// Checks valuation(p, delta(x)) == v for every sylvester power p^v of x.
DeltaDivisibilityReport verify_delta_divisibility(const FinSet& x, const FactorBudget& budget = {});

// Smallest prime strictly between n and 2n. Requires n >= 2.
Nat bertrand_witness(std::uint64_t n);

// Smallest prime > n-m dividing lcm[m,n]. Requires 2 <= m <= n < 2m.
// Returns 0 when none exists (never expected).
Nat sylvester_witness(std::uint64_t m, std::uint64_t n);

struct PrimeTheoremsReport {
    std::uint64_t chebyshev_max = 0;
    std::uint64_t sylvester_max = 0;
    std::uint64_t chebyshev_checked = 0;
    std::uint64_t sylvester_checked = 0;
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

// Bertrand witness for every 2 <= n <= chebyshev_max; interval witness for
// every 2 <= m <= n < 2m with n <= sylvester_max.
PrimeTheoremsReport verify_prime_theorems(std::uint64_t chebyshev_max, std::uint64_t sylvester_max);

// ---- resumable record-stream scans ----

// Hunts integral interval reciprocal sums over 1 <= m <= min(m_max, n),
// n <= n_max. The only expected hit is [1,1]; anything else is a violation.
ScanSummary scan_theisinger_kurschak(std::uint64_t m_max, std::uint64_t n_max,
                                     const RecordSink& sink, const ScanOptions& opts = {});

// Checks that the reciprocal sums of all intervals inside [1, n] are
// pairwise distinct. Collisions (never expected) are violations.
ScanSummary scan_erdos_niven(std::uint64_t n, const RecordSink& sink,
                             const ScanOptions& opts = {});

// Finds quadruples 1 < m < n < m' < n' <= bound with equal sylvester-power
// sets, flagging those with n-m <= n'-m' (conjectured impossible).
ScanSummary scan_quadruples(std::uint64_t bound, const RecordSink& sink,
                            const ScanOptions& opts = {});

struct NonintegralityConfig {
    std::uint64_t m_min = 2;  // arithmetic-progression grid: 1/m + 1/(m+d) + ...
    std::uint64_t m_max = 50;
    std::uint64_t d_max = 50;
    std::uint64_t k_max = 50;
    std::uint64_t power_vectors = 200;    // random exponent vectors over progressions
    std::uint64_t weighted_vectors = 0;   // random odd-on-even weights over intervals
    std::uint64_t seed = 1;
    unsigned long max_exponent = 4;
    unsigned long max_weight = 99;
};

// Evaluates each configured sum exactly and asserts it is not an integer.
// Cases outside the hypotheses are reported as skipped, not failed.
ScanSummary scan_nonintegrality(const NonintegralityConfig& cfg, const RecordSink& sink,
                                const ScanOptions& opts = {});

}  // namespace ufrac
