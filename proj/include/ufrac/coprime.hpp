#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ufrac/exact_arith.hpp"
#include "ufrac/finset.hpp"
#include "ufrac/primes.hpp"
#include "ufrac/records.hpp"
#include "ufrac/scan_driver.hpp"

namespace ufrac {

bool is_pairwise_coprime(const FinSet& x);

struct CoprimeInjectivityReport {
    FinSet ground;
    bool pairwise_coprime = false;
    std::uint64_t subsets = 0;
    std::vector<std::pair<FinSet, FinSet>> delta_collisions;  // expected empty
    std::vector<std::pair<FinSet, FinSet>> sigma_collisions;  // expected empty
    std::vector<FinSet> integral_subsets;                     // expected at most {1}
    bool ok() const;
};

// Enumerates every nonempty subset of a pairwise-coprime ground set (rank
// order: by size, then lexicographic) and checks that delta and sigma are
// injective and that only {1} sums to an integer.
CoprimeInjectivityReport verify_coprime_injectivity(const FinSet& x,
                                                    std::uint64_t subset_cap = 1u << 20);

struct NuCollision {
    unsigned size = 0;
    FinSet a;
    FinSet b;
    Nat nu_value;
};

// All unordered pairs of distinct size-k subsets of the pool with equal
// numerator. The streamed variant partitions work by leading element.
std::vector<NuCollision> nu_collisions(const FinSet& pool, unsigned subset_size,
                                       std::uint64_t cap = 1u << 22);
ScanSummary scan_nu_collisions(const FinSet& pool, unsigned subset_size, const RecordSink& sink,
                               const ScanOptions& opts = {}, std::uint64_t cap = 1u << 22);

struct NuHistogram {
    FinSet pool;
    std::uint64_t subsets = 0;
    std::vector<std::pair<Nat, std::uint64_t>> counts;  // numerator value -> subsets
};

// Frequency of each numerator value over all nonempty subsets of the pool.
// The range of the numerator map is an open question; this only observes.
NuHistogram nu_histogram(const FinSet& pool, std::uint64_t subset_cap = 1u << 20);

struct NuBoundReport {
    FinSet c;
    Nat nu_value;
    PosRational bound;  // |C| * prod(C) / max(C)^|C|
    bool holds = false;
};

// Exact comparison of nu(C) against its size/product lower bound.
NuBoundReport check_nu_lower_bound(const FinSet& c);

struct PrimeHunterResult {
    std::vector<Nat> powers;  // q_i^{e_i}
    Nat nu_value;
    bool coprime_to_inputs = false;
    Factorization nu_factors;  // candidate fresh primes
};

// nu over {q_1^{e_1}, ..., q_k^{e_k}} for distinct primes q_i: the result is
// coprime to every q_i, so its prime factors are new.
PrimeHunterResult prime_hunter(const std::vector<Nat>& primes,
                               const std::vector<unsigned long>& exponents,
                               const FactorBudget& budget = {});

}  // namespace ufrac
