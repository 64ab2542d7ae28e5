#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufrac/nat.hpp"
#include "ufrac/primes.hpp"

namespace ufrac {

struct StarCaps {
    std::size_t digit_cap = 100000;  // per-iterate decimal digit bound
    FactorBudget factor_budget{};
};

// k-fold iterate of n -> n(n+1). Doubly exponential: the result tops
// b^(2^k), so the digit cap refuses deep requests early.
Nat star_iterate(const Nat& b, unsigned k, std::size_t digit_cap = 100000);

struct StarProfileEntry {
    Nat prime;
    unsigned first_index = 0;  // least j with prime dividing iterate j
    unsigned exponent = 0;     // the exponent it enters with and keeps
};

struct StarProfile {
    Nat b;
    unsigned depth_requested = 0;
    unsigned depth_completed = 0;  // shorter when the factoring budget ran out
    std::vector<StarProfileEntry> entries;             // ascending by prime
    std::vector<std::string> stabilization_failures;   // expected empty
    bool complete() const { return depth_completed == depth_requested; }
    bool ok() const { return stabilization_failures.empty(); }
};

// Per-prime first appearance and exponent along b, sb, s^2 b, ...
// Each iterate multiplies the previous one by a coprime successor, so a
// prime's exponent is locked at first appearance; the profile re-verifies
// this by direct division at every later depth.
StarProfile exponent_profile(const Nat& b, unsigned depth, const StarCaps& caps = {});

struct StarGrowthReport {
    std::uint64_t b_min = 0;
    std::uint64_t b_max = 0;
    unsigned depth = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

// For every base in [b_min, b_max] and 1 <= k <= depth: s^k b > b^(2^k),
// and s^k b has at least k+1 distinct prime factors (at least 1 at k = 0).
StarGrowthReport check_star_growth_and_primecount(std::uint64_t b_min, std::uint64_t b_max,
                                                  unsigned depth, const StarCaps& caps = {});

struct PbReport {
    Nat b;
    unsigned depth = 0;
    std::uint64_t prime_bound = 0;
    std::vector<Nat> observed;      // primes <= bound dividing some iterate
    std::vector<Nat> undetermined;  // primes <= bound not seen yet (not excluded)
    std::vector<Nat> observed_all;  // every prime seen, any size
};

// Which primes up to a bound have shown up in the first `depth` iterates.
// Absence is inconclusive: deeper iterates may still reach them.
PbReport pb_membership(const Nat& b, unsigned depth, std::uint64_t prime_bound,
                       const StarCaps& caps = {});

}  // namespace ufrac
