#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ufrac/nat.hpp"

namespace ufrac {

// Primes <= bound, ascending.
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

// Primality test. Deterministic (fixed Miller-Rabin bases 2..41) for every
// n below 3.317e24; larger inputs must additionally pass GMP's Baillie-PSW
// plus Miller-Rabin battery, for which no counterexample is known.
bool is_prime(const Nat& n);

using FactorMap = std::map<Nat, unsigned>;  // prime -> exponent, keys ascending

struct FactorBudget {
    std::uint64_t trial_bound = 100000;          // trial-divide by primes up to this
    std::uint64_t rho_iterations = 400'000'000;  // total Brent-rho work allowance
};

struct Factorization {
    FactorMap factors;
    Nat unfactored = 1;  // composite remainder if the budget ran out
    bool complete() const { return unfactored == 1; }
};

// Complete prime factorization within the budget: trial division, perfect
// power peeling, then Brent's cycle finding on what remains.
Factorization factor(const Nat& n, const FactorBudget& budget = {});

Nat factor_map_value(const FactorMap& m);        // product of p^e
std::string factor_map_str(const FactorMap& m);  // "2^3*5^3*7"

}  // namespace ufrac
