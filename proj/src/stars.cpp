#include "ufrac/stars.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ufrac/errors.hpp"

namespace ufrac {

Nat star_iterate(const Nat& b, unsigned k, std::size_t digit_cap) {
    if (b < 1) throw std::domain_error("star iteration needs b >= 1");
    Nat v = b;
    for (unsigned j = 1; j <= k; ++j) {
        v = v * (v + 1);
        if (approx_digits(v) > digit_cap) {
            throw resource_error("digit cap: iterate " + std::to_string(j) + " of " +
                                 b.get_str() + " exceeds " + std::to_string(digit_cap) +
                                 " digits; last representable index is " + std::to_string(j - 1));
        }
    }
    return v;
}

namespace {

// Factors of every iterate up to `depth`, built incrementally: iterate j+1
// is iterate j times its successor, and consecutive integers are coprime,
// so only the successor needs fresh factoring at each step.
struct IterateChain {
    std::vector<Nat> iterates;                 // s^0 b .. s^last b
    std::vector<std::map<Nat, unsigned>> first_seen;  // fresh primes at each index
    unsigned last = 0;
    bool budget_hit = false;
};

IterateChain build_chain(const Nat& b, unsigned depth, const StarCaps& caps) {
    IterateChain chain;
    chain.iterates.push_back(b);
    {
        Factorization f = factor(b, caps.factor_budget);
        if (!f.complete()) {
            chain.budget_hit = true;
            chain.iterates.clear();
            return chain;
        }
        chain.first_seen.push_back(std::map<Nat, unsigned>(f.factors.begin(), f.factors.end()));
    }
    for (unsigned j = 1; j <= depth; ++j) {
        const Nat& prev = chain.iterates.back();
        Nat succ = prev + 1;
        if (nat_gcd(prev, succ) != 1) {
            throw std::logic_error("consecutive integers not coprime");  // unreachable
        }
        Factorization f = factor(succ, caps.factor_budget);
        if (!f.complete()) {
            chain.budget_hit = true;
            break;
        }
        Nat next = prev * succ;
        if (approx_digits(next) > caps.digit_cap) {
            throw resource_error("digit cap: iterate " + std::to_string(j) + " of " +
                                 b.get_str() + " exceeds " + std::to_string(caps.digit_cap) +
                                 " digits");
        }
        chain.iterates.push_back(std::move(next));
        chain.first_seen.push_back(std::map<Nat, unsigned>(f.factors.begin(), f.factors.end()));
        chain.last = j;
    }
    return chain;
}

}  // namespace

StarProfile exponent_profile(const Nat& b, unsigned depth, const StarCaps& caps) {
    if (b < 2) throw std::domain_error("exponent profile needs b >= 2");
    StarProfile prof;
    prof.b = b;
    prof.depth_requested = depth;

    IterateChain chain = build_chain(b, depth, caps);
    if (chain.iterates.empty()) return prof;  // even the base refused to factor
    prof.depth_completed = chain.last;

    std::map<Nat, StarProfileEntry> entries;
    for (unsigned j = 0; j <= chain.last; ++j) {
        for (const auto& [p, e] : chain.first_seen[j]) {
            // Primes of the successor are new: they cannot divide the
            // previous iterate, which all earlier primes divide.
            auto [it, fresh] = entries.emplace(p, StarProfileEntry{p, j, e});
            if (!fresh) {
                prof.stabilization_failures.push_back(
                    "prime " + p.get_str() + " reappeared as fresh at index " + std::to_string(j));
            }
        }
    }

    // Re-verify stabilization by direct division at every later depth.
    for (const auto& [p, entry] : entries) {
        for (unsigned j = entry.first_index; j <= chain.last; ++j) {
            Nat rest;
            unsigned got = static_cast<unsigned>(
                mpz_remove(rest.get_mpz_t(), chain.iterates[j].get_mpz_t(), p.get_mpz_t()));
            if (got != entry.exponent) {
                prof.stabilization_failures.push_back(
                    "prime " + p.get_str() + " has exponent " + std::to_string(got) +
                    " at index " + std::to_string(j) + ", expected " +
                    std::to_string(entry.exponent));
            }
        }
        prof.entries.push_back(entry);
    }
    return prof;
}

StarGrowthReport check_star_growth_and_primecount(std::uint64_t b_min, std::uint64_t b_max,
                                                  unsigned depth, const StarCaps& caps) {
    if (b_min < 2 || b_max < b_min) throw std::domain_error("growth check needs 2 <= b_min <= b_max");
    StarGrowthReport rep;
    rep.b_min = b_min;
    rep.b_max = b_max;
    rep.depth = depth;

    for (std::uint64_t bv = b_min; bv <= b_max; ++bv) {
        Nat b(static_cast<unsigned long>(bv));
        IterateChain chain = build_chain(b, depth, caps);
        if (chain.budget_hit || chain.last < depth) {
            rep.violations.push_back("base " + std::to_string(bv) +
                                     ": factoring budget exhausted before depth " +
                                     std::to_string(depth));
            continue;
        }
        std::size_t distinct = chain.first_seen[0].size();
        for (unsigned k = 0; k <= depth; ++k) {
            if (k > 0) {
                distinct += chain.first_seen[k].size();
                Nat lower;
                mpz_pow_ui(lower.get_mpz_t(), b.get_mpz_t(), 1ul << k);
                ++rep.checks;
                if (!(chain.iterates[k] > lower)) {
                    rep.violations.push_back("base " + std::to_string(bv) + ": iterate " +
                                             std::to_string(k) + " not above b^(2^" +
                                             std::to_string(k) + ")");
                }
            }
            ++rep.checks;
            std::size_t needed = k == 0 ? 1 : k + 1;
            if (distinct < needed) {
                rep.violations.push_back("base " + std::to_string(bv) + ": iterate " +
                                         std::to_string(k) + " has " + std::to_string(distinct) +
                                         " distinct primes, needs " + std::to_string(needed));
            }
        }
    }
    return rep;
}

PbReport pb_membership(const Nat& b, unsigned depth, std::uint64_t prime_bound,
                       const StarCaps& caps) {
    if (b < 2) throw std::domain_error("prime membership needs b >= 2");
    PbReport rep;
    rep.b = b;
    rep.depth = depth;
    rep.prime_bound = prime_bound;

    IterateChain chain = build_chain(b, depth, caps);
    std::map<Nat, bool> seen;
    for (unsigned j = 0; j <= chain.last && j < chain.first_seen.size(); ++j) {
        for (const auto& [p, e] : chain.first_seen[j]) seen.emplace(p, true);
    }
    for (const auto& [p, dummy] : seen) {
        rep.observed_all.push_back(p);
        if (p <= static_cast<unsigned long>(prime_bound)) rep.observed.push_back(p);
    }
    for (std::uint64_t q : sieve_primes(prime_bound)) {
        Nat qn(static_cast<unsigned long>(q));
        if (!seen.count(qn)) rep.undetermined.push_back(qn);
    }
    return rep;
}

}  // namespace ufrac
