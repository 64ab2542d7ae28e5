#include "ufrac/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufrac {

std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i <= bound / i) {
            for (std::uint64_t j = i * i; j <= bound; j += i) {
                composite[j] = true;
                if (j > bound - i) break;  // overflow guard near the top
            }
        }
    }
    return primes;
}

namespace {

bool miller_rabin_witness(const Nat& n, const Nat& base, const Nat& d, unsigned long r) {
    // Returns true when `base` proves n composite.
    Nat a = base % n;
    if (a == 0) return false;
    Nat x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// The first 13 primes certify everything below 3,317,044,064,679,887,385,961,981.
const unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Nat& mr_certified_limit() {
    static const Nat limit("3317044064679887385961981");
    return limit;
}

}  // namespace

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Nat d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long b : kMrBases) {
        if (miller_rabin_witness(n, Nat(b), d, r)) return false;
    }
    if (n < mr_certified_limit()) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

namespace {

// Brent's variant of Pollard rho with batched gcds, on odd composite n.
// Returns a nontrivial factor, 1 when this c failed (caller picks another),
// or 0 when the iteration allowance ran out. iterations is spent in place.
Nat rho_brent(const Nat& n, unsigned long c, std::uint64_t& iterations) {
    const unsigned long batch = 128;
    Nat y(2), x, ys, q(1), g(1);
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long limit = std::min<unsigned long>(batch, r - k);
            if (iterations < limit) return Nat(0);
            iterations -= limit;
            for (unsigned long i = 0; i < limit; ++i) {
                y = (y * y + c) % n;
                Nat diff = x > y ? Nat(x - y) : Nat(y - x);
                if (diff != 0) q = (q * diff) % n;
            }
            g = nat_gcd(q, n);
            k += limit;
        }
        r *= 2;
    }
    if (g == n) {
        // The batch overshot; replay it one step at a time.
        g = 1;
        while (g == 1) {
            if (iterations == 0) return Nat(0);
            --iterations;
            ys = (ys * ys + c) % n;
            Nat diff = x > ys ? Nat(x - ys) : Nat(ys - x);
            g = diff == 0 ? n : nat_gcd(diff, n);
        }
    }
    return g == n ? Nat(1) : g;
}

void add_factor(FactorMap& m, const Nat& p, unsigned e) {
    auto [it, fresh] = m.emplace(p, e);
    if (!fresh) it->second += e;
}

// Splits n (coprime to every trial prime) into primes, recursively.
// Returns false when the budget ran out; the remainder lands in `leftover`.
bool split(const Nat& n, unsigned multiplicity, FactorMap& out, Nat& leftover,
           std::uint64_t& iterations) {
    if (n == 1) return true;
    if (is_prime(n)) {
        add_factor(out, n, multiplicity);
        return true;
    }
    // Perfect powers: rho converges poorly on p^k, peeling is cheap.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Nat root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                return split(root, multiplicity * static_cast<unsigned>(k), out, leftover,
                             iterations);
            }
        }
    }
    for (unsigned long c = 1;; c += 2) {
        Nat d = rho_brent(n, c, iterations);
        if (d == 0) {
            leftover *= nat_pow(n, multiplicity);
            return false;
        }
        if (d > 1 && d < n) {
            bool a = split(d, multiplicity, out, leftover, iterations);
            bool b = split(Nat(n / d), multiplicity, out, leftover, iterations);
            return a && b;
        }
    }
}

}  // namespace

Factorization factor(const Nat& n, const FactorBudget& budget) {
    if (n < 1) throw std::domain_error("factorization needs n >= 1");
    Factorization res;
    if (n == 1) return res;

    Nat rest = n;
    Nat sqrt_rest;
    mpz_sqrt(sqrt_rest.get_mpz_t(), rest.get_mpz_t());
    std::uint64_t trial_to =
        fits_u64(sqrt_rest) ? std::min(budget.trial_bound, to_u64(sqrt_rest) + 1)
                            : budget.trial_bound;
    for (std::uint64_t p : sieve_primes(trial_to)) {
        if (rest == 1) break;
        if (Nat(p) > sqrt_rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            add_factor(res.factors, Nat(p), e);
            mpz_sqrt(sqrt_rest.get_mpz_t(), rest.get_mpz_t());
        }
    }
    if (rest > 1) {
        if (Nat(trial_to) >= sqrt_rest || is_prime(rest)) {
            // No factor up to sqrt(rest) survived trial division.
            add_factor(res.factors, rest, 1);
        } else {
            std::uint64_t iterations = budget.rho_iterations;
            split(rest, 1, res.factors, res.unfactored, iterations);
        }
    }
    return res;
}

Nat factor_map_value(const FactorMap& m) {
    Nat v = 1;
    for (const auto& [p, e] : m) v *= nat_pow(p, e);
    return v;
}

std::string factor_map_str(const FactorMap& m) {
    std::string out;
    for (const auto& [p, e] : m) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

}  // namespace ufrac
