#include "ufrac/coprime.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ufrac/errors.hpp"
#include "ufrac/parallel.hpp"

namespace ufrac {

bool is_pairwise_coprime(const FinSet& x) {
    if (x.empty()) throw std::domain_error("coprimality of empty set");
    const auto& e = x.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (nat_gcd(e[i], e[j]) != 1) return false;
        }
    }
    return true;
}

bool CoprimeInjectivityReport::ok() const {
    if (!delta_collisions.empty() || !sigma_collisions.empty()) return false;
    for (const FinSet& s : integral_subsets) {
        if (!(s.size() == 1 && s.min() == 1)) return false;
    }
    return true;
}

CoprimeInjectivityReport verify_coprime_injectivity(const FinSet& x, std::uint64_t subset_cap) {
    if (x.empty()) throw std::domain_error("injectivity check needs a nonempty ground set");
    CoprimeInjectivityReport rep;
    rep.ground = x;
    rep.pairwise_coprime = is_pairwise_coprime(x);

    std::size_t n = x.size();
    if (n >= 63 || ((std::uint64_t{1} << n) - 1) > subset_cap) {
        throw resource_error("subset cap: 2^" + std::to_string(n) + " - 1 subsets exceeds " +
                             std::to_string(subset_cap));
    }

    const auto& elems = x.elements();
    std::map<Nat, FinSet> by_delta;
    std::map<std::pair<Nat, Nat>, FinSet> by_sigma;

    // Rank order: size first, then lexicographic over the ascending elements.
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= n; ++size) {
        pick.clear();
        for (std::size_t i = 0; i < size; ++i) pick.push_back(i);
        while (true) {
            std::vector<Nat> sub;
            sub.reserve(size);
            for (std::size_t idx : pick) sub.push_back(elems[idx]);
            FinSet subset(std::move(sub));
            ++rep.subsets;

            PosRational s = sigma(subset);
            if (auto [it, fresh] = by_delta.emplace(s.den(), subset); !fresh) {
                rep.delta_collisions.emplace_back(it->second, subset);
            }
            if (auto [it, fresh] = by_sigma.emplace(std::make_pair(s.num(), s.den()), subset);
                !fresh) {
                rep.sigma_collisions.emplace_back(it->second, subset);
            }
            if (s.is_integral()) rep.integral_subsets.push_back(subset);

            // Advance to the next combination of this size.
            std::size_t i = size;
            bool done = true;
            while (i > 0) {
                --i;
                if (pick[i] != i + n - size) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return rep;
}

namespace {

Nat binomial(std::size_t n, std::size_t k) {
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// All size-k subsets of elems whose first (smallest) member is elems[lead].
template <typename Visit>
void subsets_with_leading(const std::vector<Nat>& elems, std::size_t lead, unsigned size,
                          Visit&& visit) {
    std::size_t n = elems.size();
    if (size == 0 || lead + size > n) return;
    std::vector<std::size_t> pick(size);
    pick[0] = lead;
    for (unsigned i = 1; i < size; ++i) pick[i] = lead + i;
    while (true) {
        std::vector<Nat> sub;
        sub.reserve(size);
        for (std::size_t idx : pick) sub.push_back(elems[idx]);
        visit(FinSet(std::move(sub)));

        std::size_t i = size;
        bool done = true;
        while (i > 1) {  // pick[0] stays fixed at lead
            --i;
            if (pick[i] != i + n - size) {
                ++pick[i];
                for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (size == 1 || done) break;
    }
}

}  // namespace

ScanSummary scan_nu_collisions(const FinSet& pool, unsigned subset_size, const RecordSink& sink,
                               const ScanOptions& opts, std::uint64_t cap) {
    if (pool.empty()) throw std::domain_error("collision scan needs a nonempty pool");
    if (subset_size < 1 || subset_size > pool.size()) {
        throw std::domain_error("subset size must lie in [1, |pool|]");
    }
    Nat total = binomial(pool.size(), subset_size);
    if (total > static_cast<unsigned long>(cap)) {
        throw resource_error("subset cap: C(" + std::to_string(pool.size()) + "," +
                             std::to_string(subset_size) + ") = " + total.get_str() +
                             " exceeds " + std::to_string(cap));
    }

    std::uint64_t units = pool.size() - subset_size + 1;  // by leading element
    ScanEmitter em("nu-collision", units, {"subsets", "collision_pairs", "noncoprime_pool"}, sink,
                   opts);
    if (em.resume_from() == 0 && !is_pairwise_coprime(pool)) em.count("noncoprime_pool", 1);

    const auto& elems = pool.elements();

    // Join scan: group every subset by its numerator (subsets arrive in rank
    // order, so group members are already sorted).
    std::map<Nat, std::vector<FinSet>> groups;
    std::uint64_t subsets = 0;
    for (std::uint64_t lead = 0; lead < units; ++lead) {
        subsets_with_leading(elems, lead, subset_size, [&](FinSet s) {
            ++subsets;
            groups[nu(s)].push_back(std::move(s));
        });
    }
    if (em.resume_from() == 0) em.count("subsets", subsets);

    // A pair is reported once its later member exists; order follows the
    // enumeration rank of that member.
    std::map<std::uint64_t, std::vector<ScanRecord>> pending;
    auto lead_of = [&](const FinSet& s) {
        for (std::uint64_t i = 0; i < elems.size(); ++i) {
            if (elems[i] == s.min()) return i;
        }
        throw std::logic_error("subset member not in pool");
    };
    for (const auto& [value, members] : groups) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                ScanRecord rec;
                rec.kind = "nu-collision";
                rec.parameters = {{"size", std::to_string(subset_size)}};
                rec.payload = {{"set_a", members[i].str()},
                               {"set_b", members[j].str()},
                               {"nu", value.get_str()}};
                rec.status = RecordStatus::Ok;  // collisions are findings, not violations
                pending[lead_of(members[j])].push_back(std::move(rec));
            }
        }
    }

    for (std::uint64_t u = em.resume_from(); u < units; ++u) {
        auto it = pending.find(u);
        if (it != pending.end()) {
            std::sort(it->second.begin(), it->second.end(),
                      [](const ScanRecord& a, const ScanRecord& b) {
                          return a.payload < b.payload;
                      });
            for (auto& rec : it->second) {
                em.count("collision_pairs", 1);
                em.emit(std::move(rec));
            }
        }
        em.unit_done(u);
    }
    return em.finish();
}

std::vector<NuCollision> nu_collisions(const FinSet& pool, unsigned subset_size,
                                       std::uint64_t cap) {
    std::vector<NuCollision> out;
    RecordSink sink = [&](const ScanRecord& r) {
        if (r.kind != "nu-collision") return;
        NuCollision c;
        c.size = subset_size;
        c.a = FinSet::parse(r.payload[0].second);
        c.b = FinSet::parse(r.payload[1].second);
        c.nu_value = parse_nat(r.payload[2].second);
        out.push_back(std::move(c));
    };
    scan_nu_collisions(pool, subset_size, sink, {}, cap);
    return out;
}

NuHistogram nu_histogram(const FinSet& pool, std::uint64_t subset_cap) {
    if (pool.empty()) throw std::domain_error("histogram needs a nonempty pool");
    std::size_t n = pool.size();
    if (n >= 63 || ((std::uint64_t{1} << n) - 1) > subset_cap) {
        throw resource_error("subset cap: 2^" + std::to_string(n) + " - 1 subsets exceeds " +
                             std::to_string(subset_cap));
    }
    NuHistogram hist;
    hist.pool = pool;
    const auto& elems = pool.elements();
    std::map<Nat, std::uint64_t> counts;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Nat> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) sub.push_back(elems[i]);
        }
        ++counts[nu(FinSet(std::move(sub)))];
        ++hist.subsets;
    }
    hist.counts.assign(counts.begin(), counts.end());
    return hist;
}

NuBoundReport check_nu_lower_bound(const FinSet& c) {
    if (c.empty()) throw std::domain_error("bound check needs a nonempty set");
    NuBoundReport rep;
    rep.c = c;
    rep.nu_value = nu(c);
    Nat prod = 1;
    for (const Nat& x : c.elements()) prod *= x;
    Nat size(static_cast<unsigned long>(c.size()));
    Nat denom = nat_pow(c.max(), static_cast<unsigned long>(c.size()));
    rep.bound = PosRational(size * prod, denom);
    // nu >= bound  <=>  nu * max^|C| >= |C| * prod
    rep.holds = rep.nu_value * denom >= size * prod;
    return rep;
}

PrimeHunterResult prime_hunter(const std::vector<Nat>& primes,
                               const std::vector<unsigned long>& exponents,
                               const FactorBudget& budget) {
    if (primes.empty() || primes.size() != exponents.size()) {
        throw std::domain_error("prime hunter needs matching prime and exponent lists");
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) {
            throw std::domain_error(primes[i].get_str() + " is not prime");
        }
        if (exponents[i] < 1) throw std::domain_error("exponents must be >= 1");
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            if (primes[i] == primes[j]) {
                throw std::domain_error("duplicate prime " + primes[i].get_str());
            }
        }
    }
    PrimeHunterResult res;
    std::vector<Nat> powers;
    powers.reserve(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        powers.push_back(nat_pow(primes[i], exponents[i]));
    }
    res.powers = powers;
    res.nu_value = nu(FinSet(std::move(powers)));
    res.coprime_to_inputs = true;
    for (const Nat& q : primes) {
        if (nat_gcd(res.nu_value, q) != 1) res.coprime_to_inputs = false;
    }
    res.nu_factors = res.nu_value == 1 ? Factorization{} : factor(res.nu_value, budget);
    return res;
}

}  // namespace ufrac
