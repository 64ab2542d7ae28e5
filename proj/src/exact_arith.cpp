#include "ufrac/exact_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufrac {

PosRational sum_of_reciprocals(std::span<const Nat> values) {
    if (values.empty()) throw std::domain_error("reciprocal sum of empty collection");
    if (values.size() == 1) return PosRational::unit(values[0]);
    std::size_t mid = values.size() / 2;
    return sum_of_reciprocals(values.first(mid)) + sum_of_reciprocals(values.subspan(mid));
}

PosRational sigma(const FinSet& s) {
    if (s.empty()) throw std::domain_error("sigma of empty set");
    return sum_of_reciprocals(s.elements());
}

Nat nu(const FinSet& s) { return sigma(s).num(); }

Nat delta(const FinSet& s) { return sigma(s).den(); }

Nat mu(const FinSet& s) {
    if (s.empty()) throw std::domain_error("mu of empty set");
    Nat m = 1;
    for (const Nat& x : s.elements()) m = nat_lcm(m, x);
    return m;
}

namespace {

PosRational sum_tree(std::span<const PosRational> terms) {
    if (terms.size() == 1) return terms[0];
    std::size_t mid = terms.size() / 2;
    return sum_tree(terms.first(mid)) + sum_tree(terms.subspan(mid));
}

}  // namespace

PosRational weighted_sigma(const std::vector<WeightedTerm>& terms) {
    if (terms.empty()) throw std::domain_error("weighted sum of no terms");
    std::vector<Nat> bases;
    bases.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.base < 1) throw std::domain_error("weighted term base must be >= 1");
        if (t.weight < 1) throw std::domain_error("weighted term weight must be >= 1");
        if (t.exponent < 1) throw std::domain_error("weighted term exponent must be >= 1");
        bases.push_back(t.base);
    }
    std::sort(bases.begin(), bases.end());
    for (std::size_t i = 1; i < bases.size(); ++i) {
        if (bases[i - 1] == bases[i]) {
            throw std::domain_error("duplicate base " + bases[i].get_str() + " in weighted sum");
        }
    }
    std::vector<PosRational> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) {
        parts.emplace_back(t.weight, nat_pow(t.base, t.exponent));
    }
    return sum_tree(parts);
}

}  // namespace ufrac
