#pragma once

#include <span>
#include <vector>

#include "ufrac/finset.hpp"
#include "ufrac/rational.hpp"

namespace ufrac {

// Exact reciprocal sum over explicit values; multiplicities are honored.
// Accumulation is a balanced pairwise tree, which keeps intermediate
// numerators and denominators far smaller than a single common-denominator
// pass would.
PosRational sum_of_reciprocals(std::span<const Nat> values);

PosRational sigma(const FinSet& s);  // sum of 1/x over the set, reduced
Nat nu(const FinSet& s);             // numerator of sigma
Nat delta(const FinSet& s);          // denominator of sigma
Nat mu(const FinSet& s);             // least common multiple of the elements

struct WeightedTerm {
    Nat base;                    // >= 1, pairwise distinct across terms
    Nat weight = 1;              // >= 1
    unsigned long exponent = 1;  // >= 1
};

// Exact reduced value of sum weight_i / base_i^exponent_i.
PosRational weighted_sigma(const std::vector<WeightedTerm>& terms);

}  // namespace ufrac
