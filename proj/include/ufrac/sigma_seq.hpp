#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ufrac/exact_arith.hpp"
#include "ufrac/finset.hpp"

namespace ufrac {

// Least x in the set with both x+1 and x(x+1) absent. Such an x always
// exists (the maximum qualifies when nothing smaller does).
Nat replaceable(const FinSet& a);

// Swaps the replaceable x for {x+1, x(x+1)}. Grows the set by one element
// and leaves the reciprocal sum unchanged.
FinSet sigma_step(const FinSet& a);

struct SeqState {
    std::uint64_t index = 1;  // 1-based position in the sequence
    FinSet elements;
    Nat min_value;
    Nat replaced;        // the element this state gives up next
    bool doomed = false; // replaced == min: the value never reappears
};

struct SeqRun {
    PosRational sigma_value;  // constant along the whole trace
    SeqState final_state;
    std::vector<std::pair<Nat, std::uint64_t>> min_first_index;  // min value -> first index
    std::vector<std::pair<std::uint64_t, Nat>> doomed_events;    // (index, element)
    std::uint64_t last_index = 1;
    bool truncated = false;  // hit the index cap before reaching the request
};

// Runs the recursion from the seed up to and including state `last_index`
// (floor 1; last_index = 1 echoes the seed). Each state is handed to
// on_state before stepping, so long runs can stream instead of accumulate.
SeqRun run_sigma_sequence(const FinSet& seed, std::uint64_t last_index,
                          const std::function<void(const SeqState&)>& on_state = {},
                          std::uint64_t index_cap = 1'000'000);

struct DisjointSubseq {
    std::vector<std::uint64_t> indices;  // greedily selected, pairwise disjoint terms
    Nat union_max;                       // a secure next pick needs min above this
    std::uint64_t horizon = 0;
};

// Greedy scan: index 1 is always selected; afterwards the least index whose
// term shares no element with the union of the selected terms.
DisjointSubseq disjoint_subsequence(const FinSet& seed, std::uint64_t horizon,
                                    std::uint64_t index_cap = 1'000'000);

}  // namespace ufrac
