#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufrac/exact_arith.hpp"
#include "ufrac/finset.hpp"
#include "ufrac/rational.hpp"
#include "ufrac/words.hpp"

namespace ufrac {

// Level sets of a common base at ascending indices, pairwise disjoint.
// Construction re-verifies both defining properties by exact computation.
struct DisjointFamily {
    Nat b;
    std::vector<unsigned> level_indices;
    std::vector<FinSet> members;  // members[i] holds the values of level_indices[i]
};

DisjointFamily make_disjoint_family(const Nat& b, const std::vector<unsigned>& level_indices,
                                    const LevelCaps& caps = {});

struct IndexSequence {
    std::vector<Nat> terms;
    bool truncated = false;
    std::string truncation_note;
};

// Index schedule k1 = 0, k_{j+1} = 1 + s^{k_j} b. Consecutive levels are
// separated by the growth bound itself (min of level k_{j+1} exceeds max of
// level k_j), so disjointness needs no search. The terms explode doubly
// exponentially; the sequence is cut once the next star iterate would pass
// digit_cap decimal digits.
IndexSequence growth_index_sequence(const Nat& b, std::size_t max_terms, std::size_t digit_cap);

struct GreedyLevels {
    std::vector<unsigned> indices;
    std::size_t requested = 0;
    unsigned k_max = 0;
    bool complete() const { return indices.size() == requested; }
};

// Smallest ascending level indices <= k_max whose level sets are pairwise
// disjoint, verified by exact intersection tests. May return fewer than
// `count`; the caller sees both numbers.
GreedyLevels greedy_disjoint_levels(const Nat& b, std::size_t count, unsigned k_max,
                                    const LevelCaps& caps = {});

// Target value a/b. The pair is kept verbatim (different pairs for the same
// rational give different families); the reduced value rides along.
struct RationalTarget {
    Nat a;
    Nat b;
    PosRational value;
};

RationalTarget make_target(Nat a, Nat b);  // requires b >= 2

enum class IndexStrategy { Greedy, Growth };

const char* to_string(IndexStrategy s);

struct FamilyBlock {
    std::size_t block_id = 0;              // 1-based
    std::vector<unsigned> level_indices;   // only with the greedy strategy
    std::vector<Nat> level_indices_big;    // growth strategy may exceed unsigned
    FinSet elements;
    PosRational sigma_value;
};

struct AssembleResult {
    RationalTarget target;
    IndexStrategy strategy = IndexStrategy::Greedy;
    std::vector<FamilyBlock> blocks;
    std::size_t requested = 0;
    std::string note;  // set when fewer blocks than requested were possible
    bool complete() const { return blocks.size() == requested; }
};

// Unions of `a` consecutive pairwise-disjoint level sets; every block sums
// to exactly a/b and the blocks are pairwise disjoint.
AssembleResult assemble_family(const RationalTarget& target, std::size_t count, unsigned k_max,
                               IndexStrategy strategy = IndexStrategy::Greedy,
                               const LevelCaps& caps = {});

}  // namespace ufrac
