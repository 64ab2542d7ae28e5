#include "ufrac/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufrac/errors.hpp"

namespace ufrac {

DisjointFamily make_disjoint_family(const Nat& b, const std::vector<unsigned>& level_indices,
                                    const LevelCaps& caps) {
    if (b < 2) throw std::domain_error("disjoint families need base >= 2");
    if (!std::is_sorted(level_indices.begin(), level_indices.end())) {
        throw std::domain_error("level indices must ascend");
    }
    DisjointFamily fam;
    fam.b = b;
    fam.level_indices = level_indices;
    PosRational expect = PosRational::unit(b);
    FinSet used;
    for (unsigned k : level_indices) {
        FinSet member = level_multiset(k, b, caps).to_finset();
        if (sigma(member) != expect) {
            throw std::logic_error("level " + std::to_string(k) + " does not sum to 1/" +
                                   b.get_str());
        }
        used = used.union_disjoint(member);  // rejects overlap
        fam.members.push_back(std::move(member));
    }
    return fam;
}

IndexSequence growth_index_sequence(const Nat& b, std::size_t max_terms, std::size_t digit_cap) {
    if (b < 2) throw std::domain_error("index sequence needs base >= 2");
    IndexSequence seq;
    if (max_terms == 0) return seq;
    seq.terms.push_back(Nat(0));  // the schedule always opens at level zero

    Nat k = 0;
    while (seq.terms.size() < max_terms) {
        // Next term is 1 + s^k b; compute the star iterate under the digit cap.
        Nat v = b;
        Nat step = 0;
        bool capped = false;
        while (step < k) {
            v = v * (v + 1);
            ++step;
            if (approx_digits(v) > digit_cap) {
                capped = true;
                break;
            }
        }
        if (capped) {
            seq.truncated = true;
            seq.truncation_note = "next term needs star iterate " + k.get_str() + " of " +
                                  b.get_str() + ", which passes " + std::to_string(digit_cap) +
                                  " digits at iterate " + step.get_str();
            break;
        }
        k = 1 + v;
        if (approx_digits(k) > digit_cap) {
            seq.truncated = true;
            seq.truncation_note =
                "next index exceeds " + std::to_string(digit_cap) + " decimal digits";
            break;
        }
        seq.terms.push_back(k);
    }
    return seq;
}

GreedyLevels greedy_disjoint_levels(const Nat& b, std::size_t count, unsigned k_max,
                                    const LevelCaps& caps) {
    if (b < 2) throw std::domain_error("greedy level search needs base >= 2");
    GreedyLevels out;
    out.requested = count;
    out.k_max = k_max;
    std::vector<Nat> used;  // ascending union of chosen levels
    for (unsigned k = 0; k <= k_max && out.indices.size() < count; ++k) {
        LevelMultiset lvl = level_multiset(k, b, caps);
        bool disjoint = true;
        {
            std::size_t i = 0, j = 0;
            while (i < lvl.values.size() && j < used.size()) {
                int c = cmp(lvl.values[i], used[j]);
                if (c == 0) {
                    disjoint = false;
                    break;
                }
                (c < 0) ? ++i : ++j;
            }
        }
        if (!disjoint) continue;
        std::vector<Nat> merged;
        merged.reserve(used.size() + lvl.values.size());
        std::merge(used.begin(), used.end(), lvl.values.begin(), lvl.values.end(),
                   std::back_inserter(merged));
        used = std::move(merged);
        out.indices.push_back(k);
    }
    return out;
}

RationalTarget make_target(Nat a, Nat b) {
    if (a < 1) throw std::domain_error("target numerator must be >= 1");
    if (b < 2) throw std::domain_error("target denominator must be >= 2");
    PosRational value(a, b);
    return RationalTarget{std::move(a), std::move(b), std::move(value)};
}

const char* to_string(IndexStrategy s) {
    return s == IndexStrategy::Greedy ? "greedy" : "growth";
}

namespace {

FamilyBlock fuse_block(std::size_t block_id, const std::vector<FinSet>& members,
                       std::size_t begin, std::size_t count, const RationalTarget& target) {
    FamilyBlock blk;
    blk.block_id = block_id;
    FinSet u;
    for (std::size_t i = begin; i < begin + count; ++i) u = u.union_disjoint(members[i]);
    blk.sigma_value = sigma(u);
    blk.elements = std::move(u);
    PosRational expect(target.a, target.b);
    if (blk.sigma_value != expect) {
        throw std::logic_error("block does not sum to the target value");
    }
    return blk;
}

}  // namespace

AssembleResult assemble_family(const RationalTarget& target, std::size_t count, unsigned k_max,
                               IndexStrategy strategy, const LevelCaps& caps) {
    AssembleResult res;
    res.target = target;
    res.strategy = strategy;
    res.requested = count;
    if (!fits_u64(target.a) || to_u64(target.a) > 1'000'000) {
        throw resource_error("block size cap: a = " + target.a.get_str());
    }
    std::size_t block_size = to_u64(target.a);
    std::size_t members_needed = block_size * count;

    std::vector<FinSet> members;
    std::vector<std::vector<Nat>> member_indices;
    if (strategy == IndexStrategy::Greedy) {
        GreedyLevels levels = greedy_disjoint_levels(target.b, members_needed, k_max, caps);
        DisjointFamily fam = make_disjoint_family(target.b, levels.indices, caps);
        members = std::move(fam.members);
        for (unsigned k : levels.indices) member_indices.push_back({Nat(k)});
        if (members.size() < members_needed) {
            res.note = "only " + std::to_string(members.size()) + " disjoint levels within k_max=" +
                       std::to_string(k_max);
        }
    } else {
        IndexSequence seq = growth_index_sequence(target.b, members_needed, caps.digit_cap);
        for (const Nat& k : seq.terms) {
            if (!fits_u64(k) || to_u64(k) > caps.max_k) {
                res.note = "index " + k.get_str() + " exceeds the level cap; schedule truncated";
                break;
            }
            members.push_back(level_multiset(static_cast<unsigned>(to_u64(k)), target.b, caps)
                                  .to_finset());
            member_indices.push_back({k});
        }
        if (res.note.empty() && seq.truncated) res.note = seq.truncation_note;
    }

    std::size_t usable_blocks = std::min(count, members.size() / block_size);
    for (std::size_t blk = 0; blk < usable_blocks; ++blk) {
        FamilyBlock fb = fuse_block(blk + 1, members, blk * block_size, block_size, target);
        for (std::size_t i = blk * block_size; i < (blk + 1) * block_size; ++i) {
            const Nat& k = member_indices[i][0];
            fb.level_indices_big.push_back(k);
            if (fits_u64(k) && to_u64(k) <= 0xffffffffull) {
                fb.level_indices.push_back(static_cast<unsigned>(to_u64(k)));
            }
        }
        res.blocks.push_back(std::move(fb));
    }

    // Blocks are unions of disjoint members, but re-verify pairwise.
    for (std::size_t i = 0; i < res.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < res.blocks.size(); ++j) {
            if (!res.blocks[i].elements.disjoint_with(res.blocks[j].elements)) {
                throw std::logic_error("assembled blocks overlap");
            }
        }
    }
    return res;
}

}  // namespace ufrac
