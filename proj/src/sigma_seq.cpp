#include "ufrac/sigma_seq.hpp"

#include <set>
#include <stdexcept>

#include "ufrac/errors.hpp"

namespace ufrac {

namespace {

// Scan upward from the minimum and stop at the first qualifier.
Nat replaceable_in(const std::set<Nat>& a) {
    for (const Nat& x : a) {
        if (!a.count(x + 1) && !a.count(x * (x + 1))) return x;
    }
    throw std::logic_error("no replaceable element; set invariant violated");
}

std::set<Nat> to_ordered(const FinSet& a) {
    return std::set<Nat>(a.elements().begin(), a.elements().end());
}

FinSet to_finset(const std::set<Nat>& a) {
    return FinSet(std::vector<Nat>(a.begin(), a.end()));
}

}  // namespace

Nat replaceable(const FinSet& a) {
    if (a.empty()) throw std::domain_error("replaceable element of empty set");
    auto s = to_ordered(a);
    return replaceable_in(s);
}

FinSet sigma_step(const FinSet& a) {
    if (a.empty()) throw std::domain_error("step on empty set");
    auto s = to_ordered(a);
    Nat r = replaceable_in(s);
    s.erase(r);
    s.insert(r + 1);
    s.insert(r * (r + 1));
    return to_finset(s);
}

SeqRun run_sigma_sequence(const FinSet& seed, std::uint64_t last_index,
                          const std::function<void(const SeqState&)>& on_state,
                          std::uint64_t index_cap) {
    if (seed.empty()) throw std::domain_error("sigma sequence needs a nonempty seed");
    if (last_index == 0) last_index = 1;

    SeqRun run;
    run.sigma_value = sigma(seed);
    if (last_index > index_cap) {
        run.truncated = true;
        last_index = index_cap;
    }

    std::set<Nat> a = to_ordered(seed);
    std::uint64_t index = 1;
    run.min_first_index.emplace_back(*a.begin(), index);

    while (true) {
        Nat r = replaceable_in(a);
        SeqState state;
        state.index = index;
        state.elements = to_finset(a);
        state.min_value = *a.begin();
        state.replaced = r;
        state.doomed = (r == state.min_value);
        if (state.doomed) run.doomed_events.emplace_back(index, r);
        if (on_state) on_state(state);

        if (index == last_index) {
            run.final_state = std::move(state);
            break;
        }
        a.erase(r);
        a.insert(r + 1);
        a.insert(r * (r + 1));
        ++index;
        if (*a.begin() != run.min_first_index.back().first) {
            run.min_first_index.emplace_back(*a.begin(), index);
        }
    }
    run.last_index = last_index;
    return run;
}

DisjointSubseq disjoint_subsequence(const FinSet& seed, std::uint64_t horizon,
                                    std::uint64_t index_cap) {
    if (seed.empty()) throw std::domain_error("sigma sequence needs a nonempty seed");
    if (horizon == 0) horizon = 1;
    if (horizon > index_cap) {
        throw resource_error("horizon cap: " + std::to_string(horizon) + " exceeds " +
                             std::to_string(index_cap));
    }

    DisjointSubseq out;
    out.horizon = horizon;
    std::set<Nat> a = to_ordered(seed);
    std::set<Nat> chosen_union(a);
    out.indices.push_back(1);

    for (std::uint64_t index = 2; index <= horizon; ++index) {
        Nat r = replaceable_in(a);
        a.erase(r);
        a.insert(r + 1);
        a.insert(r * (r + 1));

        bool disjoint = true;
        for (const Nat& x : a) {
            if (chosen_union.count(x)) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) {
            out.indices.push_back(index);
            chosen_union.insert(a.begin(), a.end());
        }
    }
    out.union_max = *chosen_union.rbegin();
    return out;
}

}  // namespace ufrac
