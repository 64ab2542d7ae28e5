#pragma once

#include <string>
#include <vector>

#include "ufrac/nat.hpp"

namespace ufrac {

// Finite set of distinct positive integers, stored strictly ascending.
// Construction accepts unordered input but refuses duplicates and zeros:
// callers that really mean a multiset must say so elsewhere.
class FinSet {
  public:
    FinSet() = default;  // empty; most operations demand a nonempty set
    explicit FinSet(std::vector<Nat> elements);

    static FinSet interval(const Nat& m, const Nat& n);  // {m, m+1, ..., n}
    static FinSet parse(const std::string& text);        // "{a,b,c}"

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Nat>& elements() const { return elems_; }

    const Nat& min() const;
    const Nat& max() const;
    bool contains(const Nat& x) const;
    bool disjoint_with(const FinSet& other) const;
    FinSet union_disjoint(const FinSet& other) const;  // rejects overlap

    std::string str() const;  // "{a,b,c}" ascending decimal

    bool operator==(const FinSet&) const = default;
    bool operator<(const FinSet& o) const { return elems_ < o.elems_; }

  private:
    std::vector<Nat> elems_;
};

}  // namespace ufrac
