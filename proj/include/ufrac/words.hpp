#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ufrac/finset.hpp"
#include "ufrac/rational.hpp"

namespace ufrac {

// The two generators: d sends n to n+1, s sends n to n(n+1). Splitting a
// reciprocal 1/n into 1/(n+1) + 1/(n(n+1)) is exactly "replace n by dn, sn".
enum class Letter : unsigned char { Diamond, Star };

Nat apply_letter(Letter l, const Nat& n);

// Finite word over {d,s}. Text form reads left to right; the rightmost
// letter acts first, so "sd" maps 2 to 12 (d gives 3, then s gives 12).
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word parse(const std::string& text);  // over {d,s}; "" is the identity
    static Word diamonds(std::size_t count);
    static Word stars(std::size_t count);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    // Concatenation w.then_right(u) = w u: u acts first, then w.
    Word concat(const Word& right) const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

  private:
    std::vector<Letter> letters_;
};

// Applies the word with its rightmost letter first. Strictly increasing in n
// for every fixed nonempty word. n must be >= 1.
Nat apply(const Word& w, const Nat& n);

struct LevelCaps {
    unsigned max_k = 20;             // refuse levels with more than 2^max_k entries
    std::size_t digit_cap = 100000;  // per-value decimal digit bound
};

// The 2^k values wb over all length-k words, ascending, multiplicities kept.
// For b >= 2 the values are pairwise distinct; for b = 1 the repeats stay.
struct LevelMultiset {
    unsigned k = 0;
    Nat b;
    std::vector<Nat> values;

    bool simple() const;              // no repeated value
    PosRational sigma_value() const;  // exact reciprocal sum; equals 1/b
    FinSet to_finset() const;         // requires simple()
};

LevelMultiset level_multiset(unsigned k, const Nat& b, const LevelCaps& caps = {});

// Every word w with wb = n, found by peeling the trailing star block:
// any such w is d^(n-b) or d^(n-sk) s u with ub = k and k(k+1) <= n.
// Result is sorted by length, then lexicographically. Requires b >= 2, n >= b.
std::vector<Word> preimages(const Nat& b, const Nat& n);

struct LengthUniquenessViolation {
    Nat n;
    std::string detail;
};

struct LengthUniquenessReport {
    Nat b;
    Nat n_max;
    std::uint64_t values_checked = 0;
    std::uint64_t words_seen = 0;
    std::vector<LengthUniquenessViolation> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

// For every n in [b, n_max]: the words reaching n from b have pairwise
// distinct lengths, and the unique longest one is d^(n-b).
LengthUniquenessReport check_length_uniqueness(const Nat& b, const Nat& n_max);

}  // namespace ufrac
