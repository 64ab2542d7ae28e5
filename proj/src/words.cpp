#include "ufrac/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ufrac/errors.hpp"
#include "ufrac/exact_arith.hpp"

namespace ufrac {

Nat apply_letter(Letter l, const Nat& n) {
    if (n < 1) throw std::domain_error("letters act on positive integers only");
    return l == Letter::Diamond ? Nat(n + 1) : Nat(n * (n + 1));
}

Word Word::parse(const std::string& text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == 'd') {
            letters.push_back(Letter::Diamond);
        } else if (c == 's') {
            letters.push_back(Letter::Star);
        } else {
            throw std::domain_error(std::string("word letters are 'd' and 's', got '") + c + "'");
        }
    }
    return Word(std::move(letters));
}

Word Word::diamonds(std::size_t count) {
    return Word(std::vector<Letter>(count, Letter::Diamond));
}

Word Word::stars(std::size_t count) { return Word(std::vector<Letter>(count, Letter::Star)); }

Word Word::concat(const Word& right) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + right.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), right.letters_.begin(), right.letters_.end());
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out += (l == Letter::Diamond ? 'd' : 's');
    return out;
}

Nat apply(const Word& w, const Nat& n) {
    if (n < 1) throw std::domain_error("words act on positive integers only");
    Nat v = n;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = apply_letter(*it, v);
    return v;
}

bool LevelMultiset::simple() const {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] == values[i]) return false;
    }
    return true;
}

PosRational LevelMultiset::sigma_value() const { return sum_of_reciprocals(values); }

FinSet LevelMultiset::to_finset() const {
    if (!simple()) {
        throw std::domain_error("level multiset of base " + b.get_str() + " at k=" +
                                std::to_string(k) + " has repeats and is not a set");
    }
    return FinSet(values);
}

LevelMultiset level_multiset(unsigned k, const Nat& b, const LevelCaps& caps) {
    if (b < 1) throw std::domain_error("level base must be >= 1");
    if (k > caps.max_k) {
        throw resource_error("level cap: k=" + std::to_string(k) + " exceeds max_k=" +
                             std::to_string(caps.max_k) + " (2^k values)");
    }
    LevelMultiset out;
    out.k = k;
    out.b = b;
    out.values = {b};
    for (unsigned level = 1; level <= k; ++level) {
        std::vector<Nat> next;
        next.reserve(out.values.size() * 2);
        for (const Nat& v : out.values) {
            Nat starred = v * (v + 1);
            if (approx_digits(starred) > caps.digit_cap) {
                throw resource_error("digit cap: value at level " + std::to_string(level) +
                                     " exceeds " + std::to_string(caps.digit_cap) + " digits");
            }
            next.push_back(v + 1);
            next.push_back(std::move(starred));
        }
        out.values = std::move(next);
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

namespace {

void preimages_rec(const Nat& b, const Nat& n, std::map<Nat, std::vector<Word>>& memo) {
    if (memo.count(n)) return;
    std::vector<Word> out;

    // The all-diamond word (the identity when n = b). Anything longer cannot
    // reach n, and anything else of the same length would need a star.
    Nat gap = n - b;
    if (!fits_u64(gap) || to_u64(gap) > 10'000'000) {
        throw resource_error("preimage cap: d-run of " + gap.get_str() + " letters");
    }
    out.push_back(Word::diamonds(to_u64(gap)));

    for (Nat k = b; k * (k + 1) <= n; ++k) {
        preimages_rec(b, k, memo);
        Nat run = n - k * (k + 1);
        Word head = Word::diamonds(to_u64(run)).concat(Word::stars(1));
        for (const Word& u : memo.at(k)) out.push_back(head.concat(u));
    }

    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x.letters() < y.letters();
    });
    memo.emplace(n, std::move(out));
}

}  // namespace

std::vector<Word> preimages(const Nat& b, const Nat& n) {
    if (b < 2) throw std::domain_error("preimages requires base >= 2");
    if (n < b) throw std::domain_error("no word decreases its argument: n < b");
    std::map<Nat, std::vector<Word>> memo;
    preimages_rec(b, n, memo);
    return memo.at(n);
}

LengthUniquenessReport check_length_uniqueness(const Nat& b, const Nat& n_max) {
    if (b < 2) throw std::domain_error("length uniqueness check requires base >= 2");
    LengthUniquenessReport report;
    report.b = b;
    report.n_max = n_max;

    std::map<Nat, std::vector<Word>> memo;
    for (Nat n = b; n <= n_max; ++n) {
        preimages_rec(b, n, memo);
        const auto& words = memo.at(n);
        ++report.values_checked;
        report.words_seen += words.size();

        for (std::size_t i = 1; i < words.size(); ++i) {
            if (words[i - 1].length() == words[i].length()) {
                report.violations.push_back(
                    {n, "equal lengths: " + words[i - 1].str() + " and " + words[i].str()});
            }
        }
        // Sorted by length, so the longest candidate is at the back.
        const Word expected_longest = Word::diamonds(to_u64(n - b));
        if (words.empty() || !(words.back() == expected_longest)) {
            report.violations.push_back({n, "longest word is not the all-d run"});
        }
        for (const Word& w : words) {
            if (apply(w, b) != n) {
                report.violations.push_back({n, "word " + w.str() + " does not reach n"});
            }
        }
    }
    return report;
}

}  // namespace ufrac
