#include "ufrac/words.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "check.hpp"
#include "oracles.hpp"
#include "ufrac/errors.hpp"
#include "ufrac/exact_arith.hpp"

using namespace ufrac;

namespace {

std::set<std::string> word_strings(const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const Word& w : ws) out.insert(w.str());
    return out;
}

}  // namespace

int main() {
    // Text format round-trip.
    CHECK(Word::parse("dssddd").str() == "dssddd");
    CHECK(Word::parse("").length() == 0);
    CHECK_THROWS(Word::parse("dxs"), std::domain_error);
    CHECK(Word::diamonds(4).str() == "dddd");

    // Application order: rightmost letter first.
    CHECK(apply(Word::parse("dssddd"), Nat(1)) == 421);
    CHECK(Word::parse("dssddd").length() == 6);
    CHECK(apply(Word(), Nat(17)) == 17);
    CHECK(apply(Word::parse("dddd"), Nat(2)) == 6);
    CHECK(apply(Word::parse("s"), Nat(2)) == 6);
    CHECK(apply(Word::parse("sd"), Nat(2)) == 12);  // d first: 3, then s: 12
    CHECK_THROWS(apply(Word::parse("d"), Nat(0)), std::domain_error);

    // Strict monotonicity in the argument.
    {
        std::uint64_t seed = 99;
        for (int iter = 0; iter < 60; ++iter) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            std::string text;
            for (int i = 0; i < static_cast<int>(seed % 7); ++i) {
                text += ((seed >> (i + 3)) & 1) ? 's' : 'd';
            }
            Word w = Word::parse(text);
            Nat n(static_cast<unsigned long>(1 + (seed % 50)));
            CHECK_MSG(apply(w, n) < apply(w, Nat(n + 1)), text);
        }
    }

    // The splitting identity that drives everything: 1/n = 1/dn + 1/sn.
    // At n = 1 the children coincide (d1 = s1 = 2), so the split is a
    // genuine multiset and only the multiset sum applies.
    for (unsigned long n = 2; n <= 400; ++n) {
        FinSet single(std::vector<Nat>{Nat(n)});
        FinSet split(std::vector<Nat>{Nat(n + 1), Nat(n * (n + 1))});
        CHECK(sigma(single) == sigma(split));
    }
    {
        std::vector<Nat> twice{Nat(2), Nat(2)};
        CHECK(sum_of_reciprocals(twice) == PosRational(Nat(1), Nat(1)));
        CHECK_THROWS(FinSet(twice), std::domain_error);
    }

    // Levels.
    CHECK(level_multiset(0, Nat(2)).values == std::vector<Nat>{Nat(2)});
    {
        LevelMultiset l2 = level_multiset(2, Nat(2));
        CHECK(l2.values == (std::vector<Nat>{Nat(4), Nat(7), Nat(12), Nat(42)}));
        CHECK(l2.simple());
        LevelMultiset l3 = level_multiset(3, Nat(2));
        CHECK(l3.values == (std::vector<Nat>{Nat(5), Nat(8), Nat(13), Nat(20), Nat(43), Nat(56),
                                             Nat(156), Nat(1806)}));
    }
    for (unsigned long b : {2ul, 3ul, 5ul}) {
        for (unsigned k = 0; k <= 8; ++k) {
            LevelMultiset lvl = level_multiset(k, Nat(b));
            CHECK(lvl.values.size() == (std::size_t{1} << k));
            CHECK_MSG(lvl.simple(), "level must be simple for b >= 2");
            CHECK(lvl.sigma_value() == PosRational(Nat(1), Nat(b)));
            CHECK(lvl.values.front() == Nat(b + k));                    // min = d^k b
            CHECK(lvl.values.back() == apply(Word::stars(k), Nat(b)));  // max = s^k b
        }
    }
    {
        // b = 1 keeps multiplicities: d1 = s1 = 2.
        LevelMultiset l1 = level_multiset(1, Nat(1));
        CHECK(l1.values == (std::vector<Nat>{Nat(2), Nat(2)}));
        CHECK(!l1.simple());
        CHECK(l1.sigma_value() == PosRational(Nat(1), Nat(1)));
        CHECK_THROWS(l1.to_finset(), std::domain_error);
    }
    {
        LevelCaps tight;
        tight.max_k = 3;
        CHECK_THROWS(level_multiset(4, Nat(2), tight), resource_error);
        LevelCaps digits;
        digits.digit_cap = 5;
        CHECK_THROWS(level_multiset(6, Nat(2), digits), resource_error);
    }

    // Preimages.
    CHECK(preimages(Nat(2), Nat(2)).size() == 1);
    CHECK(preimages(Nat(2), Nat(2)).front().empty());
    CHECK(word_strings(preimages(Nat(2), Nat(6))) == (std::set<std::string>{"dddd", "s"}));
    CHECK(word_strings(preimages(Nat(2), Nat(5))) == (std::set<std::string>{"ddd"}));
    CHECK_THROWS(preimages(Nat(1), Nat(5)), std::domain_error);
    CHECK_THROWS(preimages(Nat(3), Nat(2)), std::domain_error);

    // Exhaustive forward-search oracle agrees for every n up to 20.
    {
        auto reached = oracles::words_reaching(Nat(2), Nat(20));
        for (Nat n(2); n <= 20; ++n) {
            auto expect = word_strings(reached.at(n));
            auto got = word_strings(preimages(Nat(2), n));
            CHECK_MSG(expect == got, "n=" + n.get_str());
        }
    }
    {
        auto reached = oracles::words_reaching(Nat(3), Nat(25));
        for (Nat n(3); n <= 25; ++n) {
            CHECK_MSG(word_strings(reached.at(n)) == word_strings(preimages(Nat(3), n)),
                      "b=3 n=" + n.get_str());
        }
    }

    // Length uniqueness.
    {
        auto ws = preimages(Nat(2), Nat(6));
        CHECK(ws.front().length() == 1);  // s
        CHECK(ws.back().length() == 4);   // dddd, the unique longest
        LengthUniquenessReport r = check_length_uniqueness(Nat(2), Nat(200));
        CHECK(r.ok());
        CHECK(r.values_checked == 199);
        LengthUniquenessReport r3 = check_length_uniqueness(Nat(3), Nat(150));
        CHECK(r3.ok());
    }

    return testkit::finish("test_words");
}
