#include "esbraid/braid.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using esbraid::BraidWord;
using esbraid::Permutation;

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    BraidWord w(strands);
    const int l = len(rng);
    for (int k = 0; k < l; ++k) w.append({idx(rng), coin(rng) ? 1 : -1});
    return w;
}

}  // namespace

TEST_CASE("parsing") {
    const BraidWord cube = BraidWord::parse("s1 s1 s1", 2);
    CHECK(cube.size() == 3);
    CHECK(cube.letters()[0] == esbraid::BraidLetter{1, 1});

    const BraidWord mixed = BraidWord::parse("s1 s2^-1", 3);
    CHECK(mixed.size() == 2);
    CHECK(mixed.letters()[1] == esbraid::BraidLetter{2, -1});

    CHECK_THROWS_AS((void)BraidWord::parse("s3", 3), std::out_of_range);
    CHECK_THROWS_AS((void)BraidWord::parse("s0", 3), std::out_of_range);
    CHECK_THROWS_AS((void)BraidWord::parse("t1", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)BraidWord::parse("s1^2", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)BraidWord::parse("s", 3), std::invalid_argument);
    CHECK(BraidWord::parse("", 3).size() == 0);
    CHECK(BraidWord::parse("   ", 3).size() == 0);
}

TEST_CASE("round trip through str") {
    const BraidWord w = BraidWord::parse("s1 s2^-1 s1", 3);
    CHECK(BraidWord::parse(w.str(), 3).letters() == w.letters());
}

TEST_CASE("exponent sum") {
    CHECK(BraidWord::parse("s1 s2^-1", 3).exponent_sum() == 0);
    CHECK(BraidWord::parse("s1 s1 s1", 2).exponent_sum() == 3);
    CHECK(BraidWord(3).exponent_sum() == 0);
}

TEST_CASE("induced permutation") {
    CHECK(permutation(BraidWord::parse("s1 s1", 2)).is_identity());

    // left-to-right: strand 1 moves to position 2 under s1, then to 3 under s2
    const Permutation p = permutation(BraidWord::parse("s1 s2", 3));
    CHECK(p.apply(0) == 2);
    CHECK(p.apply(1) == 0);
    CHECK(p.apply(2) == 1);
    CHECK(p.cycle_count() == 1);

    CHECK(permutation(BraidWord::parse("s1^-1", 2)) ==
          permutation(BraidWord::parse("s1", 2)));
}

TEST_CASE("closure component count") {
    CHECK(esbraid::closure_components(BraidWord(3)) == 3);
    CHECK(esbraid::closure_components(BraidWord::parse("s1 s1 s1", 2)) == 1);
    CHECK(esbraid::closure_components(BraidWord::parse("s1 s1", 2)) == 2);
}

TEST_CASE("permutation is a homomorphism") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
        const int strands = 2 + static_cast<int>(rng() % 5);
        const BraidWord u = random_word(rng, strands, 8);
        const BraidWord v = random_word(rng, strands, 8);
        CHECK(permutation(u.concat(v)) == permutation(u).then(permutation(v)));
    }
}

TEST_CASE("components ignore letter signs and stay within bounds") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 500; ++t) {
        const int strands = 2 + static_cast<int>(rng() % 5);
        const BraidWord w = random_word(rng, strands, 10);
        const int c = esbraid::closure_components(w);
        CHECK(c >= 1);
        CHECK(c <= strands);
        if (w.size() > 0) {
            auto letters = w.letters();
            const std::size_t pos = rng() % letters.size();
            letters[pos].sign = -letters[pos].sign;
            CHECK(esbraid::closure_components(BraidWord(strands, letters)) == c);
        }
    }
}
