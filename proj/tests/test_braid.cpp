#include <doctest.h>

#include <vector>

#include "platknot/braid.hpp"
#include "platknot/errors.hpp"
#include "test_support.hpp"

using namespace platknot;

namespace {

// Independent oracle: follow a single strand through the word, one letter at
// a time.  No occupant array, no inverse bookkeeping.
int strand_end_position(const BraidWord& word, int start) {
    int pos = start;
    for (const int e : word.letters()) {
        const int i = e < 0 ? -e : e;
        if (pos == i) {
            pos = i + 1;
        } else if (pos == i + 1) {
            pos = i;
        }
    }
    return pos;
}

}  // namespace

TEST_CASE("permutation validates its image sequence") {
    CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({2, 3}), DomainError);
    CHECK_THROWS_AS(Permutation({}), DomainError);
    CHECK_NOTHROW(Permutation({2, 1, 3}));
}

TEST_CASE("permutation basics") {
    const Permutation id = Permutation::identity(4);
    CHECK(id.degree() == 4);
    CHECK(id.is_identity());
    CHECK(id.cycle_count() == 4);

    const Permutation cycle({4, 1, 2, 3});
    CHECK(cycle(1) == 4);
    CHECK(cycle(4) == 3);
    CHECK_FALSE(cycle.is_identity());
    CHECK(cycle.cycle_count() == 1);
    CHECK(cycle.then(cycle.inverse()) == id);
    CHECK(cycle.inverse().then(cycle) == id);

    const Permutation swap_front({2, 1, 3, 4});
    CHECK(swap_front.cycle_count() == 3);

    // then() applies the receiver first: (p.then(q))(k) = q(p(k)).
    const Permutation composed = swap_front.then(cycle);
    for (int k = 1; k <= 4; ++k) {
        CHECK(composed(k) == cycle(swap_front(k)));
    }
}

TEST_CASE("braid word validation") {
    CHECK_THROWS_AS(BraidWord(3, {}), DomainError);      // odd
    CHECK_THROWS_AS(BraidWord(0, {}), DomainError);
    CHECK_THROWS_AS(BraidWord(-4, {}), DomainError);
    CHECK_THROWS_AS(BraidWord(4, {0}), DomainError);     // no generator zero
    CHECK_THROWS_AS(BraidWord(4, {4}), DomainError);     // out of range
    CHECK_THROWS_AS(BraidWord(4, {-4}), DomainError);
    CHECK_NOTHROW(BraidWord(4, {1, -2, 3}));
    CHECK_NOTHROW(BraidWord(2, {}));
}

TEST_CASE("induced permutation of fixed words") {
    CHECK(induced_permutation(BraidWord(4, {1, 2, 3})) == Permutation({4, 1, 2, 3}));
    CHECK(induced_permutation(BraidWord(4, {1})) == Permutation({2, 1, 3, 4}));
    CHECK(induced_permutation(BraidWord(4, {2, 2})).is_identity());
    CHECK(induced_permutation(BraidWord(2, {})).is_identity());
    // The induced permutation ignores crossing signs.
    CHECK(induced_permutation(BraidWord(6, {3})) ==
          induced_permutation(BraidWord(6, {-3})));
}

TEST_CASE("induced permutation agrees with single-strand tracking") {
    testing::RandomPlatSource source(20260822);
    for (int trial = 0; trial < 200; ++trial) {
        const BraidWord word = source.next().braid();
        const Permutation pi = induced_permutation(word);
        for (int k = 1; k <= word.strand_count(); ++k) {
            CAPTURE(trial);
            CHECK(pi(k) == strand_end_position(word, k));
        }
    }
}

TEST_CASE("word inversion cancels the induced permutation") {
    testing::RandomPlatSource source(7);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidWord word = source.next().braid();
        const BraidWord cancelled = compose_words(word, invert_word(word));
        CHECK(induced_permutation(cancelled).is_identity());
    }
}

TEST_CASE("induced permutation is a homomorphism for composition") {
    testing::RandomPlatSource source(1729);
    for (int trial = 0; trial < 100; ++trial) {
        const PlatPresentation first = source.next();
        // Draw a second word on the same strands by reusing the generator.
        BraidWord second = source.next().braid();
        while (second.strand_count() != first.strand_count()) {
            second = source.next().braid();
        }
        const Permutation combined =
            induced_permutation(compose_words(first.braid(), second));
        CHECK(combined == induced_permutation(first.braid()).then(induced_permutation(second)));
    }
}

TEST_CASE("compose_words requires matching strand counts") {
    CHECK_THROWS_AS(compose_words(BraidWord(4, {1}), BraidWord(6, {1})), DomainError);
    const BraidWord joined = compose_words(BraidWord(4, {1}), BraidWord(4, {-2, 3}));
    CHECK(joined.letters() == std::vector<int>{1, -2, 3});
}

TEST_CASE("invert_word reverses and negates") {
    const BraidWord word(6, {1, -2, 5});
    CHECK(invert_word(word).letters() == std::vector<int>{-5, 2, -1});
    CHECK(invert_word(invert_word(word)) == word);
}
