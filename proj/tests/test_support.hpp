#pragma once

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "platknot/plat.hpp"

namespace platknot::testing {

// Deterministic stream of random plats for property tests: strand counts in
// {2,4,6,8}, word lengths 0..12, generator indices and signs uniform.
class RandomPlatSource {
public:
    explicit RandomPlatSource(unsigned seed) : rng_(seed) {}

    PlatPresentation next() {
        static constexpr int kStrandChoices[] = {2, 4, 6, 8};
        const int strand_count =
            kStrandChoices[std::uniform_int_distribution<int>(0, 3)(rng_)];
        const int length = std::uniform_int_distribution<int>(0, 12)(rng_);
        std::uniform_int_distribution<int> index(1, strand_count - 1);
        std::uniform_int_distribution<int> sign(0, 1);
        std::vector<int> letters;
        letters.reserve(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) {
            letters.push_back(sign(rng_) ? index(rng_) : -index(rng_));
        }
        return PlatPresentation(BraidWord(strand_count, std::move(letters)));
    }

private:
    std::mt19937 rng_;
};

// Sorted per-component top-arc counts; the move-invariant shape of {n_j}.
inline std::multiset<int> arc_count_multiset(const LinkTrace& trace) {
    return {trace.top_arc_count.begin(), trace.top_arc_count.end()};
}

// Sorted absolute pairwise linking numbers; orientation- and label-free.
inline std::multiset<int> abs_linking_multiset(const PlatPresentation& plat,
                                               const LinkTrace& trace) {
    const LinkingMatrix matrix = linking_matrix(plat, trace);
    std::multiset<int> out;
    for (int j = 1; j <= matrix.mu; ++j) {
        for (int k = j + 1; k <= matrix.mu; ++k) {
            out.insert(std::abs(matrix.linking(j, k)));
        }
    }
    return out;
}

}  // namespace platknot::testing
