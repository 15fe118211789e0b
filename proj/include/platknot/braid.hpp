#pragma once

#include <vector>

#include "platknot/errors.hpp"

namespace platknot {

/// A bijection of {1,...,m}, stored as its image sequence.
/// All positions are 1-based throughout the library.
class Permutation {
public:
    /// images[k-1] is the image of k. Throws DomainError unless the
    /// sequence is a bijection of {1,...,m}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of k, for 1 <= k <= degree().
    int operator()(int k) const;

    const std::vector<int>& images() const { return images_; }

    /// Apply *this first, then next: result(k) = next((*this)(k)).
    Permutation then(const Permutation& next) const;

    Permutation inverse() const;

    bool is_identity() const;

    /// Number of orbits, counted by explicit traversal.
    int cycle_count() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// A word in the Artin generators on an even number of strands.
/// Letter +i denotes sigma_i (the strand at position i crossing over the
/// strand at position i+1), -i its inverse. Words read top to bottom.
class BraidWord {
public:
    BraidWord(int strand_count, std::vector<int> letters);

    int strand_count() const { return strand_count_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    bool operator==(const BraidWord&) const = default;

private:
    int strand_count_;
    std::vector<int> letters_;
};

/// The permutation sending each top position to the bottom position of the
/// strand that starts there.
Permutation induced_permutation(const BraidWord& word);

/// Concatenation w1.w2 with w1 on top. Requires equal strand counts.
BraidWord compose_words(const BraidWord& w1, const BraidWord& w2);

/// Reversed letter sequence with all signs flipped; the group inverse.
BraidWord invert_word(const BraidWord& word);

}  // namespace platknot
