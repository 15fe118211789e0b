#include "platknot/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace platknot {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = static_cast<int>(images_.size());
    if (m == 0) {
        throw DomainError("permutation must act on at least one point");
    }
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int v : images_) {
        if (v < 1 || v > m) {
            throw DomainError("permutation image " + std::to_string(v) +
                              " outside {1,...," + std::to_string(m) + "}");
        }
        if (seen[static_cast<size_t>(v - 1)]) {
            throw DomainError("permutation repeats image " + std::to_string(v));
        }
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) {
        throw DomainError("permutation degree must be positive");
    }
    std::vector<int> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

int Permutation::operator()(int k) const {
    if (k < 1 || k > degree()) {
        throw DomainError("permutation applied to " + std::to_string(k) +
                          " outside {1,...," + std::to_string(degree()) + "}");
    }
    return images_[static_cast<size_t>(k - 1)];
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.degree() != degree()) {
        throw DomainError("cannot compose permutations of degrees " +
                          std::to_string(degree()) + " and " + std::to_string(next.degree()));
    }
    std::vector<int> images(images_.size());
    for (size_t k = 0; k < images_.size(); ++k) {
        images[k] = next.images_[static_cast<size_t>(images_[k] - 1)];
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (size_t k = 0; k < images_.size(); ++k) {
        images[static_cast<size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] != static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

int Permutation::cycle_count() const {
    std::vector<char> visited(images_.size(), 0);
    int cycles = 0;
    for (int k = 1; k <= degree(); ++k) {
        if (visited[static_cast<size_t>(k - 1)]) {
            continue;
        }
        ++cycles;
        for (int j = k; !visited[static_cast<size_t>(j - 1)];) {
            visited[static_cast<size_t>(j - 1)] = 1;
            j = images_[static_cast<size_t>(j - 1)];
        }
    }
    return cycles;
}

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
    if (strand_count_ < 2 || strand_count_ % 2 != 0) {
        throw DomainError("strand count must be even and at least 2, got " +
                          std::to_string(strand_count_));
    }
    for (int e : letters_) {
        const int idx = std::abs(e);
        if (idx < 1 || idx > strand_count_ - 1) {
            throw DomainError("letter " + std::to_string(e) + " out of range for " +
                              std::to_string(strand_count_) + " strands");
        }
    }
}

Permutation induced_permutation(const BraidWord& word) {
    const int m = word.strand_count();
    // occupant[p-1] is the strand (named by its top position) currently at
    // position p while scanning the word downward.
    std::vector<int> occupant(static_cast<size_t>(m));
    std::iota(occupant.begin(), occupant.end(), 1);
    for (int e : word.letters()) {
        const int i = std::abs(e);
        std::swap(occupant[static_cast<size_t>(i - 1)], occupant[static_cast<size_t>(i)]);
    }
    std::vector<int> images(static_cast<size_t>(m));
    for (int p = 1; p <= m; ++p) {
        images[static_cast<size_t>(occupant[static_cast<size_t>(p - 1)] - 1)] = p;
    }
    return Permutation(std::move(images));
}

BraidWord compose_words(const BraidWord& w1, const BraidWord& w2) {
    if (w1.strand_count() != w2.strand_count()) {
        throw DomainError("cannot compose words on " + std::to_string(w1.strand_count()) +
                          " and " + std::to_string(w2.strand_count()) + " strands");
    }
    std::vector<int> letters = w1.letters();
    letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
    return BraidWord(w1.strand_count(), std::move(letters));
}

BraidWord invert_word(const BraidWord& word) {
    std::vector<int> letters(word.letters().rbegin(), word.letters().rend());
    for (int& e : letters) {
        e = -e;
    }
    return BraidWord(word.strand_count(), std::move(letters));
}

}  // namespace platknot
