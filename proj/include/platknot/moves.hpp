#pragma once

#include <string>
#include <vector>

#include "platknot/plat.hpp"

namespace platknot {

/// The four link-preserving plat moves. I and IPrime swap the adjacent
/// top (resp. bottom) arcs at positions i, i+1. II and IIPrime put a
/// half twist under the top (resp. bottom) arc i, exchanging its
/// endpoints.
enum class MoveKind { I, IPrime, II, IIPrime };

struct Move {
    MoveKind kind;
    int position;  // arc index; 1..n-1 for arc swaps, 1..n for half twists

    bool operator==(const Move&) const = default;
};

std::string to_string(MoveKind kind);
std::string to_string(const Move& move);  // e.g. "I@2", "II'@1"

/// Applied moves, oldest first. Replaying them from the original plat
/// reproduces the result exactly.
using MoveRecord = std::vector<Move>;

struct NormalizationResult {
    PlatPresentation plat;
    MoveRecord moves;
};

/// Realize one move as a braid word rewrite on the same strand count.
/// Arc swaps prepend/append the pair interchange word
/// [2i, 2i+1, 2i-1, 2i]; half twists prepend/append [2i-1].
PlatPresentation apply_move(const PlatPresentation& plat, const Move& move);

/// Replay a record in order.
PlatPresentation apply_moves(const PlatPresentation& plat, const MoveRecord& moves);

/// Rewrite a plat into one with the same strand count whose closure is the
/// same link and which satisfies both conditions 1 and 2: arc swaps gather
/// each component's arcs into matching consecutive blocks, then half
/// twists fix every arc whose canonical orientation runs the wrong way.
NormalizationResult normalize_to_special(const PlatPresentation& plat);

}  // namespace platknot
