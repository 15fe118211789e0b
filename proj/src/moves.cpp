#include "platknot/moves.hpp"

#include <map>
#include <utility>

namespace platknot {

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::I:
            return "I";
        case MoveKind::IPrime:
            return "I'";
        case MoveKind::II:
            return "II";
        case MoveKind::IIPrime:
            return "II'";
    }
    throw InternalError("unknown move kind");
}

std::string to_string(const Move& move) {
    return to_string(move.kind) + "@" + std::to_string(move.position);
}

PlatPresentation apply_move(const PlatPresentation& plat, const Move& move) {
    const int n = plat.bridge_count();
    const int i = move.position;
    const bool is_swap = move.kind == MoveKind::I || move.kind == MoveKind::IPrime;
    const int max_pos = is_swap ? n - 1 : n;
    if (i < 1 || i > max_pos) {
        throw DomainError("move " + to_string(move) + " out of range for " +
                          std::to_string(n) + " arcs");
    }

    std::vector<int> block;
    if (is_swap) {
        block = {2 * i, 2 * i + 1, 2 * i - 1, 2 * i};
    } else {
        block = {2 * i - 1};
    }

    const bool prepend = move.kind == MoveKind::I || move.kind == MoveKind::II;
    const auto& old_letters = plat.braid().letters();
    std::vector<int> letters;
    letters.reserve(old_letters.size() + block.size());
    if (prepend) {
        letters.insert(letters.end(), block.begin(), block.end());
        letters.insert(letters.end(), old_letters.begin(), old_letters.end());
    } else {
        letters.insert(letters.end(), old_letters.begin(), old_letters.end());
        letters.insert(letters.end(), block.begin(), block.end());
    }
    return PlatPresentation(BraidWord(plat.strand_count(), std::move(letters)));
}

PlatPresentation apply_moves(const PlatPresentation& plat, const MoveRecord& moves) {
    PlatPresentation cur = plat;
    for (const Move& m : moves) {
        cur = apply_move(cur, m);
    }
    return cur;
}

namespace {

// Check that the arc partition induced by the maintained component keys
// matches a fresh trace of the current plat. Labels may differ between the
// two; the correspondence just has to be one-to-one.
void check_partition_consistency(const PlatPresentation& plat,
                                 const std::vector<int>& keys_top,
                                 const std::vector<int>& keys_bottom) {
    const LinkTrace fresh = trace_components(plat);
    std::map<int, int> key_to_fresh;
    std::map<int, int> fresh_to_key;
    auto relate = [&](int key, int fresh_comp) {
        const auto [it1, inserted1] = key_to_fresh.emplace(key, fresh_comp);
        const auto [it2, inserted2] = fresh_to_key.emplace(fresh_comp, key);
        if (it1->second != fresh_comp || it2->second != key) {
            throw InternalError("arc swap changed the component partition");
        }
        (void)inserted1;
        (void)inserted2;
    };
    const int n = plat.bridge_count();
    for (int i = 0; i < n; ++i) {
        relate(keys_top[static_cast<size_t>(i)],
               fresh.component_of_top_arc[static_cast<size_t>(i)]);
        relate(keys_bottom[static_cast<size_t>(i)],
               fresh.component_of_bottom_arc[static_cast<size_t>(i)]);
    }
}

// Bubble-sort one row of arcs into ascending key order, emitting one arc
// swap per adjacent transposition. Keys travel with their arcs; the target
// order is fixed from the input trace, so labels stay comparable across
// moves even though a fresh trace could number components differently.
void sort_arcs(PlatPresentation& plat, std::vector<int>& keys,
               std::vector<int>& other_keys, bool top_row, MoveRecord& record) {
    const int n = plat.bridge_count();
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int i = 1; i <= n - 1; ++i) {
            if (keys[static_cast<size_t>(i - 1)] > keys[static_cast<size_t>(i)]) {
                const Move m{top_row ? MoveKind::I : MoveKind::IPrime, i};
                plat = apply_move(plat, m);
                record.push_back(m);
                std::swap(keys[static_cast<size_t>(i - 1)], keys[static_cast<size_t>(i)]);
                if (top_row) {
                    check_partition_consistency(plat, keys, other_keys);
                } else {
                    check_partition_consistency(plat, other_keys, keys);
                }
                swapped = true;
            }
        }
    }
}

}  // namespace

NormalizationResult normalize_to_special(const PlatPresentation& plat) {
    const int n = plat.bridge_count();
    MoveRecord record;
    PlatPresentation cur = plat;

    // Gather each component's arcs into consecutive blocks, top row then
    // bottom row, in the component order of the input trace.
    const LinkTrace initial = trace_components(plat);
    std::vector<int> keys_top = initial.component_of_top_arc;
    std::vector<int> keys_bottom = initial.component_of_bottom_arc;
    sort_arcs(cur, keys_top, keys_bottom, /*top_row=*/true, record);
    sort_arcs(cur, keys_bottom, keys_top, /*top_row=*/false, record);

    // Half-twist every arc whose canonical orientation runs the wrong way.
    // The twists touch disjoint strand pairs, so one trace suffices; they
    // are applied in ascending arc order.
    const LinkTrace oriented = trace_components(cur);
    for (int i = 1; i <= n; ++i) {
        if (oriented.top_arc_direction[static_cast<size_t>(i - 1)] == ArcDirection::BtoA) {
            const Move m{MoveKind::II, i};
            cur = apply_move(cur, m);
            record.push_back(m);
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (oriented.bottom_arc_direction[static_cast<size_t>(i - 1)] == ArcDirection::AtoB) {
            const Move m{MoveKind::IIPrime, i};
            cur = apply_move(cur, m);
            record.push_back(m);
        }
    }

    if (!is_special(cur)) {
        throw InternalError("normalization did not reach a special presentation");
    }
    return NormalizationResult{std::move(cur), std::move(record)};
}

}  // namespace platknot
