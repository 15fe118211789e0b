#pragma once

#include <vector>

#include "platknot/braid.hpp"

namespace platknot {

/// Plat closure of an even-strand braid: top arc i joins top positions
/// 2i-1 (endpoint A_i) and 2i (endpoint B_i), bottom arc i joins the same
/// bottom positions (A'_i, B'_i), for i = 1,...,n with 2n strands.
class PlatPresentation {
public:
    explicit PlatPresentation(BraidWord braid) : braid_(std::move(braid)) {}

    const BraidWord& braid() const { return braid_; }
    int strand_count() const { return braid_.strand_count(); }

    /// n, the number of top (equivalently bottom) arcs.
    int bridge_count() const { return braid_.strand_count() / 2; }

    bool operator==(const PlatPresentation&) const = default;

private:
    BraidWord braid_;
};

/// Traversal direction of an arc under the canonical orientation.
/// AtoB runs from the odd endpoint (position 2i-1) to the even one.
enum class ArcDirection { AtoB, BtoA };

enum class StrandDirection { Down, Up };

/// Component structure of a plat closure. Components are numbered
/// 1,...,mu by ascending smallest top-arc index, and each is canonically
/// oriented so that its smallest-index top arc runs A to B.
struct LinkTrace {
    int mu = 0;
    std::vector<int> component_of_top_arc;           // arc i -> component, 1-based
    std::vector<int> component_of_bottom_arc;
    std::vector<int> top_arc_count;                  // per component
    std::vector<ArcDirection> top_arc_direction;
    std::vector<ArcDirection> bottom_arc_direction;
    std::vector<StrandDirection> strand_direction;   // indexed by top position

    /// Component of the strand starting at the given top position.
    int component_of_strand(int top_position) const {
        return component_of_top_arc[static_cast<size_t>((top_position + 1) / 2 - 1)];
    }

    bool operator==(const LinkTrace&) const = default;
};

/// Pairwise linking numbers under the canonical orientations.
/// Symmetric, zero diagonal by convention.
struct LinkingMatrix {
    int mu = 0;
    std::vector<std::vector<int>> entries;

    int linking(int j, int k) const;

    bool operator==(const LinkingMatrix&) const = default;
};

/// The two-tangle gluing data carried by a plat: the bridge count n and
/// the braid word whose induced homeomorphism glues the tangles.
struct DecompositionData {
    int bridge_count;
    BraidWord gluing_word;

    bool operator==(const DecompositionData&) const = default;
};

/// Walk the closure (strands plus arcs) and report components with their
/// canonical orientations.
LinkTrace trace_components(const PlatPresentation& plat);

/// True iff the top arcs of each component occupy one consecutive block,
/// the bottom arcs likewise, and the block orders agree.
bool is_condition_1(const PlatPresentation& plat, const LinkTrace& trace);

/// True iff the induced permutation maps odd positions to odd positions
/// (and hence even to even).
bool is_condition_2(const PlatPresentation& plat);

/// True iff the link can be oriented so that every top arc runs A to B
/// and every bottom arc runs B' to A'.
bool is_condition_2prime(const PlatPresentation& plat, const LinkTrace& trace);

/// Conditions 1 and 2 together.
bool is_special(const PlatPresentation& plat);
bool is_special(const PlatPresentation& plat, const LinkTrace& trace);

/// Signed-crossing count per component pair, halved.
LinkingMatrix linking_matrix(const PlatPresentation& plat, const LinkTrace& trace);

DecompositionData decomposition_data(const PlatPresentation& plat);

}  // namespace platknot
