#include "platknot/plat.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

namespace platknot {

int LinkingMatrix::linking(int j, int k) const {
    if (j < 1 || j > mu || k < 1 || k > mu) {
        throw DomainError("component index out of range");
    }
    return entries[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
}

LinkTrace trace_components(const PlatPresentation& plat) {
    const int n = plat.bridge_count();
    const Permutation pi = induced_permutation(plat.braid());
    const Permutation pinv = pi.inverse();

    LinkTrace t;
    t.component_of_top_arc.assign(static_cast<size_t>(n), 0);
    t.component_of_bottom_arc.assign(static_cast<size_t>(n), 0);
    t.top_arc_direction.assign(static_cast<size_t>(n), ArcDirection::AtoB);
    t.bottom_arc_direction.assign(static_cast<size_t>(n), ArcDirection::AtoB);
    t.strand_direction.assign(static_cast<size_t>(2 * n), StrandDirection::Down);

    // Each component is a single cycle alternating arcs and strands.
    // Start at its smallest top arc, oriented A -> B, and walk until the
    // cycle returns to the A endpoint of the starting arc.
    for (int start = 1; start <= n; ++start) {
        if (t.component_of_top_arc[static_cast<size_t>(start - 1)] != 0) {
            continue;
        }
        const int comp = ++t.mu;
        t.component_of_top_arc[static_cast<size_t>(start - 1)] = comp;
        t.top_arc_direction[static_cast<size_t>(start - 1)] = ArcDirection::AtoB;

        int top_pos = 2 * start;  // leaving the starting arc at B
        const int step_limit = 8 * n + 4;
        for (int steps = 0;; ++steps) {
            if (steps > step_limit) {
                throw InternalError("component walk failed to close");
            }
            // Down the strand at the current top position.
            t.strand_direction[static_cast<size_t>(top_pos - 1)] = StrandDirection::Down;
            const int bottom_pos = pi(top_pos);

            // Across the bottom arc containing it.
            const int barc = (bottom_pos + 1) / 2;
            t.component_of_bottom_arc[static_cast<size_t>(barc - 1)] = comp;
            int exit_pos;
            if (bottom_pos % 2 == 1) {
                t.bottom_arc_direction[static_cast<size_t>(barc - 1)] = ArcDirection::AtoB;
                exit_pos = bottom_pos + 1;
            } else {
                t.bottom_arc_direction[static_cast<size_t>(barc - 1)] = ArcDirection::BtoA;
                exit_pos = bottom_pos - 1;
            }

            // Up the strand that ends at the exit position.
            const int up_top = pinv(exit_pos);
            t.strand_direction[static_cast<size_t>(up_top - 1)] = StrandDirection::Up;
            if (up_top == 2 * start - 1) {
                break;  // arrived at A of the starting arc
            }

            // Across the top arc containing the arrival position.
            const int tarc = (up_top + 1) / 2;
            t.component_of_top_arc[static_cast<size_t>(tarc - 1)] = comp;
            if (up_top % 2 == 1) {
                t.top_arc_direction[static_cast<size_t>(tarc - 1)] = ArcDirection::AtoB;
                top_pos = 2 * tarc;
            } else {
                t.top_arc_direction[static_cast<size_t>(tarc - 1)] = ArcDirection::BtoA;
                top_pos = 2 * tarc - 1;
            }
        }
    }

    t.top_arc_count.assign(static_cast<size_t>(t.mu), 0);
    for (int c : t.component_of_top_arc) {
        ++t.top_arc_count[static_cast<size_t>(c - 1)];
    }
    return t;
}

namespace {

// The sequence of distinct values in order of appearance, or nullopt if
// some value recurs after its run has ended.
std::optional<std::vector<int>> block_order(const std::vector<int>& comps, int mu) {
    std::vector<int> order;
    std::vector<char> closed(static_cast<size_t>(mu), 0);
    for (int v : comps) {
        if (!order.empty() && order.back() == v) {
            continue;
        }
        if (closed[static_cast<size_t>(v - 1)]) {
            return std::nullopt;
        }
        closed[static_cast<size_t>(v - 1)] = 1;
        order.push_back(v);
    }
    return order;
}

}  // namespace

bool is_condition_1(const PlatPresentation& plat, const LinkTrace& trace) {
    (void)plat;
    const auto top = block_order(trace.component_of_top_arc, trace.mu);
    const auto bottom = block_order(trace.component_of_bottom_arc, trace.mu);
    return top.has_value() && bottom.has_value() && *top == *bottom;
}

bool is_condition_2(const PlatPresentation& plat) {
    const Permutation pi = induced_permutation(plat.braid());
    for (int k = 1; k <= pi.degree(); k += 2) {
        if (pi(k) % 2 == 0) {
            return false;
        }
    }
    return true;
}

bool is_condition_2prime(const PlatPresentation& plat, const LinkTrace& trace) {
    const int n = plat.bridge_count();
    // A component has exactly two orientations: the canonical one and its
    // reverse. Check whether either directs every top arc A->B and every
    // bottom arc B'->A'.
    for (int c = 1; c <= trace.mu; ++c) {
        bool forward_ok = true;
        bool reverse_ok = true;
        for (int i = 1; i <= n; ++i) {
            if (trace.component_of_top_arc[static_cast<size_t>(i - 1)] == c) {
                if (trace.top_arc_direction[static_cast<size_t>(i - 1)] == ArcDirection::AtoB) {
                    reverse_ok = false;
                } else {
                    forward_ok = false;
                }
            }
            if (trace.component_of_bottom_arc[static_cast<size_t>(i - 1)] == c) {
                if (trace.bottom_arc_direction[static_cast<size_t>(i - 1)] == ArcDirection::BtoA) {
                    reverse_ok = false;
                } else {
                    forward_ok = false;
                }
            }
        }
        if (!forward_ok && !reverse_ok) {
            return false;
        }
    }
    return true;
}

bool is_special(const PlatPresentation& plat, const LinkTrace& trace) {
    return is_condition_1(plat, trace) && is_condition_2(plat);
}

bool is_special(const PlatPresentation& plat) {
    return is_special(plat, trace_components(plat));
}

LinkingMatrix linking_matrix(const PlatPresentation& plat, const LinkTrace& trace) {
    const int m = plat.strand_count();
    const int mu = trace.mu;

    std::vector<std::vector<int>> sign_sum(static_cast<size_t>(mu),
                                           std::vector<int>(static_cast<size_t>(mu), 0));

    std::vector<int> occupant(static_cast<size_t>(m));
    for (int p = 1; p <= m; ++p) {
        occupant[static_cast<size_t>(p - 1)] = p;
    }
    auto direction_factor = [&trace](int strand) {
        return trace.strand_direction[static_cast<size_t>(strand - 1)] == StrandDirection::Down
                   ? 1
                   : -1;
    };
    for (int e : plat.braid().letters()) {
        const int i = std::abs(e);
        const int s1 = occupant[static_cast<size_t>(i - 1)];
        const int s2 = occupant[static_cast<size_t>(i)];
        const int c1 = trace.component_of_strand(s1);
        const int c2 = trace.component_of_strand(s2);
        if (c1 != c2) {
            const int sign = (e > 0 ? 1 : -1) * direction_factor(s1) * direction_factor(s2);
            sign_sum[static_cast<size_t>(c1 - 1)][static_cast<size_t>(c2 - 1)] += sign;
            sign_sum[static_cast<size_t>(c2 - 1)][static_cast<size_t>(c1 - 1)] += sign;
        }
        std::swap(occupant[static_cast<size_t>(i - 1)], occupant[static_cast<size_t>(i)]);
    }

    LinkingMatrix lm;
    lm.mu = mu;
    lm.entries.assign(static_cast<size_t>(mu), std::vector<int>(static_cast<size_t>(mu), 0));
    for (int j = 0; j < mu; ++j) {
        for (int k = 0; k < mu; ++k) {
            if (j == k) {
                continue;
            }
            const int s = sign_sum[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (s % 2 != 0) {
                throw InternalError("inter-component crossing signs did not pair up");
            }
            lm.entries[static_cast<size_t>(j)][static_cast<size_t>(k)] = s / 2;
        }
    }
    return lm;
}

DecompositionData decomposition_data(const PlatPresentation& plat) {
    return DecompositionData{plat.bridge_count(), plat.braid()};
}

}  // namespace platknot
