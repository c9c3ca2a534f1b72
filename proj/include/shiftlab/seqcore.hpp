#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

/*
 * Cantor-metric distance between two windows, compared on [-L, L]:
 * d = 1/2^t with t = min{|i| : x(i) != y(i)}. Finite windows cannot certify
 * equality of the underlying sequences, so full agreement is reported as the
 * distinct "agree to L" state rather than distance 0.
 */
struct CantorDistance {
    std::optional<Index> t;  // disagreement index of least |i|; empty = agree on [-L,L]

    bool agrees_to_window() const { return !t.has_value(); }
    // 1/2^t, or 0.0 for the agree state (the value every refinement bounds from above).
    double value() const;
};

// Both windows must cover [-L, L]; throws std::invalid_argument otherwise.
CantorDistance cantor_distance(const BitWindow& x, const BitWindow& y, Index L);

// True iff x(j) = W(j) for j = 1..|W|. x must cover [1, |W|].
bool cylinder_contains(const Word& w, const BitWindow& x);

/*
 * Reachability search in the switch/shift move graph.
 *
 * Moves act on a window: a shift by ±1 translates the bounds (bits travel with
 * their positions), a switch at k swaps positions k, k+1 (both in bounds).
 * Both moves preserve the window's multiset of bits, so a target whose 1-count
 * cannot be assembled from the window is infeasible outright.
 *
 * The search is breadth-first; among same-length move lists the
 * lexicographically smallest is returned, ordering moves by kind name then
 * parameter: shift(-1) < shift(+1) < switch(k) ascending. A budget of
 * max_steps node expansions bounds the search; exhausting it is a failure,
 * not an error.
 */
struct SwMove {
    enum class Kind { Shift, Switch };
    Kind kind;
    Index param;  // shift amount (±1) or switch position

    friend bool operator==(const SwMove&, const SwMove&) = default;
};

enum class SwReachStatus { Reached, BudgetExhausted, Infeasible };

struct SwReachResult {
    SwReachStatus status;
    std::vector<SwMove> moves;  // meaningful only when Reached
    std::size_t expanded = 0;   // BFS nodes expanded
};

// Succeeds when positions 1..|target| of the moved window equal target.
SwReachResult sw_reach(const BitWindow& start, const Word& target, std::size_t max_steps);

// Applies a move list; throws if any move is invalid for the current bounds.
BitWindow apply_moves(const BitWindow& start, const std::vector<SwMove>& moves);

/*
 * Finite orbit-closure membership test: true iff every central block of x of
 * length 1, 3, ..., 2L+1 occurs as a contiguous block of J somewhere in
 * [-scan_window, scan_window]. x must cover [-L, L] and scan_window >= 2L+1.
 */
bool closure_contains(const Source& J, const BitWindow& x, Index L, Index scan_window);

}  // namespace shiftlab
