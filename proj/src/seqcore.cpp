#include "shiftlab/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace shiftlab {

double CantorDistance::value() const {
    if (!t.has_value()) return 0.0;
    return std::ldexp(1.0, -static_cast<int>(*t));
}

CantorDistance cantor_distance(const BitWindow& x, const BitWindow& y, Index L) {
    if (L < 0) throw std::invalid_argument("coverage radius must be nonnegative");
    if (!x.covers(-L, L) || !y.covers(-L, L))
        throw std::invalid_argument("both windows must cover [-L, L]");
    for (Index t = 0; t <= L; ++t) {
        if (x.at(t) != y.at(t) || x.at(-t) != y.at(-t)) return CantorDistance{t};
    }
    return CantorDistance{std::nullopt};
}

bool cylinder_contains(const Word& w, const BitWindow& x) {
    if (!x.covers(1, w.length())) throw std::invalid_argument("window must cover [1, |W|]");
    for (Index j = 1; j <= w.length(); ++j) {
        if (x.at(j) != w.at(j)) return false;
    }
    return true;
}

namespace {

// Stable hash key for a search state: window origin plus contents.
std::string state_key(Index lo, const std::vector<Bit>& bits) {
    std::string key = std::to_string(lo);
    key.push_back(':');
    for (Bit b : bits) key.push_back(static_cast<char>('0' + b));
    return key;
}

bool matches_target(Index lo, const std::vector<Bit>& bits, const Word& target) {
    const Index hi = lo + static_cast<Index>(bits.size()) - 1;
    if (lo > 1 || hi < target.length()) return false;
    for (Index j = 1; j <= target.length(); ++j) {
        if (bits[static_cast<std::size_t>(j - lo)] != target.at(j)) return false;
    }
    return true;
}

struct SearchNode {
    Index lo;
    std::vector<Bit> bits;
    std::size_t parent;  // index into the node pool
    SwMove move;         // move applied to parent to reach this node
};

}  // namespace

SwReachResult sw_reach(const BitWindow& start, const Word& target, std::size_t max_steps) {
    const Index size = start.size();

    // Both move kinds permute the window's bit multiset, so a target needing
    // more 1s (or 0s) than the window holds can never be assembled; nor can a
    // window shorter than the target ever cover positions 1..|target|.
    Index ones = 0;
    for (Bit b : start.bits()) ones += b;
    if (size < target.length() || target.ones() > ones || target.zeros() > size - ones)
        return SwReachResult{SwReachStatus::Infeasible, {}, 0};

    if (matches_target(start.lo(), start.bits(), target))
        return SwReachResult{SwReachStatus::Reached, {}, 0};

    std::vector<SearchNode> pool;
    pool.push_back(SearchNode{start.lo(), start.bits(), 0, SwMove{}});
    std::unordered_map<std::string, std::size_t> seen;
    seen.emplace(state_key(start.lo(), start.bits()), 0);

    std::deque<std::size_t> queue{0};
    std::size_t expanded = 0;

    auto reconstruct = [&pool](std::size_t at) {
        std::vector<SwMove> moves;
        while (at != 0) {
            moves.push_back(pool[at].move);
            at = pool[at].parent;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    };

    std::size_t goal = 0;  // 0 = not found (the start node is never a goal here)

    // Tries to enter a freshly generated state; fills `goal` on a match.
    auto visit = [&](std::size_t from, Index new_lo, std::vector<Bit>&& bits, SwMove move) {
        std::string key = state_key(new_lo, bits);
        auto [it, inserted] = seen.emplace(std::move(key), pool.size());
        if (!inserted) return false;
        pool.push_back(SearchNode{new_lo, std::move(bits), from, move});
        const std::size_t id = pool.size() - 1;
        if (matches_target(pool[id].lo, pool[id].bits, target)) {
            goal = id;
            return true;
        }
        queue.push_back(id);
        return false;
    };

    while (!queue.empty() && expanded < max_steps) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        ++expanded;

        // Neighbor order fixes the lexicographic tie-break among shortest
        // move lists: shift(-1), shift(+1), then switch(k) with k ascending.
        const Index cur_lo = pool[cur].lo;
        for (Index a : {Index{-1}, Index{+1}}) {
            std::vector<Bit> bits = pool[cur].bits;
            if (visit(cur, cur_lo + a, std::move(bits), SwMove{SwMove::Kind::Shift, a}))
                return SwReachResult{SwReachStatus::Reached, reconstruct(goal), expanded};
        }
        for (Index k = cur_lo; k < cur_lo + size - 1; ++k) {
            const auto idx = static_cast<std::size_t>(k - cur_lo);
            // Swapping equal bits is the identity; that state is this one.
            if (pool[cur].bits[idx] == pool[cur].bits[idx + 1]) continue;
            std::vector<Bit> bits = pool[cur].bits;
            std::swap(bits[idx], bits[idx + 1]);
            if (visit(cur, cur_lo, std::move(bits), SwMove{SwMove::Kind::Switch, k}))
                return SwReachResult{SwReachStatus::Reached, reconstruct(goal), expanded};
        }
    }
    return SwReachResult{SwReachStatus::BudgetExhausted, {}, expanded};
}

BitWindow apply_moves(const BitWindow& start, const std::vector<SwMove>& moves) {
    BitWindow w = start;
    for (const SwMove& m : moves) {
        if (m.kind == SwMove::Kind::Shift) {
            if (m.param != 1 && m.param != -1)
                throw std::invalid_argument("shift moves must have amount +1 or -1");
            w = shift(w, m.param);
        } else {
            w = switch_at(w, m.param);
        }
    }
    return w;
}

bool closure_contains(const Source& J, const BitWindow& x, Index L, Index scan_window) {
    if (L < 0) throw std::invalid_argument("block radius must be nonnegative");
    if (!x.covers(-L, L)) throw std::invalid_argument("window must cover [-L, L]");
    if (scan_window < 2 * L + 1)
        throw std::invalid_argument("scan window must be at least the longest block");

    const BitWindow field = J.window(-scan_window, scan_window);
    for (Index t = 0; t <= L; ++t) {
        const Index len = 2 * t + 1;
        bool found = false;
        for (Index q = -scan_window; q + len - 1 <= scan_window && !found; ++q) {
            bool match = true;
            for (Index j = 0; j < len && match; ++j) {
                match = field.at(q + j) == x.at(-t + j);
            }
            found = match;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace shiftlab
