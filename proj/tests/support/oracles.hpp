// Brute-force reference implementations used to cross-check the library.
// Everything here favors obviousness over speed and shares no code with the
// implementations under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/detect.hpp"

namespace oracles {

using shiftlab::Bit;
using shiftlab::Index;
using shiftlab::RelationMatrix;
using shiftlab::Source;
using shiftlab::Word;

// Occurrence positions by direct definition: i in [-N, N-|W|] with
// J(i+j) = W(j) for every j = 1..|W|.
inline std::vector<Index> naive_occurrences(const Word& W, const Source& J, Index N) {
    std::vector<Index> out;
    for (Index i = -N; i <= N - W.length(); ++i) {
        bool hit = true;
        for (Index j = 1; j <= W.length() && hit; ++j) hit = J(i + j) == W.at(j);
        if (hit) out.push_back(i);
    }
    return out;
}

// Density of 1s by direct counting.
inline double naive_density(const Source& J, Index N) {
    Index count = 0;
    for (Index i = -N; i <= N; ++i) count += J(i);
    return static_cast<double>(count) / static_cast<double>(2 * N + 1);
}

// Block entropy by a plain map census over all start positions in [-N, N-n+1].
inline double naive_block_entropy(const Source& J, Index n, Index N) {
    std::map<std::string, Index> counts;
    Index total = 0;
    for (Index i = -N; i + n - 1 <= N; ++i) {
        std::string block;
        for (Index j = 0; j < n; ++j) block += J(i + j) ? '1' : '0';
        ++counts[block];
        ++total;
    }
    double h = 0.0;
    for (const auto& [block, c] : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

// ---------------------------------------------------------------------------
// detector oracles: exhaustive searches written independently of the library

// Does any size-n row set exist whose every subset is cut out by some column?
inline bool has_ip(const RelationMatrix& M, int n) {
    const int r = M.rows(), c = M.cols();
    if (n < 1 || n > r) return false;
    // enumerate all n-subsets of rows via odometer
    std::vector<int> idx(n);
    for (int t = 0; t < n; ++t) idx[t] = t;
    while (true) {
        bool all_patterns = true;
        for (int mask = 0; mask < (1 << n) && all_patterns; ++mask) {
            bool found = false;
            for (int j = 0; j < c && !found; ++j) {
                bool match = true;
                for (int t = 0; t < n && match; ++t)
                    match = M.at(idx[t], j) == ((mask >> t) & 1);
                found = match;
            }
            all_patterns = found;
        }
        if (all_patterns) return true;
        // next combination
        int t = n - 1;
        while (t >= 0 && idx[t] == r - n + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < n; ++u) idx[u] = idx[u - 1] + 1;
    }
    return false;
}

namespace detail {
inline bool op_extend(const RelationMatrix& M, int n, std::vector<int>& rows,
                      std::vector<int>& cols) {
    if (static_cast<int>(rows.size()) == n) return true;
    for (int i = 0; i < M.rows(); ++i) {
        if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
        for (int j = 0; j < M.cols(); ++j) {
            if (std::find(cols.begin(), cols.end(), j) != cols.end()) continue;
            rows.push_back(i);
            cols.push_back(j);
            bool ok = true;
            const int k = static_cast<int>(rows.size());
            for (int a = 0; a < k && ok; ++a)
                for (int b = 0; b < k && ok; ++b)
                    ok = M.at(rows[a], cols[b]) == (a <= b ? 1 : 0);
            if (ok && op_extend(M, n, rows, cols)) return true;
            rows.pop_back();
            cols.pop_back();
        }
    }
    return false;
}
}  // namespace detail

// Does a staircase of size n exist? (entry[rows[a]][cols[b]] = 1 iff a <= b)
inline bool has_op(const RelationMatrix& M, int n) {
    if (n < 1 || n > std::min(M.rows(), M.cols())) return false;
    std::vector<int> rows, cols;
    return detail::op_extend(M, n, rows, cols);
}

// Column j's row set as a bitmask.
inline unsigned col_mask(const RelationMatrix& M, int j) {
    unsigned m = 0;
    for (int i = 0; i < M.rows(); ++i)
        if (M.at(i, j)) m |= 1u << i;
    return m;
}

namespace detail {
inline bool sop_extend(const RelationMatrix& M, int k, std::vector<int>& chain) {
    if (static_cast<int>(chain.size()) == k) return true;
    for (int j = 0; j < M.cols(); ++j) {
        if (std::find(chain.begin(), chain.end(), j) != chain.end()) continue;
        if (!chain.empty()) {
            const unsigned prev = col_mask(M, chain.back()), cur = col_mask(M, j);
            if ((prev & ~cur) != 0 || prev == cur) continue;  // need prev ⊊ cur
        }
        chain.push_back(j);
        if (sop_extend(M, k, chain)) return true;
        chain.pop_back();
    }
    return false;
}
}  // namespace detail

// Does a strictly nested chain of k column sets exist?
inline bool has_sop(const RelationMatrix& M, int k) {
    if (k < 2 || k > M.cols()) return false;
    std::vector<int> chain;
    return detail::sop_extend(M, k, chain);
}

// Largest staircase size present in M (0 for the all-zero matrix: a size-1
// staircase needs a single 1-entry).
inline int max_staircase(const RelationMatrix& M) {
    int best = 0;
    for (int n = 1; n <= std::min(M.rows(), M.cols()); ++n)
        if (has_op(M, n)) best = n;
    return best;
}

}  // namespace oracles
