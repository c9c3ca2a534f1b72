#pragma once

#include <set>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/freq.hpp"
#include "shiftlab/system.hpp"

namespace shiftlab {

/*
 * Symbolic image of a point: the window over [-N, N] with bit(i) = 1 iff
 * successor^i(point) lies in the named set. Exact commutation holds:
 * xi(sys, point+1, U, N)(i) = xi(sys, point, U, N+1)(i+1).
 */
BitWindow xi(const ShiftOrbitSystem& sys, Index point, const std::string& setName, Index N);

// The same rule as a total source (evaluation at i gives xi's bit at i).
Source xi_source(const ShiftOrbitSystem& sys, Index point, const std::string& setName);

/*
 * Union of all length-L blocks occurring in the xi windows of the given
 * (system, point, set) triples. denseProxy is set iff all 2^L words occur.
 */
struct RhoInput {
    const ShiftOrbitSystem* sys;
    Index point;
    std::string setName;
};

struct RhoLanguage {
    std::set<Word> words;
    bool denseProxy = false;
};

RhoLanguage rho_language(const std::vector<RhoInput>& inputs, Index L, Index N);

// Pushforward cylinder estimate: occurrence density of W in the symbolic
// image of `point`.
FrequencyEstimate pushforward_cylinder(const ShiftOrbitSystem& sys, Index point,
                                       const std::string& setName, const Word& W, Index N);

/*
 * Almost-periodicity probe: for each set A, symdiff(n) = mu(shift^n(A) △ A)
 * along the orbit of `point`, scanned over n = 1..maxN. A set passes when
 * some n brings the symdiff under epsilon; the verdict requires every set to
 * pass. bestN is the n achieving the minimal symdiff (smallest such n on
 * ties). Verdict false means "not compact at this budget".
 */
struct CompactnessReport {
    double epsilon = 0.0;
    Index maxN = 0;
    struct SetResult {
        std::string name;
        Index bestN = 0;
        double symdiff = 0.0;
    };
    std::vector<SetResult> perSet;
    bool verdict = false;
};

CompactnessReport compact_check(const ShiftOrbitSystem& sys, Index point,
                                const std::vector<std::string>& setNames, double epsilon,
                                Index maxN, Index N);

/*
 * Entropy records carry the block length so convergence can be inspected;
 * rate = blockEntropy / blockLength. blockEntropy is in bits.
 */
struct EntropyEstimate {
    Index blockLength = 0;
    double blockEntropy = 0.0;
    double rate = 0.0;
    Index distinctBlocks = 0;
};

// Empirical entropy of the length-n block census of J over [-N, N]
// (all 2N+2-n start positions). 1 <= n <= 16; N >= 100 * 2^n recommended.
EntropyEstimate block_entropy(const Source& J, Index n, Index N);

// Census over a materialized window (all size-n+1 start positions).
EntropyEstimate block_entropy(const BitWindow& w, Index n);

// -sum p_i log2 p_i with 0 log 0 = 0. Masses must be nonnegative and sum to
// 1 within 1e-9; always <= log2(k).
double partition_entropy(const std::vector<double>& masses);

/*
 * Entropy of the n-fold refinement of a named partition under the system's
 * permutation: atoms are itineraries (which cell the point visits at steps
 * 0..n-1), with atom mass the sum of point weights. Requires the named sets
 * to partition the points and the weights to be perm-invariant (1e-12).
 * n = 1 reduces exactly to partition_entropy of the cell masses.
 */
EntropyEstimate finite_system_entropy(const FinitePermSystem& sys,
                                      const std::vector<std::string>& partitionNames, Index n);

}  // namespace shiftlab
