#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/system.hpp"

namespace shiftlab {

/*
 * Window-density record. `point` is the statistic at the full radius N;
 * `lower`/`upper` bracket it by the min/max of the same statistic over all
 * radii in [N/2, N]. The bracket stands in for limits that finite windows
 * cannot certify: consumers that need a limit must look at the spread
 * instead of trusting the point.
 */
struct FrequencyEstimate {
    double lower = 0.0;
    double point = 0.0;
    double upper = 0.0;
    Index windowRadius = 0;
};

// Default tolerance for density comparisons at radius N: 6/sqrt(N)
// (0.019 at N = 100000). CLI and tests share this policy.
double default_tolerance(Index N);

// Density of 1s of J over [-N, N]; radius sweep as documented above. N >= 1.
FrequencyEstimate density(const Source& J, Index N);

// Density of a materialized window (spans need not be symmetric): the
// lower/upper sweep trims equally from both ends, down to half the span;
// windowRadius reports floor((size-1)/2).
FrequencyEstimate window_density(const BitWindow& w);

/*
 * Occurrence positions of W in J: all i in [-N, N-|W|] with J(i+j) = W(j) for
 * j = 1..|W|. The estimate normalizes by the candidate count 2N-|W|+1.
 */
struct OccurrenceResult {
    std::vector<Index> positions;  // sorted ascending
    FrequencyEstimate estimate;
};

OccurrenceResult occurrences(const Word& W, const Source& J, Index N);

// Occurrence scan over a materialized window: positions in [lo, hi-|W|],
// same end-trimming sweep as window_density.
OccurrenceResult occurrences(const Word& W, const BitWindow& w);

/*
 * Independent route to the same set: materializes, for each j = 1..|W|, the
 * set {i : J(i+j) = W(j)} as an explicit index set over [-N, N-|W|] (the
 * shifted set positions of J, complemented where W(j) = 0) and intersects
 * them. Serves as the oracle for occurrences(); the two implementations
 * must never be merged.
 */
std::vector<Index> intersect_shifts(const Word& W, const Source& J, Index N);

/*
 * Wideness probe: gap(n) = dns(J) - dns(J ∩ (J+n)) for 0 < |n| <= maxShift,
 * densities over [-N, N]. Verdict: all gaps >= epsilon - tol.
 */
struct WidenessReport {
    double epsilon = 0.0;
    Index maxShift = 0;
    std::vector<std::pair<Index, double>> perShiftGap;  // n -> gap, n ascending
    bool verdict = false;
};

WidenessReport epsilon_wide(const Source& J, double epsilon, Index maxShift, Index N,
                            std::optional<double> tolerance = std::nullopt);

// p^{#1s(W)} (1-p)^{#0s(W)}; p must lie in (0,1).
double bernoulli_cylinder(double p, const Word& W);

// Orbit-visit density of `point` to the named set: density of i in [-N, N]
// with point + i in the set.
FrequencyEstimate frequency_measure(const ShiftOrbitSystem& sys, Index point,
                                    const std::string& setName, Index N);

/*
 * Classifies a membership pattern along a window by its failure set.
 * In: failures avoid both tails [-N, -N+tailGuard], [N-tailGuard, N] and
 * number at most N/4. Out: the same criterion on the non-failures.
 * A finite-window proxy for "all but finitely many" / "at most finitely many".
 */
enum class AvgMembership { In, Out, Undetermined };

AvgMembership avg_membership(const std::vector<Index>& failures, Index N, Index tailGuard);

// Measure-algebra distance mu(A △ B) along the orbit of `point`.
FrequencyEstimate malg_distance(const ShiftOrbitSystem& sys, const std::string& A,
                                const std::string& B, Index point, Index N);

/*
 * Pairwise separation structure of a family of sets, in the measure-algebra
 * metric along one orbit. boundedAwayAt is the largest listed epsilon that is
 * <= the off-diagonal minimum (absent when none is). For each listed epsilon
 * a greedy net is built over the family in input order; netSizeAt records its
 * size — small nets at small epsilon indicate precompactness, a large
 * bounded-away family indicates the opposite.
 */
struct SeparationReport {
    std::vector<std::vector<double>> pairwiseDistances;
    std::optional<double> boundedAwayAt;
    std::vector<std::pair<double, int>> netSizeAt;  // epsilon -> greedy net size
};

SeparationReport separation_report(const std::vector<std::string>& setNames,
                                   const ShiftOrbitSystem& sys, Index point, Index N,
                                   const std::vector<double>& epsilons);

}  // namespace shiftlab
