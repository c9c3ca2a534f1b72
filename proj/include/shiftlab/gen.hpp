#pragma once

#include <cstdint>
#include <string>

#include "shiftlab/core.hpp"
#include "shiftlab/system.hpp"

namespace shiftlab {

/*
 * Deterministic sequence generators. Every generator is a total rule
 * Z -> {0,1}; windows materialized twice are identical.
 */

// Concatenation of all binary numerals in counting order (1, 10, 11, 100, ...),
// mirrored to Z by I(i) = digit(|i|). digit(0..6) = 1,1,0,1,1,1,0.
Source gen_champernowne();

// Bernoulli(p) digits from a splitmix64 counter stream seeded by `seed`,
// mirrored to Z: digit(k) = 1 iff the k-th uniform is < p. Identical digits
// for identical (p, seed) on every platform. p must lie in (0,1).
Source gen_pnormal(double p, std::uint64_t seed);

// Direct access to the underlying uniform stream (exposed for tests).
double pnormal_uniform(std::uint64_t seed, std::uint64_t k);

// Rotation coding: I(i) = 1 iff frac(rho + i*alpha) < alpha. alpha must lie in
// (0,1) and must not be a dyadic rational with denominator <= 2^24 (those are
// degenerate rotations; alpha = 0.5 is the canonical rejected case).
Source gen_sturmian(double alpha, double rho);

// I(i) = W(1 + (i mod |W|)) with the nonnegative remainder.
Source gen_periodic(const Word& W);

enum class StepPolarity { OneZero, ZeroOne };  // 1 on i <= 0, or 1 on i > 0

Source gen_step(StepPolarity polarity);
Source gen_constant(Bit b);

/*
 * Cayley-graph orbit structure on Z induced by a one-sided rule S:
 * x ~ y iff S(|x - y|) = 1 (and x != y); the successor +1 is adjacency-
 * preserving since adjacency depends only on |x - y|. For each requested
 * anchor a, the neighbor set of a is registered as base set "U_<a>", and a
 * is registered as anchor "<a>".
 *
 * S is probed for universality (every word of length <= universality_bound
 * occurs in S's positive window [1, scan]); a miss is reported through the
 * warning field, not an error — the structure is still built.
 */
struct RadoSystem {
    ShiftOrbitSystem system;
    bool universal = true;
    std::string warning;  // empty when universal
};

RadoSystem rado_cayley(const Source& S, const std::vector<Index>& anchors,
                       Index universality_bound = 6, Index scan = 20000);

}  // namespace shiftlab
