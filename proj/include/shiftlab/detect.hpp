#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/system.hpp"

namespace shiftlab {

/*
 * Finite witness detectors over boolean relation matrices.
 *
 * Every search is exhaustive within documented size bounds and refuses
 * (std::invalid_argument) beyond them — no heuristics pretending
 * completeness. Tie-breaking is globally lexicographic so outputs are
 * byte-for-byte reproducible.
 */

class RelationMatrix {
public:
    RelationMatrix(int rows, int cols);  // zero-filled
    RelationMatrix(int rows, int cols, std::vector<Bit> rowMajor);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Bit at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Bit v) { data_[static_cast<std::size_t>(i) * cols_ + j] = v; }

    friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

private:
    int rows_, cols_;
    std::vector<Bit> data_;
};

// entry(i, j) = J(i - j) for 0-based i < r, j < c; constant on diagonals.
RelationMatrix toeplitz_matrix(const Source& J, int r, int c);

/*
 * Shattering witness: a row set such that every subset is cut out by some
 * column. selectors[mask] is the chosen column for the subset
 * {rowSet[t] : bit t of mask set}; all 2^n masks are present.
 */
struct IPWitness {
    std::vector<int> rowSet;
    std::vector<int> selectors;  // indexed by subset mask, size 1 << rowSet.size()
};

/*
 * Staircase witness: entry[rowSeq[i]][colSeq[j]] = 1 iff i <= j.
 * Rows and columns are distinct within their sequences but need not be sorted.
 */
struct OPWitness {
    std::vector<int> rowSeq;
    std::vector<int> colSeq;
};

// Strictly nested column chain: set(colSeq[t]) ⊊ set(colSeq[t+1]) as row sets.
struct SOPWitness {
    std::vector<int> colSeq;
};

bool verify_ip(const RelationMatrix& M, const IPWitness& w);
bool verify_op(const RelationMatrix& M, const OPWitness& w);
bool verify_sop(const RelationMatrix& M, const SOPWitness& w);

// Exhaustive for r <= 20, n <= 4 (refused beyond); error if n > r or n < 1.
// Ties: lexicographically smallest row set, then smallest selector column per subset.
std::optional<IPWitness> ip_witness(const RelationMatrix& M, int n);

// Exhaustive for r*c <= 400, n <= 5 (refused beyond); error if n > min(r, c)
// or n < 1. Ties: smallest interleaved sequence (r1, c1, r2, c2, ...).
std::optional<OPWitness> op_witness(const RelationMatrix& M, int n);

// Exhaustive for c <= 20, k <= 6 (refused beyond); error if k > c or k < 2.
// Ties: lexicographically smallest column sequence.
std::optional<SOPWitness> sop_witness(const RelationMatrix& M, int k);

/*
 * Dichotomy search attached to a staircase: given a verified staircase in M,
 * look for a shattering witness of size ipSize (preferred) or, failing that,
 * the lexicographically smallest longest nested chain provided its length
 * reaches sopLen. Returns nothing only when both exhaustive searches fail;
 * callers weigh that against an oracle-derived bound table.
 */
struct ShelahResult {
    enum class Branch { IP, SOP };
    Branch branch;
    std::optional<IPWitness> ip;    // set iff branch == IP
    std::optional<SOPWitness> sop;  // set iff branch == SOP
};

std::optional<ShelahResult> shelah_decompose(const RelationMatrix& M, const OPWitness& opw,
                                             int ipSize, int sopLen);

/*
 * Stability of a window set under switch and shift moves.
 *
 * All windows share one span. Switches stay inside the span and are checked
 * exactly, over every member, first. A shift by ±1 vacates one edge cell, so
 * the shifted pattern is only determined up to that cell; the check demands
 * both one-bit completions be members, and a failure there is tagged
 * edge_artifact — it may be a finite-window artifact rather than a true
 * closure violation, which is why it is reported distinctly and scanned
 * after all switches.
 */
struct SwMoveRef {
    enum class Kind { Switch, Shift };
    Kind kind;
    Index param;
};

struct SwClosedReport {
    enum class Verdict { Closed, Counterexample, BudgetExhausted };
    Verdict verdict;
    // Populated for Counterexample:
    std::optional<BitWindow> member;
    std::optional<SwMoveRef> move;
    std::optional<BitWindow> result;
    bool edge_artifact = false;
    std::size_t checked = 0;  // (member, move) applications performed
};

SwClosedReport sw_closed_check(const std::vector<BitWindow>& windows, std::size_t budget);

/*
 * Monotone-image probe for a family of orbit points:
 *  (a) containment — no xi window among the points contains the block "01"
 *      (all-0 and all-1 windows are fine: windows without "01" are exactly
 *      the 1^a 0^b shapes);
 *  (b) strictness — some xi window equals the step shape (1 on [-N, 0],
 *      0 on [1, N]) exactly.
 * The combined shadow is (a) && (b). The first "01" found is reported.
 */
struct SopImageReport {
    bool containment = false;
    bool strictness = false;
    bool shadow = false;
    std::optional<std::pair<Index, Index>> violation;  // (point, position i of a "01" at i, i+1)
};

SopImageReport sop_image_check(const ShiftOrbitSystem& sys, const std::string& setName,
                               const std::vector<Index>& points, Index N);

}  // namespace shiftlab
