#pragma once

#include <map>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

/*
 * A Z-indexed dynamical system: labels are integers, the successor map is
 * +1, and base sets are named total membership rules. Anchors are named
 * starting labels, purely a convenience for callers and file formats.
 */
class ShiftOrbitSystem {
public:
    void register_set(const std::string& name, Source membership);
    void register_anchor(const std::string& name, Index label);

    const Source& set(const std::string& name) const;  // throws UnknownSetError
    bool has_set(const std::string& name) const;
    Index anchor(const std::string& name) const;
    const std::map<std::string, Source>& sets() const { return sets_; }
    const std::map<std::string, Index>& anchors() const { return anchors_; }

    static Index successor(Index label) { return label + 1; }

private:
    std::map<std::string, Source> sets_;
    std::map<std::string, Index> anchors_;
};

struct UnknownSetError : std::invalid_argument {
    explicit UnknownSetError(const std::string& name)
        : std::invalid_argument("unknown set name: " + name) {}
};

/*
 * A finite measure-preserving system: points 0..size-1, a permutation, named
 * subsets, and a probability weight per point. Construction validates that
 * perm is a bijection and the weights sum to 1 within 1e-12; weights are
 * additionally required to be perm-invariant pointwise (within 1e-12) when
 * the invariant flag is set.
 */
class FinitePermSystem {
public:
    FinitePermSystem(std::vector<int> perm, std::vector<double> weights, bool invariant_weights);

    void register_set(const std::string& name, std::vector<int> members);

    int size() const { return static_cast<int>(perm_.size()); }
    int step(int x) const { return perm_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<double>& weights() const { return weights_; }
    bool invariant_weights() const { return invariant_; }
    const std::map<std::string, std::vector<int>>& sets() const { return sets_; }
    const std::vector<int>& set(const std::string& name) const;  // throws UnknownSetError

private:
    std::vector<int> perm_;
    std::vector<double> weights_;
    bool invariant_;
    std::map<std::string, std::vector<int>> sets_;
};

// Exact orbit-average of the weights: every point receives the mean weight of
// its perm-cycle. The result is perm-invariant and preserves total mass.
std::vector<double> cesaro_weights(const FinitePermSystem& sys);

}  // namespace shiftlab
