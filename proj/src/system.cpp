#include "shiftlab/system.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftlab {

void ShiftOrbitSystem::register_set(const std::string& name, Source membership) {
    sets_.insert_or_assign(name, std::move(membership));
}

void ShiftOrbitSystem::register_anchor(const std::string& name, Index label) {
    anchors_.insert_or_assign(name, label);
}

const Source& ShiftOrbitSystem::set(const std::string& name) const {
    auto it = sets_.find(name);
    if (it == sets_.end()) throw UnknownSetError(name);
    return it->second;
}

bool ShiftOrbitSystem::has_set(const std::string& name) const { return sets_.contains(name); }

Index ShiftOrbitSystem::anchor(const std::string& name) const {
    auto it = anchors_.find(name);
    if (it == anchors_.end()) throw std::invalid_argument("unknown anchor name: " + name);
    return it->second;
}

FinitePermSystem::FinitePermSystem(std::vector<int> perm, std::vector<double> weights,
                                   bool invariant_weights)
    : perm_(std::move(perm)), weights_(std::move(weights)), invariant_(invariant_weights) {
    const int n = static_cast<int>(perm_.size());
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    if (weights_.size() != perm_.size())
        throw std::invalid_argument("weights must have one entry per point");

    std::vector<bool> hit(perm_.size(), false);
    for (int v : perm_) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("perm is not a bijection on 0..n-1");
        hit[static_cast<std::size_t>(v)] = true;
    }

    double total = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");

    if (invariant_) {
        for (std::size_t x = 0; x < perm_.size(); ++x) {
            if (std::abs(weights_[x] - weights_[static_cast<std::size_t>(perm_[x])]) > 1e-12)
                throw std::invalid_argument("weights are not invariant under perm");
        }
    }
}

void FinitePermSystem::register_set(const std::string& name, std::vector<int> members) {
    for (int m : members) {
        if (m < 0 || m >= size()) throw std::invalid_argument("set member out of range");
    }
    sets_.insert_or_assign(name, std::move(members));
}

const std::vector<int>& FinitePermSystem::set(const std::string& name) const {
    auto it = sets_.find(name);
    if (it == sets_.end()) throw UnknownSetError(name);
    return it->second;
}

std::vector<double> cesaro_weights(const FinitePermSystem& sys) {
    const int n = sys.size();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (done[static_cast<std::size_t>(s)]) continue;
        // Collect the cycle through s and spread its total mass evenly.
        std::vector<int> cycle;
        int x = s;
        do {
            cycle.push_back(x);
            done[static_cast<std::size_t>(x)] = true;
            x = sys.step(x);
        } while (x != s);
        double mass = 0.0;
        for (int y : cycle) mass += sys.weights()[static_cast<std::size_t>(y)];
        const double each = mass / static_cast<double>(cycle.size());
        for (int y : cycle) out[static_cast<std::size_t>(y)] = each;
    }
    return out;
}

}  // namespace shiftlab
