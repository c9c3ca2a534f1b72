#include "shiftlab/dyn.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace shiftlab {

BitWindow xi(const ShiftOrbitSystem& sys, Index point, const std::string& setName, Index N) {
    if (N < 1) throw std::invalid_argument("window radius must be >= 1");
    const Source& src = sys.set(setName);
    std::vector<Bit> bits;
    bits.reserve(static_cast<std::size_t>(2 * N + 1));
    for (Index i = -N; i <= N; ++i) bits.push_back(src(point + i));
    return BitWindow(-N, std::move(bits));
}

Source xi_source(const ShiftOrbitSystem& sys, Index point, const std::string& setName) {
    return shift(sys.set(setName), -point);
}

RhoLanguage rho_language(const std::vector<RhoInput>& inputs, Index L, Index N) {
    if (L < 1 || L > 20) throw std::invalid_argument("block length must lie in [1, 20]");
    if (L > N) throw std::invalid_argument("need L <= N");

    RhoLanguage out;
    for (const RhoInput& in : inputs) {
        if (in.sys == nullptr) throw std::invalid_argument("null system in input list");
        const BitWindow w = xi(*in.sys, in.point, in.setName, N);
        for (Index start = -N; start + L - 1 <= N; ++start) {
            std::vector<Bit> bits;
            bits.reserve(static_cast<std::size_t>(L));
            for (Index j = 0; j < L; ++j) bits.push_back(w.at(start + j));
            out.words.insert(Word(std::move(bits)));
        }
    }
    out.denseProxy = out.words.size() == (std::size_t{1} << L);
    return out;
}

FrequencyEstimate pushforward_cylinder(const ShiftOrbitSystem& sys, Index point,
                                       const std::string& setName, const Word& W, Index N) {
    return occurrences(W, xi_source(sys, point, setName), N).estimate;
}

CompactnessReport compact_check(const ShiftOrbitSystem& sys, Index point,
                                const std::vector<std::string>& setNames, double epsilon,
                                Index maxN, Index N) {
    if (maxN < 1 || maxN >= N) throw std::invalid_argument("need 1 <= maxN < N");

    CompactnessReport rep;
    rep.epsilon = epsilon;
    rep.maxN = maxN;
    rep.verdict = true;
    for (const std::string& name : setNames) {
        const BitWindow w = xi(sys, point, name, N + maxN);
        CompactnessReport::SetResult res;
        res.name = name;
        double best = std::numeric_limits<double>::infinity();
        for (Index n = 1; n <= maxN; ++n) {
            Index diff = 0;
            for (Index i = -N; i <= N; ++i) {
                if (w.at(i) != w.at(i + n)) ++diff;
            }
            const double sym = static_cast<double>(diff) / static_cast<double>(2 * N + 1);
            if (sym < best) {
                best = sym;
                res.bestN = n;
            }
        }
        res.symdiff = best;
        rep.perSet.push_back(res);
        if (!(best < epsilon)) rep.verdict = false;
    }
    return rep;
}

EntropyEstimate block_entropy(const BitWindow& w, Index n) {
    if (n < 1 || n > 16) throw std::invalid_argument("block length must lie in [1, 16]");
    if (w.size() < n) throw std::invalid_argument("window shorter than the block length");

    std::vector<Index> counts(std::size_t{1} << n, 0);
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    std::uint32_t code = 0;
    const std::vector<Bit>& bits = w.bits();
    for (Index k = 0; k < w.size(); ++k) {
        code = ((code << 1) | bits[static_cast<std::size_t>(k)]) & mask;
        if (k + 1 >= n) ++counts[code];
    }

    const double total = static_cast<double>(w.size() - n + 1);
    EntropyEstimate est;
    est.blockLength = n;
    for (Index c : counts) {
        if (c == 0) continue;
        ++est.distinctBlocks;
        const double q = static_cast<double>(c) / total;
        est.blockEntropy -= q * std::log2(q);
    }
    est.blockEntropy = std::max(est.blockEntropy, 0.0);  // clamp -0.0 from a lone block
    est.rate = est.blockEntropy / static_cast<double>(n);
    return est;
}

EntropyEstimate block_entropy(const Source& J, Index n, Index N) {
    if (N < n) throw std::invalid_argument("need N >= n");
    return block_entropy(J.window(-N, N), n);
}

double partition_entropy(const std::vector<double>& masses) {
    if (masses.empty()) throw std::invalid_argument("mass vector must be nonempty");
    double sum = 0.0;
    for (double m : masses) {
        if (m < 0.0) throw std::invalid_argument("masses must be nonnegative");
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("masses must sum to 1");
    double H = 0.0;
    for (double m : masses) {
        if (m > 0.0) H -= m * std::log2(m);
    }
    return std::max(H, 0.0);
}

EntropyEstimate finite_system_entropy(const FinitePermSystem& sys,
                                      const std::vector<std::string>& partitionNames, Index n) {
    if (n < 1) throw std::invalid_argument("refinement depth must be >= 1");
    if (!sys.invariant_weights())
        throw std::invalid_argument("weights must be flagged invariant");

    // Cell index per point; the named sets must partition the points.
    std::vector<int> cell(static_cast<std::size_t>(sys.size()), -1);
    for (std::size_t c = 0; c < partitionNames.size(); ++c) {
        for (int m : sys.set(partitionNames[c])) {
            if (cell[static_cast<std::size_t>(m)] != -1)
                throw std::invalid_argument("named sets overlap: not a partition");
            cell[static_cast<std::size_t>(m)] = static_cast<int>(c);
        }
    }
    for (int c : cell) {
        if (c == -1) throw std::invalid_argument("named sets miss a point: not a partition");
    }

    // Atoms of the n-fold refinement are itineraries: the cells visited at
    // steps 0..n-1 under the permutation.
    std::map<std::vector<int>, double> atoms;
    for (int x = 0; x < sys.size(); ++x) {
        std::vector<int> itinerary(static_cast<std::size_t>(n));
        int y = x;
        for (Index s = 0; s < n; ++s) {
            itinerary[static_cast<std::size_t>(s)] = cell[static_cast<std::size_t>(y)];
            y = sys.step(y);
        }
        atoms[itinerary] += sys.weights()[static_cast<std::size_t>(x)];
    }

    std::vector<double> masses;
    masses.reserve(atoms.size());
    for (const auto& [key, mass] : atoms) masses.push_back(mass);

    EntropyEstimate est;
    est.blockLength = n;
    est.blockEntropy = partition_entropy(masses);
    est.rate = est.blockEntropy / static_cast<double>(n);
    est.distinctBlocks = static_cast<Index>(atoms.size());
    return est;
}

}  // namespace shiftlab
