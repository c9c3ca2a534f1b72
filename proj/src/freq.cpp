#include "shiftlab/freq.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace shiftlab {

double default_tolerance(Index N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    return 6.0 / std::sqrt(static_cast<double>(N));
}

FrequencyEstimate window_density(const BitWindow& w) {
    const Index S = w.size();
    // prefix[k] = number of 1s among the first k cells
    std::vector<Index> prefix(static_cast<std::size_t>(S) + 1, 0);
    for (Index k = 0; k < S; ++k)
        prefix[static_cast<std::size_t>(k) + 1] =
            prefix[static_cast<std::size_t>(k)] + w.bits()[static_cast<std::size_t>(k)];

    auto stat = [&](Index trim) {
        const Index n = S - 2 * trim;
        const Index ones = prefix[static_cast<std::size_t>(S - trim)] - prefix[static_cast<std::size_t>(trim)];
        return static_cast<double>(ones) / static_cast<double>(n);
    };

    FrequencyEstimate est;
    est.windowRadius = (S - 1) / 2;
    est.point = stat(0);
    est.lower = est.point;
    est.upper = est.point;
    const Index max_trim = (S - 1) / 4;
    for (Index t = 1; t <= max_trim; ++t) {
        const double v = stat(t);
        est.lower = std::min(est.lower, v);
        est.upper = std::max(est.upper, v);
    }
    return est;
}

FrequencyEstimate density(const Source& J, Index N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    FrequencyEstimate est = window_density(J.window(-N, N));
    est.windowRadius = N;
    return est;
}

OccurrenceResult occurrences(const Word& W, const BitWindow& w) {
    const Index len = W.length();
    if (w.size() < len + 1)
        throw std::invalid_argument("window too small for the requested word");

    OccurrenceResult out;
    // match flags per start position lo .. hi-|W|
    const Index first = w.lo();
    const Index last = w.hi() - len;
    std::vector<char> match(static_cast<std::size_t>(last - first + 1), 0);
    for (Index i = first; i <= last; ++i) {
        bool ok = true;
        for (Index j = 1; j <= len && ok; ++j) ok = (w.at(i + j) == W.at(j));
        if (ok) {
            match[static_cast<std::size_t>(i - first)] = 1;
            out.positions.push_back(i);
        }
    }

    std::vector<Index> prefix(match.size() + 1, 0);
    for (std::size_t k = 0; k < match.size(); ++k) prefix[k + 1] = prefix[k] + match[k];

    const Index S = w.size();
    FrequencyEstimate est;
    est.windowRadius = (S - 1) / 2;
    bool have = false;
    const Index max_trim = (S - 1) / 4;
    for (Index t = 0; t <= max_trim; ++t) {
        const Index a = first + t;        // start positions surviving the trim
        const Index b = w.hi() - t - len;
        const Index candidates = b - a + 1;
        if (candidates < 1) break;
        const Index hits = prefix[static_cast<std::size_t>(b - first + 1)] -
                           prefix[static_cast<std::size_t>(a - first)];
        const double v = static_cast<double>(hits) / static_cast<double>(candidates);
        if (t == 0) {
            est.point = v;
            est.lower = est.upper = v;
            have = true;
        } else {
            est.lower = std::min(est.lower, v);
            est.upper = std::max(est.upper, v);
        }
    }
    if (!have) throw std::invalid_argument("window admits no candidate positions");
    out.estimate = est;
    return out;
}

OccurrenceResult occurrences(const Word& W, const Source& J, Index N) {
    if (N < W.length()) throw std::invalid_argument("need N >= |W|");
    OccurrenceResult out = occurrences(W, J.window(-N, N));
    out.estimate.windowRadius = N;
    return out;
}

std::vector<Index> intersect_shifts(const Word& W, const Source& J, Index N) {
    const Index len = W.length();
    if (N < len) throw std::invalid_argument("need N >= |W|");

    // Arguments J(i+j) range over [-N+1, N] for i in [-N, N-|W|], j in 1..|W|.
    const BitWindow field = J.window(-N + 1, N);

    std::vector<Index> acc;
    for (Index j = 1; j <= len; ++j) {
        // The j-th shifted set, complemented when W(j) = 0, materialized
        // explicitly: { i : J(i+j) = W(j) }.
        std::vector<Index> part;
        for (Index i = -N; i <= N - len; ++i) {
            if (field.at(i + j) == W.at(j)) part.push_back(i);
        }
        if (j == 1) {
            acc = std::move(part);
        } else {
            std::vector<Index> merged;
            std::set_intersection(acc.begin(), acc.end(), part.begin(), part.end(),
                                  std::back_inserter(merged));
            acc = std::move(merged);
        }
    }
    return acc;
}

WidenessReport epsilon_wide(const Source& J, double epsilon, Index maxShift, Index N,
                            std::optional<double> tolerance) {
    if (maxShift < 1 || maxShift >= N)
        throw std::invalid_argument("need 1 <= maxShift < N");
    const double tol = tolerance.value_or(default_tolerance(N));

    const BitWindow w = J.window(-N - maxShift, N + maxShift);
    Index total = 0;
    for (Index i = -N; i <= N; ++i) total += w.at(i);
    const double dns = static_cast<double>(total) / static_cast<double>(2 * N + 1);

    WidenessReport rep;
    rep.epsilon = epsilon;
    rep.maxShift = maxShift;
    rep.verdict = true;
    for (Index n = -maxShift; n <= maxShift; ++n) {
        if (n == 0) continue;
        Index both = 0;
        for (Index i = -N; i <= N; ++i) {
            // (J+n)(i) = J(i-n)
            if (w.at(i) == 1 && w.at(i - n) == 1) ++both;
        }
        const double gap = dns - static_cast<double>(both) / static_cast<double>(2 * N + 1);
        rep.perShiftGap.emplace_back(n, gap);
        if (gap < epsilon - tol) rep.verdict = false;
    }
    return rep;
}

double bernoulli_cylinder(double p, const Word& W) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    return std::pow(p, static_cast<double>(W.ones())) *
           std::pow(1.0 - p, static_cast<double>(W.zeros()));
}

FrequencyEstimate frequency_measure(const ShiftOrbitSystem& sys, Index point,
                                    const std::string& setName, Index N) {
    const Source& src = sys.set(setName);
    return density(shift(src, -point), N);
}

AvgMembership avg_membership(const std::vector<Index>& failures, Index N, Index tailGuard) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (tailGuard < 0 || tailGuard >= N)
        throw std::invalid_argument("need 0 <= tailGuard < N");

    std::set<Index> fs(failures.begin(), failures.end());
    if (!fs.empty() && (*fs.begin() < -N || *fs.rbegin() > N))
        throw std::invalid_argument("failure indices must lie in [-N, N]");

    const Index lo_tail_end = -N + tailGuard;
    const Index hi_tail_start = N - tailGuard;
    Index in_tails = 0;
    for (Index i : fs) {
        if (i <= lo_tail_end || i >= hi_tail_start) ++in_tails;
    }
    const Index count = static_cast<Index>(fs.size());
    const Index tail_points = 2 * (tailGuard + 1);

    if (in_tails == 0 && count <= N / 4) return AvgMembership::In;
    if (in_tails == tail_points && (2 * N + 1 - count) <= N / 4) return AvgMembership::Out;
    return AvgMembership::Undetermined;
}

FrequencyEstimate malg_distance(const ShiftOrbitSystem& sys, const std::string& A,
                                const std::string& B, Index point, Index N) {
    const Source a = sys.set(A);
    const Source b = sys.set(B);
    const Source symdiff =
        make_predicate_source([a, b, point](Index i) { return a(point + i) != b(point + i); });
    return density(symdiff, N);
}

SeparationReport separation_report(const std::vector<std::string>& setNames,
                                   const ShiftOrbitSystem& sys, Index point, Index N,
                                   const std::vector<double>& epsilons) {
    const std::size_t k = setNames.size();
    if (k < 2) throw std::invalid_argument("need at least two set names");

    SeparationReport rep;
    rep.pairwiseDistances.assign(k, std::vector<double>(k, 0.0));
    double min_off = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double d = malg_distance(sys, setNames[i], setNames[j], point, N).point;
            rep.pairwiseDistances[i][j] = d;
            rep.pairwiseDistances[j][i] = d;
            min_off = std::min(min_off, d);
        }
    }

    for (double eps : epsilons) {
        if (eps <= min_off && (!rep.boundedAwayAt || eps > *rep.boundedAwayAt))
            rep.boundedAwayAt = eps;
    }

    for (double eps : epsilons) {
        // Greedy net over the family in input order: a member becomes a new
        // center unless an existing center already lies within eps.
        std::vector<std::size_t> centers;
        for (std::size_t i = 0; i < k; ++i) {
            bool covered = false;
            for (std::size_t c : centers) {
                if (rep.pairwiseDistances[i][c] <= eps) {
                    covered = true;
                    break;
                }
            }
            if (!covered) centers.push_back(i);
        }
        rep.netSizeAt.emplace_back(eps, static_cast<int>(centers.size()));
    }
    return rep;
}

}  // namespace shiftlab
