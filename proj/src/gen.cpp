#include "shiftlab/gen.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

namespace {

/*
 * Digit stream of the base-2 counting concatenation "1 10 11 100 101 ...".
 * Numerals of exactly l bits contribute l*2^(l-1) digits, so the cumulative
 * count through all numerals of at most l bits is (l-1)*2^l + 1.
 */
std::uint64_t counting_cum(std::uint64_t l) {
    if (l == 0) return 0;
    return (l - 1) * (std::uint64_t{1} << l) + 1;
}

Bit counting_digit(std::uint64_t k) {
    std::uint64_t l = 1;
    while (counting_cum(l) <= k) ++l;
    const std::uint64_t offset = k - counting_cum(l - 1);
    const std::uint64_t numeral = (std::uint64_t{1} << (l - 1)) + offset / l;
    const std::uint64_t pos = offset % l;  // 0 = most significant bit
    return static_cast<Bit>((numeral >> (l - 1 - pos)) & 1u);
}

std::uint64_t abs_index(Index i) {
    return i < 0 ? static_cast<std::uint64_t>(-(i + 1)) + 1 : static_cast<std::uint64_t>(i);
}

struct ChampernowneSource final : detail::SourceImpl {
    Bit at(Index i) const override { return counting_digit(abs_index(i)); }
};

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct PNormalSource final : detail::SourceImpl {
    PNormalSource(double p, std::uint64_t seed) : p_(p), seed_(seed) {}
    Bit at(Index i) const override {
        return pnormal_uniform(seed_, abs_index(i)) < p_ ? 1 : 0;
    }
    double p_;
    std::uint64_t seed_;
};

struct SturmianSource final : detail::SourceImpl {
    SturmianSource(double alpha, double rho) : alpha_(alpha), rho_(rho) {}
    Bit at(Index i) const override {
        const double v = rho_ + static_cast<double>(i) * alpha_;
        const double frac = v - std::floor(v);
        return frac < alpha_ ? 1 : 0;
    }
    double alpha_, rho_;
};

struct PeriodicSource final : detail::SourceImpl {
    explicit PeriodicSource(Word w) : w_(std::move(w)) {}
    Bit at(Index i) const override {
        const Index len = w_.length();
        const Index r = ((i % len) + len) % len;
        return w_.at(1 + r);
    }
    Word w_;
};

struct StepSource final : detail::SourceImpl {
    explicit StepSource(StepPolarity polarity) : polarity_(polarity) {}
    Bit at(Index i) const override {
        const bool one = (polarity_ == StepPolarity::OneZero) ? (i <= 0) : (i > 0);
        return one ? 1 : 0;
    }
    StepPolarity polarity_;
};

struct ConstantSource final : detail::SourceImpl {
    explicit ConstantSource(Bit b) : b_(b) {}
    Bit at(Index) const override { return b_; }
    Bit b_;
};

}  // namespace

Source gen_champernowne() { return Source(std::make_shared<ChampernowneSource>()); }

double pnormal_uniform(std::uint64_t seed, std::uint64_t k) {
    const std::uint64_t z = splitmix64(seed + (k + 1) * kGamma);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Source gen_pnormal(double p, std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    return Source(std::make_shared<PNormalSource>(p, seed));
}

Source gen_sturmian(double alpha, double rho) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    const double scaled = std::ldexp(alpha, 24);
    if (scaled == std::floor(scaled))
        throw std::invalid_argument(
            "alpha is a dyadic rational (denominator <= 2^24): the rotation is degenerate");
    if (!std::isfinite(rho)) throw std::invalid_argument("rho must be finite");
    return Source(std::make_shared<SturmianSource>(alpha, rho));
}

Source gen_periodic(const Word& W) { return Source(std::make_shared<PeriodicSource>(W)); }

Source gen_step(StepPolarity polarity) { return Source(std::make_shared<StepSource>(polarity)); }

Source gen_constant(Bit b) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit must be 0 or 1");
    return Source(std::make_shared<ConstantSource>(b));
}

RadoSystem rado_cayley(const Source& S, const std::vector<Index>& anchors,
                       Index universality_bound, Index scan) {
    if (universality_bound < 1 || universality_bound > 20)
        throw std::invalid_argument("universality bound must lie in [1, 20]");
    if (scan < universality_bound) throw std::invalid_argument("scan span too small");

    RadoSystem out;

    // Universality probe over the positive part: every word of length up to
    // the bound should occur somewhere in S[1..scan].
    const BitWindow probe = S.window(1, scan);
    Index missing = 0;
    std::string first_missing;
    for (Index len = 1; len <= universality_bound; ++len) {
        std::vector<bool> seen(std::size_t{1} << len, false);
        std::uint32_t code = 0;
        const std::uint32_t mask = (std::uint32_t{1} << len) - 1;
        for (Index i = 1; i <= scan; ++i) {
            code = ((code << 1) | probe.at(i)) & mask;
            if (i >= len) seen[code] = true;
        }
        for (std::uint32_t w = 0; w < (std::uint32_t{1} << len); ++w) {
            if (seen[w]) continue;
            ++missing;
            if (first_missing.empty()) {
                for (Index b = len - 1; b >= 0; --b)
                    first_missing.push_back(((w >> b) & 1u) ? '1' : '0');
            }
        }
    }
    if (missing > 0) {
        out.universal = false;
        out.warning = "rule is not universal at the probed scale: " + std::to_string(missing) +
                      " words of length <= " + std::to_string(universality_bound) +
                      " never occur in [1, " + std::to_string(scan) + "] (first: " +
                      first_missing + ")";
    }

    for (Index a : anchors) {
        const std::string label = std::to_string(a);
        out.system.register_anchor(label, a);
        out.system.register_set(
            "U_" + label, make_predicate_source([S, a](Index x) { return x != a && S(std::llabs(x - a)) == 1; }));
    }
    return out;
}

}  // namespace shiftlab
