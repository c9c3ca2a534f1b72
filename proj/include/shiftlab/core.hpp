#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/*
 * Core value types for two-sided binary sequences.
 *
 * Three currencies circulate through the toolkit:
 *   - Word:      a finite 0/1 word, indexed 1..|W| (cylinder convention).
 *   - BitWindow: a materialized slice of a Z-sequence, indexed lo..hi.
 *   - Source:    an immutable, total, deterministic rule Z -> {0,1}.
 *
 * Everything is a value; Source copies share an immutable rule, so all
 * operations are pure and safe to use concurrently.
 */

namespace shiftlab {

using Index = std::int64_t;
using Bit = std::uint8_t;

class Word {
public:
    explicit Word(std::string_view text);
    explicit Word(std::vector<Bit> bits);

    // 1-based access, j in 1..length().
    Bit at(Index j) const;
    Index length() const { return static_cast<Index>(bits_.size()); }
    Index ones() const;
    Index zeros() const { return length() - ones(); }
    std::string str() const;
    const std::vector<Bit>& bits() const { return bits_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<Bit> bits_;
};

class BitWindow {
public:
    BitWindow(Index lo, std::vector<Bit> bits);

    Index lo() const { return lo_; }
    Index hi() const { return lo_ + static_cast<Index>(bits_.size()) - 1; }
    Index size() const { return static_cast<Index>(bits_.size()); }
    bool covers(Index a, Index b) const { return lo() <= a && b <= hi(); }

    Bit at(Index i) const;
    std::string str() const;
    const std::vector<Bit>& bits() const { return bits_; }

    friend bool operator==(const BitWindow&, const BitWindow&) = default;
    friend auto operator<=>(const BitWindow& a, const BitWindow& b) {
        if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Index lo_;
    std::vector<Bit> bits_;
};

namespace detail {
struct SourceImpl {
    virtual ~SourceImpl() = default;
    virtual Bit at(Index i) const = 0;
};
}  // namespace detail

/*
 * A Source evaluates anywhere on Z. Generator-backed sources are total;
 * the one exception is from_window(), whose rule is only defined on the
 * window's span and throws std::out_of_range beyond it (file-backed input
 * cannot be extended honestly).
 */
class Source {
public:
    explicit Source(std::shared_ptr<const detail::SourceImpl> impl) : impl_(std::move(impl)) {}

    Bit operator()(Index i) const { return impl_->at(i); }
    BitWindow window(Index lo, Index hi) const;

private:
    std::shared_ptr<const detail::SourceImpl> impl_;
};

// Wraps an arbitrary total predicate as a source.
Source make_predicate_source(std::function<bool(Index)> pred);
// Restriction of a window; evaluation outside [lo, hi] throws std::out_of_range.
Source from_window(BitWindow w);

// (I+a)(i) = I(i-a).  For windows the bounds move to [lo+a, hi+a].
Source shift(const Source& src, Index a);
BitWindow shift(const BitWindow& w, Index a);

// result(i) = 1 - src(i)
Source complement(const Source& src);
BitWindow complement(const BitWindow& w);

// Swaps the values at positions k and k+1; everything else unchanged.
// For windows both positions must lie in bounds.
Source switch_at(const Source& src, Index k);
BitWindow switch_at(const BitWindow& w, Index k);

}  // namespace shiftlab
