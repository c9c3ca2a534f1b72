#include "shiftlab/core.hpp"

#include <utility>

namespace shiftlab {

namespace {

void check_bits(const std::vector<Bit>& bits, const char* what) {
    if (bits.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
    for (Bit b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument(std::string(what) + " entries must be 0 or 1");
    }
}

std::vector<Bit> bits_from_text(std::string_view text, const char* what) {
    std::vector<Bit> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument(std::string(what) + " must consist of 0/1 characters");
        bits.push_back(static_cast<Bit>(ch - '0'));
    }
    return bits;
}

std::string text_from_bits(const std::vector<Bit>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (Bit b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

}  // namespace

Word::Word(std::string_view text) : bits_(bits_from_text(text, "word")) {
    check_bits(bits_, "word");
}

Word::Word(std::vector<Bit> bits) : bits_(std::move(bits)) {
    check_bits(bits_, "word");
}

Bit Word::at(Index j) const {
    if (j < 1 || j > length()) throw std::out_of_range("word index out of range");
    return bits_[static_cast<std::size_t>(j - 1)];
}

Index Word::ones() const {
    Index n = 0;
    for (Bit b : bits_) n += b;
    return n;
}

std::string Word::str() const { return text_from_bits(bits_); }

BitWindow::BitWindow(Index lo, std::vector<Bit> bits) : lo_(lo), bits_(std::move(bits)) {
    check_bits(bits_, "window");
}

Bit BitWindow::at(Index i) const {
    if (i < lo() || i > hi()) throw std::out_of_range("window index out of range");
    return bits_[static_cast<std::size_t>(i - lo_)];
}

std::string BitWindow::str() const { return text_from_bits(bits_); }

BitWindow Source::window(Index lo, Index hi) const {
    if (lo > hi) throw std::invalid_argument("window bounds out of order");
    std::vector<Bit> bits;
    bits.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index i = lo; i <= hi; ++i) bits.push_back((*this)(i));
    return BitWindow(lo, std::move(bits));
}

namespace {

struct PredicateSource final : detail::SourceImpl {
    explicit PredicateSource(std::function<bool(Index)> pred) : pred_(std::move(pred)) {}
    Bit at(Index i) const override { return pred_(i) ? 1 : 0; }
    std::function<bool(Index)> pred_;
};

struct WindowSource final : detail::SourceImpl {
    explicit WindowSource(BitWindow w) : w_(std::move(w)) {}
    Bit at(Index i) const override {
        if (i < w_.lo() || i > w_.hi()) throw std::out_of_range("evaluation outside window span");
        return w_.at(i);
    }
    BitWindow w_;
};

struct ShiftSource final : detail::SourceImpl {
    ShiftSource(Source base, Index a) : base_(std::move(base)), a_(a) {}
    Bit at(Index i) const override { return base_(i - a_); }
    Source base_;
    Index a_;
};

struct ComplementSource final : detail::SourceImpl {
    explicit ComplementSource(Source base) : base_(std::move(base)) {}
    Bit at(Index i) const override { return static_cast<Bit>(1 - base_(i)); }
    Source base_;
};

struct SwitchSource final : detail::SourceImpl {
    SwitchSource(Source base, Index k) : base_(std::move(base)), k_(k) {}
    Bit at(Index i) const override {
        if (i == k_) return base_(k_ + 1);
        if (i == k_ + 1) return base_(k_);
        return base_(i);
    }
    Source base_;
    Index k_;
};

}  // namespace

Source make_predicate_source(std::function<bool(Index)> pred) {
    return Source(std::make_shared<PredicateSource>(std::move(pred)));
}

Source from_window(BitWindow w) { return Source(std::make_shared<WindowSource>(std::move(w))); }

Source shift(const Source& src, Index a) { return Source(std::make_shared<ShiftSource>(src, a)); }

BitWindow shift(const BitWindow& w, Index a) { return BitWindow(w.lo() + a, w.bits()); }

Source complement(const Source& src) { return Source(std::make_shared<ComplementSource>(src)); }

BitWindow complement(const BitWindow& w) {
    std::vector<Bit> bits = w.bits();
    for (Bit& b : bits) b = static_cast<Bit>(1 - b);
    return BitWindow(w.lo(), std::move(bits));
}

Source switch_at(const Source& src, Index k) {
    return Source(std::make_shared<SwitchSource>(src, k));
}

BitWindow switch_at(const BitWindow& w, Index k) {
    if (!w.covers(k, k + 1)) throw std::out_of_range("switch positions must lie inside the window");
    std::vector<Bit> bits = w.bits();
    std::swap(bits[static_cast<std::size_t>(k - w.lo())],
              bits[static_cast<std::size_t>(k + 1 - w.lo())]);
    return BitWindow(w.lo(), std::move(bits));
}

}  // namespace shiftlab
