#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vcr {

/// Dynamic bit vector packed LSB-first into 64-bit words.
///
/// Trailing bits past size() are kept zero, so whole-word equality and
/// hashing are valid without masking.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void push_back(bool v) {
        if ((n_ & 63) == 0) w_.push_back(0);
        if (v) w_[n_ >> 6] |= std::uint64_t{1} << (n_ & 63);
        ++n_;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    /// Index of the first set bit, or size() if none.
    std::size_t find_first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
        return n_;
    }

    /// First set bit at index >= from, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t k = from >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++k == w_.size()) return n_;
            w = w_[k];
        }
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    /// Index of the first bit where *this and b differ (sizes must match),
    /// or size() if equal.
    std::size_t first_diff(const BitVec& b) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            const std::uint64_t x = w_[k] ^ b.w_[k];
            if (x) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(x));
        }
        return n_;
    }

    /// Three-way order on the bit string b[0] b[1] ... read as '0'/'1' chars.
    static int compare_lex(const BitVec& a, const BitVec& b) {
        const std::size_t common = a.n_ < b.n_ ? a.n_ : b.n_;
        for (std::size_t i = 0; i < common; ++i) {
            // word-skip fast path
            if ((i & 63) == 0 && i + 64 <= common && a.w_[i >> 6] == b.w_[i >> 6]) {
                i += 63;
                continue;
            }
            const bool x = a.get(i), y = b.get(i);
            if (x != y) return x ? 1 : -1;
        }
        if (a.n_ == b.n_) return 0;
        return a.n_ < b.n_ ? -1 : 1;
    }

    BitVec operator&(const BitVec& o) const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }

    BitVec operator|(const BitVec& o) const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
        return r;
    }

    /// this & ~o
    BitVec and_not(const BitVec& o) const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
        return r;
    }

    /// Bitwise complement within size().
    BitVec flipped() const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.mask_tail();
        return r;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    friend bool operator<(const BitVec& a, const BitVec& b) { return compare_lex(a, b) < 0; }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull ^ (n_ * 0x9e3779b97f4a7c15ull);
        for (std::uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    void mask_tail() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace vcr
