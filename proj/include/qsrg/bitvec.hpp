#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace qsrg {

// Fixed-width bit vector over 64-bit words. Used for vertex sets and
// adjacency rows; everything downstream leans on AND+popcount being cheap.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVec& operator&=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator^=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // this &= ~o
    BitVec& and_not(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

    int count_and(const BitVec& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0} >> (64 - (n_ & 63)));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace qsrg
