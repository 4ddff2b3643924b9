#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cubical {

// Fixed-length bit vector used for poset reachability rows and GF(2) rows.
class Bitvec {
public:
    Bitvec() = default;
    explicit Bitvec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    Bitvec& operator&=(const Bitvec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    Bitvec& operator|=(const Bitvec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    Bitvec& operator^=(const Bitvec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend Bitvec operator&(Bitvec a, const Bitvec& b) { a &= b; return a; }
    friend Bitvec operator|(Bitvec a, const Bitvec& b) { a |= b; return a; }
    friend Bitvec operator^(Bitvec a, const Bitvec& b) { a ^= b; return a; }

    bool operator==(const Bitvec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // True if every set bit of *this is also set in o.
    bool subset_of(const Bitvec& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const Bitvec& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    int first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64 + __builtin_ctzll(words_[w]));
        return -1;
    }

    template <typename F>
    void for_each_set(F f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cubical
