#ifndef ORDTILE_BITSET_HPP
#define ORDTILE_BITSET_HPP

#include <cstdint>
#include <vector>

namespace ordtile {

// Fixed-width bitset sized at construction. Vertex labels are used directly
// as bit indices, so a graph on [n] allocates n+1 bits and bit 0 stays clear.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int capacity() const { return bits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_range(int lo, int hi) {
        for (int i = lo; i <= hi; ++i)
            set(i);
    }

    void clear() {
        for (auto & w : words_)
            w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_)
            c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return ! any(); }

    // Smallest set bit, or -1.
    int find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return int(k * 64) + __builtin_ctzll(words_[k]);
        return -1;
    }

    // Smallest set bit strictly greater than i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= bits_)
            return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return int(k * 64) + __builtin_ctzll(w);
            if (++k == words_.size())
                return -1;
            w = words_[k];
        }
    }

    Bitset & operator&=(const Bitset & o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }

    Bitset & operator|=(const Bitset & o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    // this := this \ o
    Bitset & subtract(const Bitset & o) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    bool intersects(const Bitset & o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }

    // Clears bits 0..i inclusive.
    void clear_through(int i) {
        if (i < 0)
            return;
        std::size_t k = std::size_t(i) >> 6;
        for (std::size_t j = 0; j < k && j < words_.size(); ++j)
            words_[j] = 0;
        if (k < words_.size()) {
            int r = i & 63;
            words_[k] &= (r == 63) ? 0 : (~std::uint64_t{0} << (r + 1));
        }
    }

    friend bool operator==(const Bitset & a, const Bitset & b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}

#endif
