#ifndef EQC_BITSET_HPP
#define EQC_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace eqc {

// Fixed-width bit vector sized at construction. Vertices and colors are
// stored as bit indices; all solver-critical set operations (availability
// intersections, neighbor scans) are word-parallel. Bits past nbits are
// kept zero so count() and operator== stay exact.
class bitset {
public:
    bitset() = default;

    explicit bitset(int nbits, bool ones = false)
        : words_((nbits + 63) / 64, ones ? ~std::uint64_t{0} : 0), nbits_(nbits)
    {
        if (ones)
            clear_tail();
    }

    int capacity() const { return nbits_; }

    void set(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(int i) const
    {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void reset_all()
    {
        for (auto& w : words_)
            w = 0;
    }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        clear_tail();
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    int count_and(const bitset& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // |this ∧ other ∧ {0,...,len-1}|
    int count_and_prefix(const bitset& o, int len) const
    {
        if (len <= 0)
            return 0;
        if (len > nbits_)
            len = nbits_;
        int full = len >> 6;
        int c = 0;
        for (int i = 0; i < full; ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        if (len & 63)
            c += std::popcount(words_[full] & o.words_[full]
                & ((std::uint64_t{1} << (len & 63)) - 1));
        return c;
    }

    // this ∧ {0,...,len-1} ≠ ∅
    bool any_prefix(int len) const
    {
        if (len <= 0)
            return false;
        if (len > nbits_)
            len = nbits_;
        int full = len >> 6;
        for (int i = 0; i < full; ++i)
            if (words_[i])
                return true;
        if (len & 63)
            return words_[full] & ((std::uint64_t{1} << (len & 63)) - 1);
        return false;
    }

    int first_set() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return int(i << 6) + std::countr_zero(words_[i]);
        return -1;
    }

    template <class F> void for_each(F f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    // iterate over set bits of a ∧ b
    template <class F> static void for_each_and(const bitset& a, const bitset& b, F f)
    {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t w = a.words_[i] & b.words_[i];
            while (w) {
                f(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    bitset& operator&=(const bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    bitset& operator|=(const bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    // this \ o
    bitset& subtract(const bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend bool operator==(const bitset&, const bitset&) = default;

private:
    void clear_tail()
    {
        if (nbits_ & 63)
            words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    std::vector<std::uint64_t> words_;
    int nbits_ = 0;
};

} // namespace eqc

#endif
