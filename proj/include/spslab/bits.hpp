#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spslab {

// Fixed-capacity bitset sized at construction. Used for order relation rows
// where the element count can exceed 64.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : size_(n), blocks_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    Bits& operator&=(const Bits& o) {
        for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= o.blocks_[b];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] |= o.blocks_[b];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool operator==(const Bits&) const = default;

    bool is_subset_of(const Bits& o) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (blocks_[b] & ~o.blocks_[b]) return false;
        return true;
    }

    bool any() const {
        for (auto b : blocks_)
            if (b) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    // Index of the highest/lowest set bit; -1 when empty.
    int highest() const {
        for (std::size_t b = blocks_.size(); b-- > 0;)
            if (blocks_[b]) return static_cast<int>(b * 64 + 63 - std::countl_zero(blocks_[b]));
        return -1;
    }
    int lowest() const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (blocks_[b]) return static_cast<int>(b * 64 + std::countr_zero(blocks_[b]));
        return -1;
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            std::uint64_t w = blocks_[b];
            while (w) {
                f(b * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace spslab
