#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hypfloquet {

/// Fixed-length bit vector over GF(2), word-packed.
class Bits {
   public:
    Bits() = default;
    explicit Bits(size_t size) : size_(size), words_((size + 63) / 64, 0) {
    }

    size_t size() const noexcept {
        return size_;
    }
    size_t num_words() const noexcept {
        return words_.size();
    }
    uint64_t word(size_t k) const noexcept {
        return words_[k];
    }
    uint64_t &word(size_t k) noexcept {
        return words_[k];
    }

    bool get(size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true) noexcept {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) noexcept {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    bool any() const noexcept {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    size_t popcount() const noexcept {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    /// Index of the lowest set bit, or size() if none.
    size_t first_set() const noexcept {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k]) {
                return k * 64 + std::countr_zero(words_[k]);
            }
        }
        return size_;
    }
    /// Index of the lowest set bit at or after `from`, or size() if none.
    size_t next_set(size_t from) const noexcept {
        if (from >= size_) {
            return size_;
        }
        size_t k = from >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                return k * 64 + std::countr_zero(w);
            }
            if (++k >= words_.size()) {
                return size_;
            }
            w = words_[k];
        }
    }

    Bits &operator^=(const Bits &other) noexcept {
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    Bits &operator|=(const Bits &other) noexcept {
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }
    Bits &operator&=(const Bits &other) noexcept {
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    friend Bits operator^(Bits a, const Bits &b) noexcept {
        return a ^= b;
    }
    friend Bits operator|(Bits a, const Bits &b) noexcept {
        return a |= b;
    }
    friend Bits operator&(Bits a, const Bits &b) noexcept {
        return a &= b;
    }
    Bits operator~() const noexcept {
        Bits r = *this;
        for (auto &w : r.words_) {
            w = ~w;
        }
        r.clear_padding();
        return r;
    }

    bool intersects(const Bits &other) const noexcept {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & other.words_[k]) {
                return true;
            }
        }
        return false;
    }

    friend bool operator==(const Bits &a, const Bits &b) = default;
    friend auto operator<=>(const Bits &a, const Bits &b) = default;

   private:
    void clear_padding() noexcept {
        if (size_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace hypfloquet
