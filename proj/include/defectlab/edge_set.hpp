#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace defectlab {

// Fixed-capacity bitset over edge ids. Sized for the graphs this library
// targets (censuses up to a few dozen vertices); larger graphs are rejected
// by the algorithms that need edge sets.
class EdgeSet {
  public:
    static constexpr int kWords = 4;
    static constexpr int kCapacity = 64 * kWords;

    constexpr EdgeSet() = default;

    static EdgeSet of(const std::vector<int>& edges) {
        EdgeSet s;
        for (int e : edges) s.insert(e);
        return s;
    }

    static void check_capacity(int edge_count) {
        if (edge_count > kCapacity)
            throw std::length_error("graph has more edges than EdgeSet capacity");
    }

    void insert(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    bool contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

    int size() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeSet& operator-=(const EdgeSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    bool intersects(const EdgeSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const EdgeSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < kWords; ++i) {
            auto w = words_[i];
            while (w) {
                out.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    // Order by the ascending list of member ids (lexicographic); the set
    // holding the smaller first differing id sorts first.
    friend bool lex_less(const EdgeSet& a, const EdgeSet& b) {
        for (int i = 0; i < kWords; ++i) {
            auto diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                auto low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

  private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace defectlab
