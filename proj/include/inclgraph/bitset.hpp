#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace inclgraph {

// Fixed-width bitset sized at runtime. Element-membership sets for groups up
// to the order cap; supports the subset/join/lex operations the lattice code
// leans on.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    std::size_t intersection_count(const Bitset& other) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(words_[k] & other.words_[k]));
        return c;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& other) const { return words_ == other.words_; }
    bool operator!=(const Bitset& other) const { return words_ != other.words_; }

    // String-lexicographic order on the characteristic vector b0 b1 b2 ...:
    // at the first differing index, the set missing that element is smaller.
    bool lex_less(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t d = words_[k] ^ other.words_[k];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (words_[k] & low) == 0;
            }
        }
        return false;
    }

    // Index of the first set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++k == words_.size()) return nbits_;
            w = words_[k];
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = next(0); i < nbits_; i = next(i + 1))
            out.push_back(static_cast<int>(i));
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace inclgraph
