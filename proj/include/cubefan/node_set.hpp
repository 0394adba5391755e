#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cubefan {

// Set of graph nodes drawn from 1..n, n <= 64, backed by one machine word.
// Node v occupies bit v-1.
class NodeSet {
public:
    static constexpr int kMaxNodes = 64;

    constexpr NodeSet() = default;

    static constexpr NodeSet from_raw(std::uint64_t bits) {
        NodeSet s;
        s.bits_ = bits;
        return s;
    }
    static constexpr NodeSet single(int v) { return from_raw(bit(v)); }
    static constexpr NodeSet full(int n) {
        return from_raw(n >= 64 ? ~0ull : (1ull << n) - 1);
    }
    static NodeSet of(std::initializer_list<int> vs) {
        NodeSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t raw() const { return bits_; }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    void insert(int v) { bits_ |= bit(v); }
    void erase(int v) { bits_ &= ~bit(v); }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    // Smallest element; only meaningful on a nonempty set.
    constexpr int least() const { return std::countr_zero(bits_) + 1; }

    constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr NodeSet operator|(NodeSet o) const { return from_raw(bits_ | o.bits_); }
    constexpr NodeSet operator&(NodeSet o) const { return from_raw(bits_ & o.bits_); }
    constexpr NodeSet operator-(NodeSet o) const { return from_raw(bits_ & ~o.bits_); }
    NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
    NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
    NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const NodeSet&) const = default;

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    // Allocation-free iteration over elements in ascending order.
    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static constexpr std::uint64_t bit(int v) { return 1ull << (v - 1); }

    std::uint64_t bits_ = 0;
};

// Order by (size, lexicographic element sequence). {1,4} < {2,3}.
inline bool lex_less(NodeSet a, NodeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t x = a.raw(), y = b.raw();
    while (x != 0 && y != 0) {
        int la = std::countr_zero(x), lb = std::countr_zero(y);
        if (la != lb) return la < lb;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

inline std::string to_string(NodeSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace cubefan
