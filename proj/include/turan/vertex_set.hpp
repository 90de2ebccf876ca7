#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace turan {

// Fixed-width vertex set over labels 0..127, two 64-bit words.
// Small enough to pass by value everywhere; all operations are word ops.
struct VertexSet {
    static constexpr int max_vertices = 128;

    std::uint64_t w0 = 0, w1 = 0;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet range(int n) {
        check_label(n == 0 ? 0 : n - 1);
        VertexSet s;
        if (n >= 64) {
            s.w0 = ~0ull;
            s.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else if (n > 0) {
            s.w0 = (1ull << n) - 1;
        }
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    void insert(int v) {
        check_label(v);
        if (v < 64) w0 |= 1ull << v; else w1 |= 1ull << (v - 64);
    }
    void erase(int v) {
        check_label(v);
        if (v < 64) w0 &= ~(1ull << v); else w1 &= ~(1ull << (v - 64));
    }
    bool contains(int v) const {
        if (v < 0 || v >= max_vertices) return false;
        return v < 64 ? (w0 >> v) & 1 : (w1 >> (v - 64)) & 1;
    }

    int size() const { return std::popcount(w0) + std::popcount(w1); }
    bool empty() const { return (w0 | w1) == 0; }

    friend VertexSet operator|(VertexSet a, VertexSet b) {
        return VertexSet(a.w0 | b.w0, a.w1 | b.w1);
    }
    friend VertexSet operator&(VertexSet a, VertexSet b) {
        return VertexSet(a.w0 & b.w0, a.w1 & b.w1);
    }
    friend VertexSet operator-(VertexSet a, VertexSet b) {
        return VertexSet(a.w0 & ~b.w0, a.w1 & ~b.w1);
    }
    VertexSet& operator|=(VertexSet o) { w0 |= o.w0; w1 |= o.w1; return *this; }
    VertexSet& operator&=(VertexSet o) { w0 &= o.w0; w1 &= o.w1; return *this; }

    bool operator==(const VertexSet&) const = default;

    bool subset_of(VertexSet o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }
    bool disjoint_with(VertexSet o) const { return (w0 & o.w0) == 0 && (w1 & o.w1) == 0; }

    int min_element() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }

    // smallest element strictly greater than v, or -1
    int next_element(int v) const {
        VertexSet rest = *this;
        rest.w0 &= (v < 63) ? ~((v < 0) ? 0ull : ((2ull << v) - 1)) : 0ull;
        if (v >= 64) rest.w1 &= ~((2ull << (v - 64)) - 1);
        return rest.min_element();
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = min_element(); v >= 0; v = next_element(v)) out.push_back(v);
        return out;
    }

    // compare as sorted tuples of elements (lexicographic); shorter prefix wins
    static bool lex_less(VertexSet a, VertexSet b) {
        int x = a.min_element(), y = b.min_element();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next_element(x);
            y = b.next_element(y);
        }
        return x < 0 && y >= 0;
    }

  private:
    VertexSet(std::uint64_t a, std::uint64_t b) : w0(a), w1(b) {}
    static void check_label(int v) {
        if (v < 0 || v >= max_vertices)
            throw std::invalid_argument("vertex label out of range 0..127");
    }
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.w0 * 0x9E3779B97F4A7C15ull;
        h ^= s.w1 + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

} // namespace turan
