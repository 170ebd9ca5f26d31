#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>

// Width of the vertex universe.  One 64-bit word covers every desk-scale
// input; configure -DBETTISPLIT_MAX_VERTICES=256 (or similar) for the wide
// mode.
#ifndef BETTISPLIT_MAX_VERTICES
#define BETTISPLIT_MAX_VERTICES 64
#endif

namespace bettisplit {

// A set of vertex indices, used interchangeably for adjacency rows,
// faces of a simplicial complex, and supports of squarefree monomials.
class VertexSet {
public:
    static constexpr int kBits = BETTISPLIT_MAX_VERTICES;
    static constexpr int kWords = (kBits + 63) / 64;

    constexpr VertexSet() = default;

    static constexpr int capacity() { return kBits; }

    static VertexSet single(int i) {
        VertexSet s;
        s.set(i);
        return s;
    }

    // The set {0, 1, ..., n-1}.
    static VertexSet first_n(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int k = n - lo;
            s.w_[w] = (k >= 64) ? ~0ull : ((1ull << k) - 1);
        }
        return s;
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

    int count() const {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(w_[w]);
        return c;
    }

    bool empty() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return false;
        return true;
    }

    bool contains(const VertexSet& o) const { // o subseteq *this
        for (int w = 0; w < kWords; ++w)
            if (o.w_[w] & ~w_[w]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int w = 0; w < kWords; ++w) r.w_[w] = w_[w] | o.w_[w];
        return r;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int w = 0; w < kWords; ++w) r.w_[w] = w_[w] & o.w_[w];
        return r;
    }
    VertexSet minus(const VertexSet& o) const {
        VertexSet r;
        for (int w = 0; w < kWords; ++w) r.w_[w] = w_[w] & ~o.w_[w];
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
        return *this;
    }

    // Smallest element, or -1 when empty.
    int lowest() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    // Visits elements in increasing order.
    template <typename F>
    void for_each(F f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t x = w_[w];
            while (x) {
                int b = std::countr_zero(x);
                f(w * 64 + b);
                x &= x - 1;
            }
        }
    }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Strict lexicographic order on the increasing index sequences, with a
    // proper prefix preceding any extension ("a" < "ab" < "b").
    bool lex_less(const VertexSet& o) const {
        VertexSet diff;
        bool any = false;
        for (int w = 0; w < kWords; ++w) {
            diff.w_[w] = w_[w] ^ o.w_[w];
            any |= diff.w_[w] != 0;
        }
        if (!any) return false;
        int d = diff.lowest();
        if (test(d)) {
            // o agrees below d and lacks d; *this is smaller unless o has
            // run out (then o is a proper prefix of *this).
            return o.has_element_above(d);
        }
        return !has_element_above(d);
    }

    bool has_element_above(int i) const {
        for (int w = i >> 6; w < kWords; ++w) {
            std::uint64_t x = w_[w];
            if (w == (i >> 6)) x &= ~((2ull << (i & 63)) - 1);
            if (x) return true;
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (int w = 0; w < kWords; ++w)
            h = h * 1099511628211ull + w_[w];
        return h;
    }

    std::uint64_t word(int w) const { return w_[w]; }

private:
    std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Canonical generator/facet order: by cardinality, then lexicographic.
inline bool degree_lex_less(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
}

} // namespace bettisplit
