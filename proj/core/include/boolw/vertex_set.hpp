#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace boolw {

// Subset of a fixed vertex universe 0..n-1, packed 64 vertices per word.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~uint64_t(0);
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void insert(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void erase(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;
    // Deterministic total order (word-lexicographic), used to canonicalize
    // grouping keys.
    bool operator<(const VertexSet& o) const { return w_ < o.w_; }

    template <class F>
    void for_each(F f) const {  // ascending vertex order
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(int(i * 64 + b));
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }

    const std::vector<uint64_t>& words() const { return w_; }

  private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace boolw
