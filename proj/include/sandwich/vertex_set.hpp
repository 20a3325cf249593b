#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sandwich {

using Vertex = int;

/// Fixed-capacity bitset over dense vertex ids [0, capacity).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    /// All of [0, capacity).
    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        for (Vertex v = 0; v < capacity; ++v)
            s.insert(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    void insert(Vertex v) noexcept { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) noexcept { words_[v >> 6] &= ~bit(v); }
    bool contains(Vertex v) const noexcept { return (words_[v >> 6] & bit(v)) != 0; }

    void clear() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    int size() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const VertexSet & o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    Vertex next(Vertex from) const noexcept
    {
        if (from >= capacity_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    Vertex first() const noexcept { return next(0); }

    template <class F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet & operator&=(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet & operator|=(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) noexcept { return a -= b; }

    bool operator==(const VertexSet &) const = default;

private:
    static constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sandwich
