#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace forcing {

using Vertex = int;

/// Bit-packed subset of {0, ..., capacity-1}. Capacity is at most 64.
class VertexSet {
public:
    static constexpr int kMaxCapacity = 64;

    VertexSet() = default;

    explicit VertexSet(int capacity) : capacity_(capacity)
    {
        if (capacity < 0 || capacity > kMaxCapacity)
            throw std::out_of_range("VertexSet capacity must be in [0, 64]");
    }

    VertexSet(int capacity, std::initializer_list<Vertex> members) : VertexSet(capacity)
    {
        for (Vertex v : members)
            insert(v);
    }

    static VertexSet from_bits(int capacity, std::uint64_t bits)
    {
        VertexSet s(capacity);
        if ((bits & ~s.universe_bits()) != 0)
            throw std::out_of_range("VertexSet bits exceed capacity");
        s.bits_ = bits;
        return s;
    }

    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        s.bits_ = s.universe_bits();
        return s;
    }

    int capacity() const noexcept { return capacity_; }
    std::uint64_t bits() const noexcept { return bits_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == universe_bits(); }

    bool contains(Vertex v) const noexcept
    {
        return v >= 0 && v < capacity_ && ((bits_ >> v) & 1U) != 0;
    }

    void insert(Vertex v)
    {
        check(v);
        bits_ |= std::uint64_t{1} << v;
    }

    void erase(Vertex v)
    {
        check(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    VertexSet complement() const
    {
        return from_bits(capacity_, ~bits_ & universe_bits());
    }

    bool is_subset_of(const VertexSet& other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }

    /// Members in increasing order.
    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    VertexSet operator|(const VertexSet& o) const { return from_bits(capacity_, bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return from_bits(capacity_, bits_ & o.bits_); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic comparison of the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        auto am = a.members();
        auto bm = b.members();
        return am < bm;
    }

    std::uint64_t universe_bits() const noexcept
    {
        return capacity_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << capacity_) - 1;
    }

private:
    void check(Vertex v) const
    {
        if (v < 0 || v >= capacity_)
            throw std::out_of_range("vertex id " + std::to_string(v) + " outside set capacity " +
                                    std::to_string(capacity_));
    }

    int capacity_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace forcing
