#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace fankit {

using Vertex = int;

/// Subset of the vertex range [0, universe). Iterates in ascending order.
class VertexSet {
    using Bits = boost::dynamic_bitset<std::uint64_t>;

public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const Bits* bits, Bits::size_type pos) : bits_(bits), pos_(pos) {}

        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        iterator& operator++() {
            pos_ = bits_->find_next(pos_);
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const Bits* bits_ = nullptr;
        Bits::size_type pos_ = Bits::npos;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
    VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members)
            insert(v);
    }
    template <class Range>
    static VertexSet of(int universe, const Range& members) {
        VertexSet s(universe);
        for (Vertex v : members)
            s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        s.bits_.set();
        return s;
    }

    int universe() const { return static_cast<int>(bits_.size()); }
    int count() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    bool contains(Vertex v) const { return bits_.test(static_cast<std::size_t>(v)); }
    void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
    void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }

    // -1 when empty / exhausted.
    Vertex first() const { return to_vertex(bits_.find_first()); }
    Vertex next(Vertex v) const { return to_vertex(bits_.find_next(static_cast<std::size_t>(v))); }

    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
    int intersection_count(const VertexSet& o) const { return static_cast<int>((bits_ & o.bits_).count()); }

    VertexSet& operator&=(const VertexSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        bits_ -= o.bits_;
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    iterator begin() const { return {&bits_, bits_.find_first()}; }
    iterator end() const { return {&bits_, Bits::npos}; }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    static Vertex to_vertex(Bits::size_type p) { return p == Bits::npos ? -1 : static_cast<Vertex>(p); }

    Bits bits_;
};

} // namespace fankit
