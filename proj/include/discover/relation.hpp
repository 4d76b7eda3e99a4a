#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "discover/bitvector.hpp"

namespace discover {

using Pair = std::pair<std::size_t, std::size_t>;

// Binary relation over {0..n-1} stored as one bit row per first component.
// Row r holds every c with (r, c) in the relation.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : rows_(n, BitVector(n)) {}

    static Relation from_pairs(std::size_t n, const std::vector<Pair>& pairs);

    std::size_t domain_size() const noexcept { return rows_.size(); }

    bool contains(std::size_t from, std::size_t to) const { return rows_.at(from).test(to); }
    void insert(std::size_t from, std::size_t to) { rows_.at(from).set(to); }
    void erase(std::size_t from, std::size_t to) { rows_.at(from).reset(to); }

    const BitVector& row(std::size_t from) const { return rows_.at(from); }
    BitVector& row(std::size_t from) { return rows_.at(from); }

    /// Number of pairs.
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Pairs in ascending (first, second) order.
    std::vector<Pair> pairs() const;

    Relation transposed() const;

    /// True iff this relation and other share at least one pair.
    bool intersects(const Relation& other) const;

    /// Set union / difference in place; domains must match.
    Relation& operator|=(const Relation& other);
    Relation& operator-=(const Relation& other);

    bool is_subset_of(const Relation& other) const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }

private:
    std::vector<BitVector> rows_;
};

}  // namespace discover
