#include "discover/relation.hpp"

#include <stdexcept>

namespace discover {

Relation Relation::from_pairs(std::size_t n, const std::vector<Pair>& pairs) {
    Relation rel(n);
    for (const auto& [from, to] : pairs) rel.insert(from, to);
    return rel;
}

std::size_t Relation::size() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.count();
    return total;
}

std::vector<Pair> Relation::pairs() const {
    std::vector<Pair> out;
    for (std::size_t from = 0; from < rows_.size(); ++from)
        for_each_bit(rows_[from], [&](std::size_t to) { out.emplace_back(from, to); });
    return out;
}

Relation Relation::transposed() const {
    Relation out(rows_.size());
    for (std::size_t from = 0; from < rows_.size(); ++from)
        for_each_bit(rows_[from], [&](std::size_t to) { out.insert(to, from); });
    return out;
}

bool Relation::intersects(const Relation& other) const {
    if (other.rows_.size() != rows_.size()) throw std::invalid_argument("relation domain mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].intersects(other.rows_[i])) return true;
    return false;
}

Relation& Relation::operator|=(const Relation& other) {
    if (other.rows_.size() != rows_.size()) throw std::invalid_argument("relation domain mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= other.rows_[i];
    return *this;
}

Relation& Relation::operator-=(const Relation& other) {
    if (other.rows_.size() != rows_.size()) throw std::invalid_argument("relation domain mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] -= other.rows_[i];
    return *this;
}

bool Relation::is_subset_of(const Relation& other) const {
    if (other.rows_.size() != rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!rows_[i].is_subset_of(other.rows_[i])) return false;
    return true;
}

}  // namespace discover
