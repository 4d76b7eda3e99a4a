#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace discover {

using BitVector = boost::dynamic_bitset<std::uint64_t>;

inline BitVector empty_bits(std::size_t width) { return BitVector(width); }

inline BitVector full_bits(std::size_t width) {
    BitVector bits(width);
    bits.set();
    return bits;
}

template <typename Fn>
void for_each_bit(const BitVector& bits, Fn&& fn) {
    for (auto i = bits.find_first(); i != BitVector::npos; i = bits.find_next(i)) fn(i);
}

inline std::vector<std::size_t> bit_indices(const BitVector& bits) {
    std::vector<std::size_t> out;
    out.reserve(bits.count());
    for_each_bit(bits, [&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace discover
