#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace biloc {

/// Index of an element inside a FiniteLattice (input order).
using Element = std::uint32_t;

/// Hard upper bound on anything stored in a BitSet64.
inline constexpr std::size_t kMaxBits = 64;

/// Fixed-width subset of {0..63}. The tag keeps element sets and point sets
/// from being mixed up.
template <class Tag>
class BitSet64 {
 public:
  constexpr BitSet64() = default;
  constexpr explicit BitSet64(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet64 single(std::uint32_t e) { return BitSet64(std::uint64_t{1} << e); }
  static constexpr BitSet64 full(std::size_t n) {
    return BitSet64(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::uint32_t e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(std::uint32_t e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(std::uint32_t e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(BitSet64 other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet64 other) const { return (bits_ & other.bits_) != 0; }
  constexpr std::uint32_t first() const { return static_cast<std::uint32_t>(std::countr_zero(bits_)); }

  constexpr BitSet64 operator|(BitSet64 o) const { return BitSet64(bits_ | o.bits_); }
  constexpr BitSet64 operator&(BitSet64 o) const { return BitSet64(bits_ & o.bits_); }
  constexpr BitSet64 operator-(BitSet64 o) const { return BitSet64(bits_ & ~o.bits_); }
  constexpr BitSet64& operator|=(BitSet64 o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet64& operator&=(BitSet64 o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const BitSet64&) const = default;
  constexpr auto operator<=>(const BitSet64&) const = default;

  class iterator {
   public:
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::uint32_t operator*() const { return static_cast<std::uint32_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementTag {};
struct PointTag {};

using ElementSet = BitSet64<ElementTag>;
using PointSet = BitSet64<PointTag>;

struct BitSetHash {
  template <class Tag>
  std::size_t operator()(BitSet64<Tag> s) const {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace biloc
