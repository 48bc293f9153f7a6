#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tanglecount {

// Subset of {0, ..., 63} with bitset semantics.  Poset vertex counts are
// capped at 64, which is far beyond the documented desk-scale bounds.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

  // Lowest member, or -1 when empty.
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Minimal forward iteration over set bits, ascending.
  class iterator {
  public:
    constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr iterator& operator++() { bits_ &= bits_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

  private:
    std::uint64_t bits_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace tanglecount
