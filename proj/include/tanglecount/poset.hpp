#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanglecount/errors.hpp"
#include "tanglecount/vertex_set.hpp"

namespace tanglecount {

// Witness for an induced forbidden pattern.
//   3+1: chain = {a, b, c} with a < b < c, rest = {d} incomparable to all three.
//   2+2: chain = {a, b} with a < b, rest = {c, d} with c < d, cross pairs incomparable.
struct PatternWitness {
  std::vector<int> chain;
  std::vector<int> rest;

  bool operator==(const PatternWitness&) const = default;
};

class Not31FreeError : public std::runtime_error {
public:
  explicit Not31FreeError(PatternWitness w)
      : std::runtime_error("poset contains an induced (3+1)"), witness_(std::move(w)) {}

  const PatternWitness& witness() const { return witness_; }

private:
  PatternWitness witness_;
};

// Finite strict partial order on vertices 0..n-1, stored transitively closed.
// Immutable after construction; all queries are O(1) bit operations.
class Poset {
public:
  Poset() = default;

  // `up[a]` must be the full strict upset of a.  Validates irreflexivity,
  // antisymmetry and transitivity; throws CycleError on the first two,
  // asserts on the third (closed input is the constructor's contract).
  Poset(int n, std::vector<std::uint64_t> up) : n_(n), up_(std::move(up)) {
    if (n < 0 || n > 64) throw SizeError("poset size must be in [0, 64]");
    assert(static_cast<int>(up_.size()) == n);
    down_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      if ((up_[a] >> a) & 1u) throw CycleError("relation closure contains a < a");
      for (int b : VertexSet(up_[a])) {
        if ((up_[b] >> a) & 1u) throw CycleError("relation closure contains a cycle");
        down_[b] |= std::uint64_t{1} << a;
      }
    }
#ifndef NDEBUG
    for (int a = 0; a < n; ++a)
      for (int b : VertexSet(up_[a])) assert((up_[b] & ~up_[a]) == 0 && "relation not closed");
#endif
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool less(int a, int b) const { return (up_[a] >> b) & 1u; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  bool incomparable(int a, int b) const { return a != b && !comparable(a, b); }

  VertexSet downset(int a) const {
    check_index(a);
    return VertexSet(down_[a]);
  }
  VertexSet upset(int a) const {
    check_index(a);
    return VertexSet(up_[a]);
  }

  // Vertices incomparable to a (excludes a itself).
  VertexSet incomparables(int a) const {
    check_index(a);
    return vertices() - VertexSet(down_[a] | up_[a] | (std::uint64_t{1} << a));
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

private:
  void check_index(int a) const {
    if (a < 0 || a >= n_) throw IndexError("vertex index " + std::to_string(a) + " out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

// Builds the transitive closure of an arbitrary generating set of ordered
// pairs.  Throws IndexError for out-of-range vertices and CycleError when the
// closure would violate irreflexivity or antisymmetry.
inline Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0 || n > 64) throw SizeError("poset size must be in [0, 64]");
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexError("relation endpoint out of range");
    up[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if ((up[a] >> k) & 1u) up[a] |= up[k];
  return Poset(n, std::move(up));
}

inline VertexSet downset(const Poset& p, int a) { return p.downset(a); }
inline VertexSet upset(const Poset& p, int a) { return p.upset(a); }

// Searches for an induced 3-chain plus an isolated vertex.  Empty result
// means P is (3+1)-free.
inline std::optional<PatternWitness> find_3plus1(const Poset& p) {
  const int n = p.size();
  for (int b = 0; b < n; ++b) {
    const VertexSet db = p.downset(b), ub = p.upset(b);
    if (db.empty() || ub.empty()) continue;
    const VertexSet ib = p.incomparables(b);
    for (int a : db) {
      const VertexSet ia = p.incomparables(a) & ib;
      if (ia.empty()) continue;
      for (int c : ub) {
        const VertexSet m = ia & p.incomparables(c);
        if (!m.empty()) return PatternWitness{{a, b, c}, {m.min()}};
      }
    }
  }
  return std::nullopt;
}

// Searches for two disjoint induced 2-chains.
inline std::optional<PatternWitness> find_2plus2(const Poset& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    for (int c : p.downset(a)) {
      // second chain d < b disjoint from {c, a} with all cross pairs incomparable
      for (int b : p.incomparables(a) & p.incomparables(c)) {
        const VertexSet ds = p.downset(b) & p.incomparables(a) & p.incomparables(c);
        if (!ds.empty()) return PatternWitness{{c, a}, {ds.min(), b}};
      }
    }
  }
  return std::nullopt;
}

// L_1 = minimal vertices, L_{k+1} = minimal vertices after removing earlier
// levels; the list partitions the vertex set and has length = height.
inline std::vector<VertexSet> levels(const Poset& p) {
  std::vector<VertexSet> out;
  VertexSet removed;
  const VertexSet all = p.vertices();
  while (removed != all) {
    VertexSet layer;
    for (int v : all - removed)
      if ((p.downset(v) - removed).empty()) layer.add(v);
    assert(!layer.empty());
    out.push_back(layer);
    removed |= layer;
  }
  return out;
}

// level_of[v] is 1-based, matching the L_1, L_2, ... indexing.
inline std::vector<int> level_of(const Poset& p) {
  std::vector<int> lv(static_cast<std::size_t>(p.size()), 0);
  int k = 1;
  for (const VertexSet& layer : levels(p)) {
    for (int v : layer) lv[static_cast<std::size_t>(v)] = k;
    ++k;
  }
  return lv;
}

// Covering pairs (a, b): a < b with nothing strictly between.
inline std::vector<std::pair<int, int>> covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < p.size(); ++b) {
    for (int a : p.downset(b)) {
      if ((p.upset(a) & p.downset(b)).empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace tanglecount
