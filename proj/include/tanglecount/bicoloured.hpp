#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tanglecount/numeric.hpp"
#include "tanglecount/poset.hpp"

namespace tanglecount {

// Bipartite graph with an ordered bipartition (top, bottom).  Read as a
// height-<=2 poset: bottom b < top a iff they are adjacent.
struct BicolouredGraph {
  int tops = 0;
  int bottoms = 0;
  std::vector<std::uint64_t> adj;  // adj[a] = bottom-neighbourhood mask of top a

  bool edge(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1u; }

  int edge_count() const {
    int e = 0;
    for (std::uint64_t m : adj) e += std::popcount(m);
    return e;
  }

  BicolouredGraph transposed() const {
    BicolouredGraph g{bottoms, tops, std::vector<std::uint64_t>(static_cast<std::size_t>(bottoms), 0)};
    for (int a = 0; a < tops; ++a)
      for (int b = 0; b < bottoms; ++b)
        if (edge(a, b)) g.adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    return g;
  }

  // Bottoms become vertices 0..q-1, tops q..q+p-1.
  Poset to_poset() const {
    std::vector<std::uint64_t> up(static_cast<std::size_t>(bottoms + tops), 0);
    for (int a = 0; a < tops; ++a)
      for (int b = 0; b < bottoms; ++b)
        if (edge(a, b)) up[static_cast<std::size_t>(b)] |= std::uint64_t{1} << (bottoms + a);
    return Poset(bottoms + tops, std::move(up));
  }

  bool operator==(const BicolouredGraph&) const = default;
};

namespace detail {

// Column masks over rows: column b collects bit a for each top a adjacent
// to b, giving the top-neighbourhood of bottom b.
inline std::vector<std::uint64_t> column_masks(const BicolouredGraph& g) {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(g.bottoms), 0);
  for (int a = 0; a < g.tops; ++a)
    for (int b = 0; b < g.bottoms; ++b)
      if (g.edge(a, b)) cols[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  return cols;
}

inline bool masks_incomparable(std::uint64_t x, std::uint64_t y) {
  return (x & ~y) != 0 && (y & ~x) != 0;
}

// Single connected component under pairwise neighbourhood-incomparability,
// spanning all of `masks` (size >= 2 required).
inline bool incomparability_connected(const std::vector<std::uint64_t>& masks) {
  const int n = static_cast<int>(masks.size());
  if (n < 2) return false;
  std::uint64_t reached = 1;
  for (;;) {
    std::uint64_t next = reached;
    for (int i = 0; i < n; ++i) {
      if (!((reached >> i) & 1u)) continue;
      for (int j = 0; j < n; ++j)
        if (masks_incomparable(masks[static_cast<std::size_t>(i)], masks[static_cast<std::size_t>(j)]))
          next |= std::uint64_t{1} << j;
    }
    if (next == reached) break;
    reached = next;
  }
  return reached == (n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

// Iterated bipartite colour refinement; returns canonical colour ids for
// rows (tops) and columns (bottoms).
inline std::pair<std::vector<int>, std::vector<int>> bipartite_colours(const BicolouredGraph& g) {
  std::vector<int> rc(static_cast<std::size_t>(g.tops), 0), cc(static_cast<std::size_t>(g.bottoms), 0);
  for (;;) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> rrank, crank;
    std::vector<Sig> rsig(static_cast<std::size_t>(g.tops)), csig(static_cast<std::size_t>(g.bottoms));
    for (int a = 0; a < g.tops; ++a) {
      std::vector<int> nb;
      for (int b = 0; b < g.bottoms; ++b)
        if (g.edge(a, b)) nb.push_back(cc[static_cast<std::size_t>(b)]);
      std::sort(nb.begin(), nb.end());
      rsig[static_cast<std::size_t>(a)] = {rc[static_cast<std::size_t>(a)], std::move(nb)};
      rrank[rsig[static_cast<std::size_t>(a)]] = 0;
    }
    for (int b = 0; b < g.bottoms; ++b) {
      std::vector<int> nb;
      for (int a = 0; a < g.tops; ++a)
        if (g.edge(a, b)) nb.push_back(rc[static_cast<std::size_t>(a)]);
      std::sort(nb.begin(), nb.end());
      csig[static_cast<std::size_t>(b)] = {cc[static_cast<std::size_t>(b)], std::move(nb)};
      crank[csig[static_cast<std::size_t>(b)]] = 0;
    }
    int next = 0;
    for (auto& [k, r] : rrank) r = next++;
    next = 0;
    for (auto& [k, r] : crank) r = next++;
    bool changed = false;
    for (int a = 0; a < g.tops; ++a) {
      const int c = rrank[rsig[static_cast<std::size_t>(a)]];
      if (c != rc[static_cast<std::size_t>(a)]) changed = true;
      rc[static_cast<std::size_t>(a)] = c;
    }
    for (int b = 0; b < g.bottoms; ++b) {
      const int c = crank[csig[static_cast<std::size_t>(b)]];
      if (c != cc[static_cast<std::size_t>(b)]) changed = true;
      cc[static_cast<std::size_t>(b)] = c;
    }
    if (!changed) return {rc, cc};
  }
}

}  // namespace detail

// Canonical encoding under colour-preserving isomorphism: maximize the
// row-major incidence string over class-respecting row orders, with columns
// sorted greedily per row order (an exchange argument shows descending
// column words maximize the row-major string).
inline std::string canonical_form(const BicolouredGraph& g) {
  const auto [rc, cc] = detail::bipartite_colours(g);
  (void)cc;

  // row positions grouped by row colour
  std::vector<int> pos_colour;
  {
    std::vector<int> count(static_cast<std::size_t>(g.tops) + 1, 0);
    for (int c : rc) ++count[static_cast<std::size_t>(c)];
    for (int c = 0; c <= g.tops; ++c)
      for (int i = 0; i < count[static_cast<std::size_t>(c)]; ++i) pos_colour.push_back(c);
  }

  std::vector<int> order(static_cast<std::size_t>(g.tops));
  std::string best;
  std::uint64_t used = 0;

  auto leaf = [&]() {
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(g.bottoms), 0);
    for (int b = 0; b < g.bottoms; ++b)
      for (int k = 0; k < g.tops; ++k)
        if (g.edge(order[static_cast<std::size_t>(k)], b))
          cols[static_cast<std::size_t>(b)] |= std::uint64_t{1} << (g.tops - 1 - k);
    std::sort(cols.begin(), cols.end(), std::greater<>());
    std::string enc;
    enc.push_back(static_cast<char>(g.tops));
    enc.push_back(static_cast<char>(g.bottoms));
    for (int k = 0; k < g.tops; ++k) {
      unsigned byte = 0;
      int nb = 0;
      for (int b = 0; b < g.bottoms; ++b) {
        const unsigned bit = (cols[static_cast<std::size_t>(b)] >> (g.tops - 1 - k)) & 1u;
        byte |= bit << nb;
        if (++nb == 8) {
          enc.push_back(static_cast<char>(byte));
          byte = 0;
          nb = 0;
        }
      }
      if (nb > 0) enc.push_back(static_cast<char>(byte));
    }
    if (enc > best) best = enc;
  };

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == g.tops) {
      leaf();
      return;
    }
    std::map<std::uint64_t, bool> tried;  // identical rows are interchangeable
    for (int a = 0; a < g.tops; ++a) {
      if ((used >> a) & 1u) continue;
      if (rc[static_cast<std::size_t>(a)] != pos_colour[static_cast<std::size_t>(depth)]) continue;
      if (tried.count(g.adj[static_cast<std::size_t>(a)])) continue;
      tried[g.adj[static_cast<std::size_t>(a)]] = true;
      order[static_cast<std::size_t>(depth)] = a;
      used |= std::uint64_t{1} << a;
      self(self, depth + 1);
      used &= ~(std::uint64_t{1} << a);
    }
  };
  if (g.tops == 0) leaf();
  else dfs(dfs, 0);
  return best;
}

// Colour-preserving automorphism count: for each class-respecting row
// permutation whose induced column-word multiset matches the original, the
// compatible column permutations number prod (multiplicity!).
inline Int aut_order(const BicolouredGraph& g) {
  if (g.tops == 0 || g.bottoms == 0) return factorial(g.tops) * factorial(g.bottoms);
  const auto [rc, cc] = detail::bipartite_colours(g);
  (void)cc;

  const std::vector<std::uint64_t> base_cols = detail::column_masks(g);
  std::map<std::uint64_t, int> base_mult;
  for (std::uint64_t c : base_cols) ++base_mult[c];

  Int count = 0;
  std::vector<int> image(static_cast<std::size_t>(g.tops), -1);
  std::uint64_t used = 0;
  auto dfs = [&](auto&& self, int a) -> void {
    if (a == g.tops) {
      // column word of the permuted matrix: bit k set iff edge(image[k], b)
      std::map<std::uint64_t, int> mult;
      for (int b = 0; b < g.bottoms; ++b) {
        std::uint64_t w = 0;
        for (int k = 0; k < g.tops; ++k)
          if (g.edge(image[static_cast<std::size_t>(k)], b)) w |= std::uint64_t{1} << k;
        ++mult[w];
      }
      if (mult != base_mult) return;
      Int ways = 1;
      for (auto& [w, m] : mult) ways *= factorial(m);
      count += ways;
      return;
    }
    for (int w = 0; w < g.tops; ++w) {
      if ((used >> w) & 1u) continue;
      if (rc[static_cast<std::size_t>(w)] != rc[static_cast<std::size_t>(a)]) continue;
      image[static_cast<std::size_t>(a)] = w;
      used |= std::uint64_t{1} << w;
      self(self, a + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  };
  dfs(dfs, 0);
  return count;
}

// Tangle predicate: both sides of size >= 2, the top set one connected
// component under neighbourhood incomparability, dually for the bottom.
// Matching between top and bottom is then automatic.
inline bool is_tangle(const BicolouredGraph& g) {
  if (g.tops < 2 || g.bottoms < 2) return false;
  if (!detail::incomparability_connected(g.adj)) return false;
  return detail::incomparability_connected(detail::column_masks(g));
}

// Isomorphism-class representatives of bicoloured graphs with a fixed
// bipartition (p tops, q bottoms), optionally filtered, sorted by canonical
// form.  Enumerates multisets of column words on the smaller side, which
// visits every class at least once.
inline std::vector<BicolouredGraph> enumerate_bicoloured(
    int p, int q, const std::function<bool(const BicolouredGraph&)>& keep = {}) {
  const bool flip = q < p;  // enumerate with rows = min(p, q)
  const int rows = flip ? q : p;
  const int cols = flip ? p : q;

  std::map<std::string, BicolouredGraph> classes;
  std::vector<std::uint64_t> col(static_cast<std::size_t>(cols), 0);
  const std::uint64_t limit = std::uint64_t{1} << rows;

  auto visit = [&]() {
    BicolouredGraph g{rows, cols, std::vector<std::uint64_t>(static_cast<std::size_t>(rows), 0)};
    for (int b = 0; b < cols; ++b)
      for (int a = 0; a < rows; ++a)
        if ((col[static_cast<std::size_t>(b)] >> a) & 1u)
          g.adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    if (flip) g = g.transposed();
    if (keep && !keep(g)) return;
    std::string key = canonical_form(g);
    classes.emplace(std::move(key), std::move(g));
  };

  auto rec = [&](auto&& self, int b, std::uint64_t lo) -> void {
    if (b == cols) {
      visit();
      return;
    }
    for (std::uint64_t v = lo; v < limit; ++v) {
      col[static_cast<std::size_t>(b)] = v;
      self(self, b + 1, v);
    }
  };
  if (cols == 0) visit();
  else rec(rec, 0, 0);

  std::vector<BicolouredGraph> out;
  out.reserve(classes.size());
  for (auto& [k, g] : classes) out.push_back(std::move(g));
  return out;
}

// All tangles with p tops and q bottoms up to colour-preserving isomorphism,
// in canonical-form order.  Memoized; generation revisits the same shapes
// for every skeleton.  The p > q case transposes the (q, p) classes instead
// of re-walking the matrix space.
inline const std::vector<BicolouredGraph>& enumerate_tangles(int p, int q) {
  if (p + q > size_cap(12)) throw SizeError("tangle enumeration bounded at p + q = 12");
  static std::map<std::pair<int, int>, std::vector<BicolouredGraph>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
  }
  std::vector<BicolouredGraph> found;
  if (p >= 2 && q >= 2) {
    if (p > q) {
      std::vector<std::pair<std::string, BicolouredGraph>> keyed;
      for (const BicolouredGraph& g : enumerate_tangles(q, p)) {
        BicolouredGraph t = g.transposed();
        keyed.emplace_back(canonical_form(t), std::move(t));
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [k, g] : keyed) found.push_back(std::move(g));
    } else {
      found = enumerate_bicoloured(p, q, [](const BicolouredGraph& g) { return is_tangle(g); });
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, q), std::move(found)).first->second;
}

}  // namespace tanglecount
