#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tanglecount/numeric.hpp"
#include "tanglecount/poset.hpp"

namespace tanglecount {

namespace detail {

// Iterated colour refinement seeded with (level, |D_a|, |U_a|).  Colour ids
// are ranks of sorted signatures, so they are isomorphism-invariant and
// totally ordered; once two cells split they can never merge (the old colour
// is part of the signature).
inline std::vector<int> refined_colours(const Poset& p) {
  const int n = p.size();
  const std::vector<int> lv = level_of(p);
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  {
    std::map<std::tuple<int, int, int>, int> rank;
    for (int v = 0; v < n; ++v)
      rank[{lv[static_cast<std::size_t>(v)], p.downset(v).size(), p.upset(v).size()}] = 0;
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    for (int v = 0; v < n; ++v)
      colour[static_cast<std::size_t>(v)] =
          rank[{lv[static_cast<std::size_t>(v)], p.downset(v).size(), p.upset(v).size()}];
  }
  for (;;) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::map<Sig, int> rank;
    std::vector<Sig> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> dn, up;
      for (int w : p.downset(v)) dn.push_back(colour[static_cast<std::size_t>(w)]);
      for (int w : p.upset(v)) up.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      sig[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(dn), std::move(up)};
      rank[sig[static_cast<std::size_t>(v)]] = 0;
    }
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      const int c = rank[sig[static_cast<std::size_t>(v)]];
      if (c != colour[static_cast<std::size_t>(v)]) changed = true;
      colour[static_cast<std::size_t>(v)] = c;
    }
    if (!changed) return colour;
  }
}

// Clone classes: vertices with identical downset and upset are
// interchangeable by an automorphism, so a canonical-labelling search only
// needs one representative per class at each branch point.
inline std::vector<int> clone_ids(const Poset& p) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> ids;
  std::vector<int> out(static_cast<std::size_t>(p.size()), 0);
  for (int v = 0; v < p.size(); ++v) {
    auto key = std::make_pair(p.downset(v).bits(), p.upset(v).bits());
    auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    out[static_cast<std::size_t>(v)] = it->second;
  }
  return out;
}

}  // namespace detail

// Deterministic encoding equal for two posets iff they are isomorphic.
// Refinement fixes a class-block position layout; a backtracking search
// maximizes the relation bit string over class-respecting labelings.
inline std::string canonical_form(const Poset& p) {
  const int n = p.size();
  if (n == 0) return std::string(1, '\0');

  const std::vector<int> colour = detail::refined_colours(p);
  const std::vector<int> clones = detail::clone_ids(p);

  // positions grouped by colour, in colour order
  std::vector<int> pos_colour;
  {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : colour) ++count[static_cast<std::size_t>(c)];
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < count[static_cast<std::size_t>(c)]; ++i) pos_colour.push_back(c);
  }

  const int nbits = n * (n - 1);
  std::vector<std::uint8_t> best(static_cast<std::size_t>(nbits), 0);
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(nbits), 0);
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int depth, int offset) -> void {
    if (depth == n) return;
    const int len = 2 * depth;
    std::uint64_t tried_clones = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (colour[static_cast<std::size_t>(v)] != pos_colour[static_cast<std::size_t>(depth)]) continue;
      const int cid = clones[static_cast<std::size_t>(v)];
      if ((tried_clones >> cid) & 1u) continue;
      tried_clones |= std::uint64_t{1} << cid;

      for (int q = 0; q < depth; ++q) {
        cur[static_cast<std::size_t>(offset + 2 * q)] = p.less(v, perm[static_cast<std::size_t>(q)]) ? 1 : 0;
        cur[static_cast<std::size_t>(offset + 2 * q + 1)] = p.less(perm[static_cast<std::size_t>(q)], v) ? 1 : 0;
      }
      const int cmp = std::memcmp(cur.data() + offset, best.data() + offset, static_cast<std::size_t>(len));
      if (cmp < 0) continue;
      if (cmp > 0) {
        std::copy(cur.begin() + offset, cur.begin() + offset + len, best.begin() + offset);
        std::fill(best.begin() + offset + len, best.end(), 0);
      }
      perm[static_cast<std::size_t>(depth)] = v;
      used |= std::uint64_t{1} << v;
      self(self, depth + 1, offset + len);
      used &= ~(std::uint64_t{1} << v);
    }
  };
  dfs(dfs, 0, 0);

  std::string out;
  out.push_back(static_cast<char>(n));
  for (int i = 0; i < nbits; i += 8) {
    unsigned byte = 0;
    for (int j = 0; j < 8 && i + j < nbits; ++j) byte |= static_cast<unsigned>(best[static_cast<std::size_t>(i + j)]) << j;
    out.push_back(static_cast<char>(byte));
  }
  return out;
}

// Number of vertex permutations preserving the relation, by direct search
// pruned with the refinement classes.  Oracle for the tangle-decomposition
// product theorem; desk-scale bound n <= 12.
inline Int aut_order_bruteforce(const Poset& p) {
  const int n = p.size();
  if (n > 12) throw SizeError("aut_order_bruteforce is bounded at n = 12");
  if (n == 0) return 1;

  const std::vector<int> colour = detail::refined_colours(p);
  Int count = 0;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      if (colour[static_cast<std::size_t>(w)] != colour[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const int iu = image[static_cast<std::size_t>(u)];
        ok = p.less(u, v) == p.less(iu, w) && p.less(v, u) == p.less(w, iu);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= std::uint64_t{1} << w;
      self(self, v + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  };
  dfs(dfs, 0);
  return count;
}

}  // namespace tanglecount
