#pragma once

#include <cassert>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tanglecount/errors.hpp"
#include "tanglecount/numeric.hpp"

namespace tanglecount {

// Alphabet letter: clone letter c_i or tangle letter t_{i,i+1}, i >= 1.
// The total order c_1 < t_12 < c_2 < t_23 < ... is realized by rank().
struct Letter {
  enum class Kind { clone, tangle };
  Kind kind;
  int index;  // the i in c_i / t_{i,i+1}

  static Letter c(int i) { return {Kind::clone, i}; }
  static Letter t(int i) { return {Kind::tangle, i}; }

  bool is_clone() const { return kind == Kind::clone; }
  int rank() const { return kind == Kind::clone ? 2 * (index - 1) : 2 * index - 1; }

  // Height a Dyck step for this letter ends at: i for c_i, i+1 for t_{i,i+1}.
  int top_height() const { return kind == Kind::clone ? index : index + 1; }

  std::string str() const {
    return kind == Kind::clone ? "c" + std::to_string(index)
                               : "t" + std::to_string(index) + std::to_string(index + 1);
  }

  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& o) const { return rank() < o.rank(); }
};

// Commutation relations of the monoid M.
inline bool commutes(const Letter& x, const Letter& y) {
  const int i = x.index, j = y.index;
  if (x.is_clone() && y.is_clone()) return std::abs(i - j) >= 2;
  if (!x.is_clone() && !y.is_clone()) return std::abs(i - j) >= 3;
  // one clone letter c_a, one tangle letter t_{b,b+1}
  const int a = x.is_clone() ? i : j;
  const int b = x.is_clone() ? j : i;
  return a <= b - 2 || a >= b + 3;
}

class SkeletonWord;
inline SkeletonWord normalize(std::vector<Letter> w);

// A monoid element held as its unique lexicographically maximal
// representative.  Construct through normalize() or parse().
class SkeletonWord {
public:
  SkeletonWord() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  int clone_count() const {
    int r = 0;
    for (const Letter& l : letters_) r += l.is_clone() ? 1 : 0;
    return r;
  }
  int tangle_count() const { return static_cast<int>(letters_.size()) - clone_count(); }

  std::string str() const {
    std::string out;
    for (const Letter& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.str();
    }
    return out;
  }

  // Tokens `c<i>` / `t<i><i+1>`, whitespace separated.
  static SkeletonWord parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> w;
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 't'))
        throw ParseError("bad skeleton token '" + tok + "'");
      if (tok[0] == 'c') {
        const int i = std::atoi(tok.c_str() + 1);
        if (i < 1) throw ParseError("bad skeleton token '" + tok + "'");
        w.push_back(Letter::c(i));
      } else {
        // t<i><i+1> with both indices written out, e.g. t12, t23, t910, t1011
        const std::string digits = tok.substr(1);
        for (char ch : digits)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad skeleton token '" + tok + "'");
        bool ok = false;
        for (std::size_t cut = 1; cut < digits.size(); ++cut) {
          const int i = std::atoi(digits.substr(0, cut).c_str());
          const int j = std::atoi(digits.substr(cut).c_str());
          if (i >= 1 && j == i + 1) {
            w.push_back(Letter::t(i));
            ok = true;
            break;
          }
        }
        if (!ok) throw ParseError("bad skeleton token '" + tok + "'");
      }
    }
    return normalize(std::move(w));
  }

  bool operator==(const SkeletonWord&) const = default;
  bool operator<(const SkeletonWord& o) const {
    auto key = [](const SkeletonWord& w) {
      std::vector<int> k;
      for (const Letter& l : w.letters_) k.push_back(l.rank());
      return k;
    };
    return key(*this) < key(o);
  }

private:
  friend SkeletonWord normalize(std::vector<Letter> w);
  explicit SkeletonWord(std::vector<Letter> ls) : letters_(std::move(ls)) {}

  std::vector<Letter> letters_;
};

// Repeatedly swaps adjacent commuting increasing pairs; each swap is
// lexicographically increasing, so this terminates in the unique lex-max
// representative w_0.  Swaps of equal letters never apply (equal letters do
// not commute), which keeps normalization stable and position-preserving.
inline SkeletonWord normalize(std::vector<Letter> w) {
  if (w.size() > 1) {
    std::size_t i = 0;
    while (i + 1 < w.size()) {
      if (commutes(w[i], w[i + 1]) && w[i].rank() < w[i + 1].rank()) {
        std::swap(w[i], w[i + 1]);
        i = i > 0 ? i - 1 : 0;
      } else {
        ++i;
      }
    }
  }
  return SkeletonWord(std::move(w));
}

namespace detail {

// Adjacent pairs allowed in a normal form; anything else would be a
// commuting increasing pair.
inline bool normal_pair(const Letter& x, const Letter& y) {
  return !(commutes(x, y) && x.rank() < y.rank());
}

inline bool is_normal(const std::vector<Letter>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!normal_pair(w[i], w[i + 1])) return false;
  return true;
}

}  // namespace detail

// Valid skeletons: empty, or w_0 starts with c_1 or t_12 and has no adjacent
// c_i c_i factor.  Checking the lex-max representative alone suffices.
inline bool is_valid_skeleton(const SkeletonWord& w0) {
  const auto& w = w0.letters();
  if (w.empty()) return true;
  if (!(w[0] == Letter::c(1) || w[0] == Letter::t(1))) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].is_clone() && w[i] == w[i + 1]) return false;
  return true;
}

enum class DyckStep { up, down, double_up };

// Nonnegative lattice path: up = (1,1), down = (1,-1), double_up = (2,2);
// ends at height 0, no undecorated up-down-up.
struct DecoratedDyckPath {
  std::vector<DyckStep> steps;

  bool operator==(const DecoratedDyckPath&) const = default;
};

// c_i becomes an up step ending at height i, t_{i,i+1} a double-up step
// ending at height i+1; down steps are inserted minimally and the path is
// padded back to height 0.
inline DecoratedDyckPath to_dyck(const SkeletonWord& w0) {
  if (!is_valid_skeleton(w0)) throw std::invalid_argument("to_dyck requires a valid skeleton");
  DecoratedDyckPath path;
  int h = 0;
  for (const Letter& l : w0.letters()) {
    const int rise = l.is_clone() ? 1 : 2;
    const int start = l.top_height() - rise;
    assert(start <= h);
    for (; h > start; --h) path.steps.push_back(DyckStep::down);
    path.steps.push_back(l.is_clone() ? DyckStep::up : DyckStep::double_up);
    h = l.top_height();
  }
  for (; h > 0; --h) path.steps.push_back(DyckStep::down);
  return path;
}

inline SkeletonWord from_dyck(const DecoratedDyckPath& path) {
  std::vector<Letter> w;
  int h = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    switch (path.steps[i]) {
      case DyckStep::up:
        if (i + 2 < path.steps.size() && path.steps[i + 1] == DyckStep::down &&
            path.steps[i + 2] == DyckStep::up)
          throw MalformedPathError("undecorated up-down-up");
        h += 1;
        w.push_back(Letter::c(h));
        break;
      case DyckStep::double_up:
        h += 2;
        w.push_back(Letter::t(h - 1));
        break;
      case DyckStep::down:
        h -= 1;
        if (h < 0) throw MalformedPathError("path descends below the axis");
        break;
    }
  }
  if (h != 0) throw MalformedPathError("path does not end at height 0");
  assert(detail::is_normal(w));
  SkeletonWord out = normalize(std::move(w));
  assert(is_valid_skeleton(out));
  return out;
}

// All valid skeleta with exactly r clone letters and s tangle letters,
// emitted in lexicographic order.  Words are built directly in normal form:
// after a prefix ending at Dyck height h the allowed next letters are c_j and
// t_{j,j+1} with j <= h+1, minus an adjacent repeat of the same clone letter.
inline std::vector<SkeletonWord> enumerate_skeleta(int r, int s) {
  std::vector<SkeletonWord> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int h, int cl, int tl) -> void {
    if (cl == 0 && tl == 0) {
      out.push_back(normalize(cur));
      return;
    }
    for (int rank = 0; rank <= 2 * h + 1; ++rank) {
      const Letter l = rank % 2 == 0 ? Letter::c(rank / 2 + 1) : Letter::t((rank + 1) / 2);
      if (l.is_clone()) {
        if (cl == 0) continue;
        if (!cur.empty() && cur.back() == l) continue;
      } else {
        if (tl == 0) continue;
      }
      cur.push_back(l);
      self(self, l.top_height(), cl - (l.is_clone() ? 1 : 0), tl - (l.is_clone() ? 0 : 1));
      cur.pop_back();
    }
  };
  rec(rec, 0, r, s);
  return out;
}

// Strings over {c1, c2, t12} with given letter counts and no c1c1 / c2c2
// factor; the start condition is deliberately dropped, matching the way
// bicoloured graphs are read as two-level posets with isolated vertices kept
// in their own colour class.
inline Int bicoloured_skeleton_count(int r1, int r2, int s) {
  if (r1 < 0 || r2 < 0 || s < 0) return 0;
  // last: 0 none, 1 c1, 2 c2, 3 t12
  std::map<std::tuple<int, int, int, int>, Int> memo;
  auto rec = [&](auto&& self, int a, int b, int t, int last) -> Int {
    if (a == 0 && b == 0 && t == 0) return 1;
    const auto key = std::make_tuple(a, b, t, last);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    if (a > 0 && last != 1) total += self(self, a - 1, b, t, 1);
    if (b > 0 && last != 2) total += self(self, a, b - 1, t, 2);
    if (t > 0) total += self(self, a, b, t - 1, 3);
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, r1, r2, s, 0);
}

}  // namespace tanglecount
