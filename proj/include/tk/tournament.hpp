#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tk/error.hpp"

namespace tk {

// Alternatives are indices 0..n-1; subsets are bit masks. The data model is
// capped at 64 alternatives so every subset fits in one machine word.
inline constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask all_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// A subset of a tournament's alternatives.
struct AltSet {
  Mask bits = 0;

  constexpr AltSet() = default;
  constexpr explicit AltSet(Mask m) : bits(m) {}
  static AltSet of(std::initializer_list<int> members) {
    Mask m = 0;
    for (int i : members) m |= bit(i);
    return AltSet(m);
  }

  bool contains(int a) const { return (bits >> a) & 1; }
  int count() const { return popcount(bits); }
  bool empty() const { return bits == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each_bit(bits, [&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(AltSet a, AltSet b) { return a.bits == b.bits; }
  friend bool operator!=(AltSet a, AltSet b) { return a.bits != b.bits; }
  friend AltSet operator|(AltSet a, AltSet b) { return AltSet(a.bits | b.bits); }
  friend AltSet operator&(AltSet a, AltSet b) { return AltSet(a.bits & b.bits); }
  bool subset_of(AltSet other) const { return (bits & ~other.bits) == 0; }
};

// Renders "{1,5,7}" with 1-based ascending indices (the human-facing
// convention; internal indices are 0-based).
inline std::string format_set(AltSet s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s.bits, [&](int i) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  });
  out += '}';
  return out;
}

enum class Direction { dominion, dominators };

// Complete asymmetric dominance relation on n labeled alternatives.
// Immutable after construction; rows are bit-packed so dominion/dominator
// queries and set intersections are single word operations.
class Tournament {
 public:
  // Builds from an orientation function on unordered pairs: for i<j,
  // upward(i,j) true iff i dominates j. Valid by construction.
  static Tournament from_orientation(int n,
                                     const std::function<bool(int, int)>& upward) {
    check_order(n);
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (upward(i, j)) {
          t.out_[i] |= bit(j);
          t.in_[j] |= bit(i);
        } else {
          t.out_[j] |= bit(i);
          t.in_[i] |= bit(j);
        }
      }
    }
    return t;
  }

  // Builds from the upper-triangle bit code. Bit k corresponds to the k-th
  // pair in lexicographic order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1);
  // a set bit means the smaller index dominates the larger one. This is the
  // documented labeled enumeration order.
  static Tournament from_code(int n, Mask code) {
    check_order(n);
    Tournament t(n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++k) {
        if ((code >> k) & 1) {
          t.out_[i] |= bit(j);
          t.in_[j] |= bit(i);
        } else {
          t.out_[j] |= bit(i);
          t.in_[i] |= bit(j);
        }
      }
    }
    return t;
  }

  // Validates an explicit 0/1 matrix.
  static Tournament from_matrix(const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    if (n == 0) throw EmptyTournament("tournament of order 0");
    check_order(n);
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw MalformedInput("row " + std::to_string(i + 1) + " has length " +
                             std::to_string(rows[i].size()) + ", expected " +
                             std::to_string(n));
      for (int j = 0; j < n; ++j) {
        char c = rows[i][j];
        if (c != '0' && c != '1')
          throw MalformedInput(std::string("invalid character '") + c +
                               "' in matrix");
        if (c == '1') {
          t.out_[i] |= bit(j);
          t.in_[j] |= bit(i);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (t.dominates(i, i)) throw NotATournament("diagonal entry is 1");
      for (int j = i + 1; j < n; ++j)
        if (t.dominates(i, j) == t.dominates(j, i))
          throw NotATournament("pair (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) +
                               ") is not oriented exactly once");
    }
    return t;
  }

  int order() const { return n_; }
  Mask alternatives() const { return all_mask(n_); }

  bool dominates(int i, int j) const { return (out_[i] >> j) & 1; }
  Mask dominion(int a) const { return out_[a]; }
  Mask dominators(int a) const { return in_[a]; }
  Mask dominion_in(int a, Mask within) const { return out_[a] & within; }
  Mask dominators_in(int a, Mask within) const { return in_[a] & within; }

  // Upper-triangle code; inverse of from_code.
  Mask code() const {
    Mask c = 0;
    int k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++k)
        if (dominates(i, j)) c |= bit(k);
    return c;
  }

  // Induced sub-tournament on s, alternatives relabeled in ascending order.
  Tournament restrict_to(Mask s) const {
    int m = popcount(s);
    if (m == 0) throw EmptySet("restriction to empty set");
    std::array<int, kMaxOrder> verts;
    int k = 0;
    for_each_bit(s, [&](int i) { verts[k++] = i; });
    return from_orientation(
        m, [&](int i, int j) { return dominates(verts[i], verts[j]); });
  }

  // Image under a relabeling: i ≻ j iff perm[i] ≻' perm[j] in the result.
  Tournament relabel(const std::vector<int>& perm) const {
    Tournament t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (dominates(i, j)) {
          t.out_[perm[i]] |= bit(perm[j]);
          t.in_[perm[j]] |= bit(perm[i]);
        }
    return t;
  }

  std::string to_matrix_string() const {
    std::string s = std::to_string(n_) + "\n";
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) s += dominates(i, j) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.out_[i] != b.out_[i]) return false;
    return true;
  }

 private:
  explicit Tournament(int n) : n_(n) { out_.fill(0); in_.fill(0); }

  static void check_order(int n) {
    if (n < 1) throw EmptyTournament("tournament of order 0");
    if (n > kMaxOrder)
      throw OrderTooLarge("order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxOrder));
  }

  int n_;
  std::array<Mask, kMaxOrder> out_;  // dominion rows
  std::array<Mask, kMaxOrder> in_;   // dominator rows
};

// Matrix file format: optional '#' comment lines; first non-comment line is
// the decimal order n; then n lines of exactly n characters from {0,1};
// entry (r,c) is 1 iff alternative r dominates alternative c.
inline Tournament parse_tournament(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw MalformedInput("missing order line");
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(header, &pos);
    if (pos != header.size()) throw MalformedInput("bad order line");
  } catch (const std::exception&) {
    throw MalformedInput("bad order line: '" + header + "'");
  }
  if (n == 0) throw EmptyTournament("tournament of order 0");
  if (n < 0) throw MalformedInput("negative order");
  std::vector<std::string> rows;
  for (int i = 0; i < n; ++i) {
    std::string row;
    if (!next_line(row))
      throw MalformedInput("expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(i));
    rows.push_back(row);
  }
  return Tournament::from_matrix(rows);
}

inline Tournament parse_tournament(const std::string& text) {
  std::istringstream in(text);
  return parse_tournament(in);
}

inline void check_alternative(const Tournament& t, int a) {
  if (a < 0 || a >= t.order())
    throw AlternativeOutOfRange("alternative " + std::to_string(a) +
                                " outside order " + std::to_string(t.order()));
}

// Dominion or dominators of a, optionally restricted to a subset.
inline AltSet neighborhood(const Tournament& t, int a, Direction dir,
                           std::optional<AltSet> within = std::nullopt) {
  check_alternative(t, a);
  Mask w = within ? within->bits : t.alternatives();
  return AltSet(dir == Direction::dominion ? t.dominion_in(a, w)
                                           : t.dominators_in(a, w));
}

// The unique undominated alternative, if one exists.
inline std::optional<int> condorcet_winner(const Tournament& t) {
  for (int a = 0; a < t.order(); ++a)
    if (t.dominators(a) == 0) return a;
  return std::nullopt;
}

inline std::optional<int> condorcet_winner_in(const Tournament& t, Mask within) {
  std::optional<int> w;
  for_each_bit(within, [&](int a) {
    if (t.dominators_in(a, within) == 0) w = a;
  });
  return w;
}

// All dominions of equal size.
inline bool is_regular(const Tournament& t) {
  int d = popcount(t.dominion(0));
  for (int a = 1; a < t.order(); ++a)
    if (popcount(t.dominion(a)) != d) return false;
  return true;
}

}  // namespace tk
