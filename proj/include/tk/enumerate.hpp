#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tk/caps.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Relabeling pi with i>j in t1 iff pi(i)>pi(j) in t2, if one exists.
// Backtracking over vertices grouped by out-degree.
inline std::optional<std::vector<int>> are_isomorphic(const Tournament& t1,
                                                      const Tournament& t2) {
  int n = t1.order();
  if (n != t2.order()) return std::nullopt;
  std::vector<int> deg1(n), deg2(n);
  for (int i = 0; i < n; ++i) {
    deg1[i] = popcount(t1.dominion(i));
    deg2[i] = popcount(t2.dominion(i));
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  Mask used = 0;
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used & bit(j)) continue;
      if (deg2[j] != deg1[i]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        if (t1.dominates(i, k) != t2.dominates(j, map[k])) ok = false;
      if (!ok) continue;
      map[i] = j;
      used |= bit(j);
      if (extend(i + 1)) return true;
      used &= ~bit(j);
      map[i] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

// True iff t's code is minimal over all relabelings (the canonical form used
// by canonical enumeration). Early-aborts per permutation.
inline bool is_canonical(const Tournament& t) {
  int n = t.order();
  Mask code = t.code();
  std::vector<int> inv(n);  // inv[i] = original vertex placed at position i
  std::iota(inv.begin(), inv.end(), 0);
  do {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      bool done = false;
      for (int j = i + 1; j < n; ++j, ++k) {
        bool b = t.dominates(inv[i], inv[j]);
        bool orig = (code >> k) & 1;
        if (b != orig) {
          if (orig && !b) return false;  // permuted code is smaller
          done = true;                   // permuted code is larger; next perm
          break;
        }
      }
      if (done) break;
    }
  } while (std::next_permutation(inv.begin(), inv.end()));
  return true;
}

enum class EnumMode { labeled, canonical };

// Single-consumer stream over tournaments of a fixed order.
// Labeled mode: all 2^(n(n-1)/2) tournaments, in increasing code order.
// Canonical mode: one representative per isomorphism class (the one with
// minimal code), same underlying order.
class TournamentStream {
 public:
  TournamentStream(int n, EnumMode mode) : n_(n), mode_(mode) {
    if (n < 1) throw EmptyTournament("enumeration of order 0");
    int cap = mode == EnumMode::canonical ? kCanonicalEnumCap : kLabeledEnumCap;
    int limit = cap_override() > 0 ? std::min(cap_override(), kLabeledEnumCap) : cap;
    if (n > limit)
      throw OrderTooLarge("enumeration order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(limit));
    count_ = Mask{1} << (n * (n - 1) / 2);
  }

  std::optional<Tournament> next() {
    while (next_ < count_) {
      Tournament t = Tournament::from_code(n_, next_++);
      if (mode_ == EnumMode::labeled || is_canonical(t)) return t;
    }
    return std::nullopt;
  }

  // Total labeled codes; parallel harness runs partition [0, code_count).
  Mask code_count() const { return count_; }

 private:
  int n_;
  EnumMode mode_;
  Mask next_ = 0;
  Mask count_;
};

inline Tournament random_tournament(int n, std::mt19937_64& rng) {
  std::vector<bool> up;
  up.reserve(n * (n - 1) / 2);
  for (int k = 0; k < n * (n - 1) / 2; ++k) up.push_back(rng() & 1);
  int idx = 0;
  std::vector<std::vector<bool>> o(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) o[i][j] = up[idx++];
  return Tournament::from_orientation(n, [&](int i, int j) { return o[i][j]; });
}

}  // namespace tk
