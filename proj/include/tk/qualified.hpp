#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "tk/caps.hpp"
#include "tk/tournament.hpp"

namespace tk {

// All solvers operate within a subset mask of the tournament's alternatives
// and return subsets of it; solving within a mask is equivalent to solving
// the induced sub-tournament, since every solution here depends only on the
// induced dominance relation.

// Condorcet non-losers: everything that dominates at least one alternative;
// the whole set when it is a singleton.
inline Mask cnl_in(const Tournament& t, Mask within) {
  if (popcount(within) <= 1) return within;
  Mask out = 0;
  for_each_bit(within, [&](int a) {
    if (t.dominion_in(a, within) != 0) out |= bit(a);
  });
  return out;
}

inline AltSet cnl(const Tournament& t) {
  return AltSet(cnl_in(t, t.alternatives()));
}

struct CopelandScores {
  std::vector<int> scores;  // per alternative of the full tournament
};

inline Mask copeland_in(const Tournament& t, Mask within) {
  int best = -1;
  Mask set = 0;
  for_each_bit(within, [&](int a) {
    int d = popcount(t.dominion_in(a, within));
    if (d > best) {
      best = d;
      set = bit(a);
    } else if (d == best) {
      set |= bit(a);
    }
  });
  return set;
}

inline std::pair<CopelandScores, AltSet> copeland(const Tournament& t) {
  CopelandScores cs;
  cs.scores.resize(t.order());
  for (int a = 0; a < t.order(); ++a) cs.scores[a] = popcount(t.dominion(a));
  return {cs, AltSet(copeland_in(t, t.alternatives()))};
}

// a covers b iff D(b) is strictly contained in D(a) (within the mask).
struct CoveringRelation {
  std::array<Mask, kMaxOrder> covered_by{};  // covered_by[b] = {a | a covers b}
  bool covers(int a, int b) const { return (covered_by[b] >> a) & 1; }
};

inline CoveringRelation covering_relation_in(const Tournament& t, Mask within) {
  CoveringRelation r;
  for_each_bit(within, [&](int b) {
    Mask db = t.dominion_in(b, within);
    for_each_bit(t.dominators_in(b, within), [&](int a) {
      Mask da = t.dominion_in(a, within);
      if ((db & ~da) == 0) r.covered_by[b] |= bit(a);  // db ⊆ da, a ≻ b so ⊊
    });
  });
  return r;
}

inline CoveringRelation covering_relation(const Tournament& t) {
  return covering_relation_in(t, t.alternatives());
}

// Uncovered set via the kings characterization: a is chosen iff it reaches
// every alternative of the mask in at most two dominance steps.
inline Mask uncovered_in(const Tournament& t, Mask within) {
  Mask out = 0;
  for_each_bit(within, [&](int a) {
    Mask reach = t.dominion_in(a, within);
    Mask reach2 = reach | bit(a);
    for_each_bit(reach, [&](int c) { reach2 |= t.dominion_in(c, within); });
    if ((within & ~reach2) == 0) out |= bit(a);
  });
  return out;
}

// Uncovered set as the maximal elements of the covering relation. Must agree
// with the kings computation.
inline Mask uncovered_by_covering_in(const Tournament& t, Mask within) {
  CoveringRelation r = covering_relation_in(t, within);
  Mask out = 0;
  for_each_bit(within, [&](int a) {
    if (r.covered_by[a] == 0) out |= bit(a);
  });
  return out;
}

inline AltSet uncovered(const Tournament& t) {
  return AltSet(uncovered_in(t, t.alternatives()));
}

// Fixpoint of repeated restriction to the uncovered set.
inline Mask iterated_uncovered_in(const Tournament& t, Mask within) {
  Mask b = within;
  for (;;) {
    Mask next = uncovered_in(t, b);
    if (next == b) return b;
    b = next;
  }
}

inline AltSet iterated_uncovered(const Tournament& t) {
  return AltSet(iterated_uncovered_in(t, t.alternatives()));
}

namespace detail {

// Is there a transitive subset with maximum `a` that no alternative of the
// mask dominates entirely? Depth-first over chains grown downward: the next
// element must be dominated by the whole chain, so `below` is the candidate
// pool and `above` the common dominators still to be eliminated.
inline bool banks_chain(const Tournament& t, Mask below, Mask above) {
  if (above == 0) return true;
  Mask candidates = below;
  while (candidates) {
    int c = lowest_bit(candidates);
    candidates &= candidates - 1;
    if ((t.dominion(c) & above) == 0) continue;  // c eliminates no dominator
    if (banks_chain(t, below & t.dominion(c), above & t.dominators(c)))
      return true;
  }
  return false;
}

}  // namespace detail

inline bool banks_contains(const Tournament& t, Mask within, int a) {
  return detail::banks_chain(t, t.dominion_in(a, within),
                             t.dominators_in(a, within));
}

// Exact Banks set: maximal elements of inclusion-maximal transitive subsets.
inline Mask banks_in(const Tournament& t, Mask within) {
  require_order(popcount(within), kBanksExactCap, "banks");
  Mask out = 0;
  for_each_bit(within, [&](int a) {
    if (banks_contains(t, within, a)) out |= bit(a);
  });
  return out;
}

inline AltSet banks(const Tournament& t) {
  return AltSet(banks_in(t, t.alternatives()));
}

// Maximum of a greedily grown maximal transitive subset. The seed selects
// the initial alternative and every later pick among the candidates, so runs
// are reproducible; the result is always a Banks winner.
inline int banks_element(const Tournament& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](Mask m) {
    std::vector<int> v;
    for_each_bit(m, [&](int i) { v.push_back(i); });
    return v[rng() % v.size()];
  };
  int a = pick(t.alternatives());
  Mask chain_dominators = t.alternatives();
  for (;;) {
    chain_dominators &= t.dominators(a);
    if (chain_dominators == 0) return a;
    a = pick(chain_dominators);
  }
}

}  // namespace tk
