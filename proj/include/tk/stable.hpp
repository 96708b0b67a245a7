#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tk/caps.hpp"
#include "tk/game.hpp"
#include "tk/qualified.hpp"
#include "tk/tournament.hpp"

namespace tk {

enum class SolutionId { CNL, CO, UC, UC_INF, BA, TC, MC, ME, BP, TEQ };

inline const char* solution_name(SolutionId s) {
  switch (s) {
    case SolutionId::CNL: return "CNL";
    case SolutionId::CO: return "CO";
    case SolutionId::UC: return "UC";
    case SolutionId::UC_INF: return "UCINF";
    case SolutionId::BA: return "BA";
    case SolutionId::TC: return "TC";
    case SolutionId::MC: return "MC";
    case SolutionId::ME: return "ME";
    case SolutionId::BP: return "BP";
    case SolutionId::TEQ: return "TEQ";
  }
  return "?";
}

inline std::optional<SolutionId> parse_solution(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (name == "cnl") return SolutionId::CNL;
  if (name == "co" || name == "copeland") return SolutionId::CO;
  if (name == "uc") return SolutionId::UC;
  if (name == "ucinf" || name == "uc_inf") return SolutionId::UC_INF;
  if (name == "ba" || name == "banks") return SolutionId::BA;
  if (name == "tc") return SolutionId::TC;
  if (name == "mc") return SolutionId::MC;
  if (name == "me") return SolutionId::ME;
  if (name == "bp") return SolutionId::BP;
  if (name == "teq") return SolutionId::TEQ;
  return std::nullopt;
}

// All inclusion-minimal externally stable (or retentive) sets found by a
// brute-force search, plus derived facts about them.
struct StableSetReport {
  SolutionId subject;
  std::vector<AltSet> sets;
  AltSet union_set;
  bool unique = false;
  std::vector<bool> internally_stable;
};

// Algorithm: seed with the Copeland set, then add dominators of the frontier
// until no alternative outside the set dominates into it.
inline Mask top_cycle_in(const Tournament& t, Mask within) {
  Mask b = copeland_in(t, within);
  Mask c = b;
  for (;;) {
    Mask next = 0;
    for_each_bit(c, [&](int a) { next |= t.dominators_in(a, within & ~b); });
    if (next == 0) return b;
    b |= next;
    c = next;
  }
}

inline AltSet top_cycle(const Tournament& t) {
  return AltSet(top_cycle_in(t, t.alternatives()));
}

// Transitive-closure characterization: members reach every alternative of
// the mask. Independent oracle for the algorithm above.
inline Mask top_cycle_by_reachability(const Tournament& t, Mask within) {
  Mask out = 0;
  for_each_bit(within, [&](int a) {
    Mask reach = bit(a);
    for (;;) {
      Mask next = reach;
      for_each_bit(reach, [&](int c) { next |= t.dominion_in(c, within); });
      if (next == reach) break;
      reach = next;
    }
    if ((within & ~reach) == 0) out |= bit(a);
  });
  return out;
}

// Minimal covering set: seed with the bipartisan set, then repeatedly add
// the bipartisan set of the alternatives left uncovered by the current set.
inline Mask minimal_covering_set_in(const Tournament& t, Mask within) {
  Mask b = bipartisan_in(t, within);
  for (;;) {
    Mask frontier = 0;
    for_each_bit(within & ~b, [&](int a) {
      // Membership of a in uc(B ∪ {a}) via the kings characterization on
      // the restricted sub-tournament.
      Mask sub = b | bit(a);
      Mask reach = t.dominion_in(a, sub);
      Mask reach2 = reach | bit(a);
      for_each_bit(reach, [&](int c) { reach2 |= t.dominion_in(c, sub); });
      if ((sub & ~reach2) == 0) frontier |= bit(a);
    });
    if (frontier == 0) return b;
    b |= bipartisan_in(t, frontier);
  }
}

inline AltSet minimal_covering_set(const Tournament& t) {
  return AltSet(minimal_covering_set_in(t, t.alternatives()));
}

// True iff a is chosen by the solver when added alone to b.
using MemberFn = std::function<bool(const Tournament&, Mask within, int a)>;
// Choice set of the solver within a mask.
using SolveFn = std::function<Mask(const Tournament&, Mask)>;

inline bool is_externally_stable_fn(const Tournament& t, Mask universe, Mask b,
                                    const MemberFn& member) {
  if (b == 0) throw EmptySet("external stability of the empty set");
  bool stable = true;
  for_each_bit(universe & ~b, [&](int a) {
    if (stable && member(t, b | bit(a), a)) stable = false;
  });
  return stable;
}

namespace detail {

// Enumerates subsets of the universe in increasing cardinality, lexicographic
// within a cardinality, and keeps the externally stable ones with no stable
// proper subset. Finding one stable set does not end the search: every
// incomparable subset is examined so no minimal set is missed. Each found
// set is certified minimal by checking all of its proper subsets.
inline std::vector<Mask> minimal_externally_stable_sets(
    const Tournament& t, Mask universe, const MemberFn& member) {
  std::vector<int> verts;
  for_each_bit(universe, [&](int i) { verts.push_back(i); });
  int n = static_cast<int>(verts.size());
  auto expand = [&](Mask compact) {
    Mask b = 0;
    for_each_bit(compact, [&](int i) { b |= bit(verts[i]); });
    return b;
  };
  std::vector<Mask> found;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over k-subsets of the compact index space.
    Mask sub = all_mask(k);
    Mask end = Mask{1} << n;
    while (sub < end) {
      Mask b = expand(sub);
      bool dominated = false;
      for (Mask f : found)
        if ((f & ~b) == 0) {  // contains an already-certified minimal set
          dominated = true;
          break;
        }
      if (!dominated && is_externally_stable_fn(t, universe, b, member)) {
        bool minimal = true;
        for (Mask p = (b - 1) & b; p != 0 && minimal; p = (p - 1) & b)
          if (is_externally_stable_fn(t, universe, p, member)) minimal = false;
        if (minimal) found.push_back(b);
      }
      Mask c = sub & -sub;
      Mask r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  return found;
}

}  // namespace detail

inline StableSetReport minimal_stable_sets_fn(SolutionId subject,
                                              const Tournament& t, Mask universe,
                                              const MemberFn& member,
                                              const SolveFn& solve) {
  require_order(popcount(universe), kSubsetSearchCap, "minimal_stable_sets");
  StableSetReport r;
  r.subject = subject;
  Mask u = 0;
  for (Mask b : detail::minimal_externally_stable_sets(t, universe, member)) {
    r.sets.push_back(AltSet(b));
    r.internally_stable.push_back(solve(t, b) == b);
    u |= b;
  }
  r.union_set = AltSet(u);
  r.unique = r.sets.size() == 1;
  return r;
}

// All minimal extending sets (externally BA-stable sets). The uniqueness
// flag records whether this instance had exactly one.
inline StableSetReport minimal_extending_set(const Tournament& t) {
  Mask universe = t.alternatives();
  require_order(popcount(universe), kExtendingSetCap, "minimal_extending_set");
  MemberFn member = [](const Tournament& tt, Mask w, int a) {
    return banks_contains(tt, w, a);
  };
  SolveFn solve = [](const Tournament& tt, Mask w) { return banks_in(tt, w); };
  return minimal_stable_sets_fn(SolutionId::ME, t, universe, member, solve);
}

}  // namespace tk
