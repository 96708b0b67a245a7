#pragma once

#include <array>
#include <unordered_map>

#include "tk/caps.hpp"
#include "tk/qualified.hpp"
#include "tk/stable.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Binary relation over an alternative subset, bit-packed like the dominance
// relation.
struct Relation {
  std::array<Mask, kMaxOrder> out{};

  void add(int a, int b) { out[a] |= bit(b); }
  bool has(int a, int b) const { return (out[a] >> b) & 1; }
};

// Maximal elements of the asymmetric part of the transitive closure of r in
// the universe. Closure computed by iterative propagation.
inline Mask mtc(Mask universe, const Relation& r) {
  if (universe == 0) throw EmptyUniverse("mtc of empty universe");
  std::array<Mask, kMaxOrder> reach{};
  for_each_bit(universe, [&](int a) { reach[a] = r.out[a] & universe; });
  for (bool changed = true; changed;) {
    changed = false;
    for_each_bit(universe, [&](int a) {
      Mask next = reach[a];
      for_each_bit(reach[a], [&](int b) { next |= reach[b]; });
      if (next != reach[a]) {
        reach[a] = next;
        changed = true;
      }
    });
  }
  // a P b iff b reachable from a but not a from b; keep the P-undominated.
  Mask out = 0;
  for_each_bit(universe, [&](int a) {
    bool dominated = false;
    for_each_bit(universe & ~bit(a), [&](int b) {
      if ((reach[b] & bit(a)) && !(reach[a] & bit(b))) dominated = true;
    });
    if (!dominated) out |= bit(a);
  });
  return out;
}

// Tournament equilibrium set solver with memoized sub-results. The memo is
// keyed by the alternative-subset bitmask within the fixed root tournament:
// the recursion only ever visits induced sub-tournaments of the root, so
// subset identity suffices. A solver instance is confined to one caller;
// use separate instances for concurrent work.
class TeqSolver {
 public:
  enum class Mode { naive, seeded };

  explicit TeqSolver(const Tournament& t, Mode mode = Mode::seeded)
      : t_(t), mode_(mode) {}

  Mask solve(Mask within) {
    if (popcount(within) <= 1) return within;
    auto it = memo_.find(within);
    if (it != memo_.end()) return it->second;
    Mask result = mode_ == Mode::naive ? solve_naive(within)
                                       : solve_seeded(within);
    memo_.emplace(within, result);
    return result;
  }

  // a -> x iff a is chosen by teq among x's dominators within b. A
  // subrelation of the dominance relation.
  Relation relation(Mask b) {
    if (b == 0) throw EmptySet("teq relation of empty set");
    Relation r;
    for_each_bit(b, [&](int x) {
      Mask dom = t_.dominators_in(x, b);
      if (dom == 0) return;
      for_each_bit(solve(dom), [&](int a) { r.add(a, x); });
    });
    return r;
  }

  void clear_cache() { memo_.clear(); }

 private:
  Mask solve_naive(Mask within) { return mtc(within, relation(within)); }

  // Seed the working set with the Copeland set, then iteratively pull in
  // everything that teq-dominates the frontier until closed.
  Mask solve_seeded(Mask within) {
    Relation r;
    Mask b = copeland_in(t_, within);
    Mask c = b;
    for (;;) {
      Mask d = 0;
      for_each_bit(c, [&](int a) {
        Mask dom = t_.dominators_in(a, within);
        if (dom == 0) return;
        Mask chosen = solve(dom);
        for_each_bit(chosen, [&](int x) { r.add(x, a); });
        d |= chosen;
      });
      if ((d & ~b) == 0) return mtc(b, r);
      c = d;
      b |= c;
    }
  }

  const Tournament& t_;
  Mode mode_;
  std::unordered_map<Mask, Mask> memo_;
};

inline AltSet teq(const Tournament& t,
                  TeqSolver::Mode mode = TeqSolver::Mode::seeded) {
  int cap = mode == TeqSolver::Mode::naive ? kTeqNaiveCap : kTeqSeededCap;
  require_order(t.order(), cap, "teq");
  TeqSolver solver(t, mode);
  return AltSet(solver.solve(t.alternatives()));
}

inline Relation teq_relation(const Tournament& t, AltSet b) {
  require_order(popcount(b.bits), kTeqNaiveCap, "teq_relation");
  TeqSolver solver(t, TeqSolver::Mode::naive);
  return solver.relation(b.bits);
}

// B is retentive w.r.t. a solver when, for every member with dominators (in
// the whole tournament), the solver applied to those dominators stays in B.
inline bool is_retentive_fn(const Tournament& t, Mask b, const SolveFn& solve) {
  if (b == 0) throw EmptySet("retentiveness of the empty set");
  bool ok = true;
  for_each_bit(b, [&](int x) {
    Mask dom = t.dominators(x);
    if (ok && dom != 0 && (solve(t, dom) & ~b) != 0) ok = false;
  });
  return ok;
}

inline StableSetReport minimal_retentive_sets_fn(SolutionId subject,
                                                 const Tournament& t,
                                                 const SolveFn& solve) {
  require_order(t.order(), kSubsetSearchCap, "minimal_retentive_sets");
  Mask universe = t.alternatives();
  std::vector<Mask> found;
  int n = t.order();
  for (int k = 1; k <= n; ++k) {
    Mask sub = all_mask(k);
    Mask end = Mask{1} << n;
    while (sub < end) {
      bool dominated = false;
      for (Mask f : found)
        if ((f & ~sub) == 0) {
          dominated = true;
          break;
        }
      if (!dominated && is_retentive_fn(t, sub, solve)) {
        bool minimal = true;
        for (Mask p = (sub - 1) & sub; p != 0 && minimal; p = (p - 1) & sub)
          if (is_retentive_fn(t, p, solve)) minimal = false;
        if (minimal) found.push_back(sub);
      }
      Mask c = sub & -sub;
      Mask r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  StableSetReport rep;
  rep.subject = subject;
  Mask u = 0;
  for (Mask b : found) {
    rep.sets.push_back(AltSet(b));
    rep.internally_stable.push_back(false);  // not meaningful for retentive sets
    u |= b;
  }
  rep.union_set = AltSet(u);
  rep.unique = rep.sets.size() == 1;
  return rep;
}

}  // namespace tk
