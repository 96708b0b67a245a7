#pragma once

#include "tk/game.hpp"
#include "tk/qualified.hpp"
#include "tk/stable.hpp"
#include "tk/teq.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Uniform dispatch over the solution concepts. The optional TeqSolver lets
// callers share one memo table across many sub-queries on the same
// tournament.
inline Mask solve_in(SolutionId s, const Tournament& t, Mask within,
                     TeqSolver* teq_solver = nullptr) {
  switch (s) {
    case SolutionId::CNL: return cnl_in(t, within);
    case SolutionId::CO: return copeland_in(t, within);
    case SolutionId::UC: return uncovered_in(t, within);
    case SolutionId::UC_INF: return iterated_uncovered_in(t, within);
    case SolutionId::BA: return banks_in(t, within);
    case SolutionId::TC: return top_cycle_in(t, within);
    case SolutionId::MC: return minimal_covering_set_in(t, within);
    case SolutionId::BP: return bipartisan_in(t, within);
    case SolutionId::ME: {
      require_order(popcount(within), kExtendingSetCap, "minimal_extending_set");
      MemberFn member = [](const Tournament& tt, Mask w, int a) {
        return banks_contains(tt, w, a);
      };
      SolveFn sol = [](const Tournament& tt, Mask w) { return banks_in(tt, w); };
      return minimal_stable_sets_fn(SolutionId::ME, t, within, member, sol)
          .union_set.bits;
    }
    case SolutionId::TEQ: {
      require_order(popcount(within), kTeqSeededCap, "teq");
      if (teq_solver) return teq_solver->solve(within);
      TeqSolver solver(t);
      return solver.solve(within);
    }
  }
  return 0;
}

inline AltSet solve(SolutionId s, const Tournament& t) {
  return AltSet(solve_in(s, t, t.alternatives()));
}

// Membership of a in S(within); cheaper than a full solve for BA.
inline bool solution_contains(SolutionId s, const Tournament& t, Mask within,
                              int a, TeqSolver* teq_solver = nullptr) {
  if (s == SolutionId::BA) return banks_contains(t, within, a);
  return (solve_in(s, t, within, teq_solver) >> a) & 1;
}

// External stability: no outside alternative is chosen when added alone.
inline bool is_externally_stable(SolutionId s, const Tournament& t, AltSet b) {
  TeqSolver shared(t);
  return is_externally_stable_fn(
      t, t.alternatives(), b.bits,
      [&](const Tournament& tt, Mask w, int a) {
        return solution_contains(s, tt, w, a, &shared);
      });
}

// Internal stability: the solver applied to b returns all of b.
inline bool is_internally_stable(SolutionId s, const Tournament& t, AltSet b) {
  if (b.empty()) throw EmptySet("internal stability of the empty set");
  return solve_in(s, t, b.bits) == b.bits;
}

inline StableSetReport minimal_stable_sets(SolutionId s, const Tournament& t) {
  TeqSolver shared(t);
  MemberFn member = [&](const Tournament& tt, Mask w, int a) {
    return solution_contains(s, tt, w, a, &shared);
  };
  SolveFn sol = [&](const Tournament& tt, Mask w) {
    return solve_in(s, tt, w, &shared);
  };
  return minimal_stable_sets_fn(s, t, t.alternatives(), member, sol);
}

inline bool is_retentive(SolutionId s, const Tournament& t, AltSet b) {
  TeqSolver shared(t);
  return is_retentive_fn(t, b.bits, [&](const Tournament& tt, Mask w) {
    return solve_in(s, tt, w, &shared);
  });
}

inline StableSetReport minimal_retentive_sets(SolutionId s, const Tournament& t) {
  TeqSolver shared(t);
  return minimal_retentive_sets_fn(s, t, [&](const Tournament& tt, Mask w) {
    return solve_in(s, tt, w, &shared);
  });
}

}  // namespace tk
