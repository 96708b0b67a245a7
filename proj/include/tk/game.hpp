#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tk/error.hpp"
#include "tk/tournament.hpp"

namespace tk {

using Rational = mpq_class;

// Skew-symmetric {-1,0,+1} payoff matrix of the tournament game.
struct TournamentGame {
  int n = 0;
  std::vector<std::vector<int>> payoff;

  int entry(int i, int j) const { return payoff[i][j]; }
};

// Probability vector with exact rational entries.
struct Strategy {
  std::vector<Rational> probabilities;
};

inline TournamentGame tournament_game_in(const Tournament& t, Mask within) {
  std::vector<int> verts;
  for_each_bit(within, [&](int i) { verts.push_back(i); });
  int n = static_cast<int>(verts.size());
  TournamentGame g;
  g.n = n;
  g.payoff.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      g.payoff[i][j] = t.dominates(verts[i], verts[j]) ? 1 : -1;
    }
  return g;
}

inline TournamentGame tournament_game(const Tournament& t) {
  return tournament_game_in(t, t.alternatives());
}

// Maximin strategy of the symmetric zero-sum game: an exact rational s with
// M·s <= 0, sum(s) = 1, s >= 0. Solved by primal simplex on the feasibility
// system with Bland's anti-cycling rule; for tournament games the
// equilibrium is unique, so any feasible point is the equilibrium.
inline Strategy solve_symmetric_game(const TournamentGame& g) {
  int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.payoff[i][j] != -g.payoff[j][i])
        throw Infeasible("payoff matrix is not skew-symmetric");

  // Columns: s_0..s_{n-1}, slacks w_0..w_{n-1}, artificial z; rows: the n
  // constraints M s + w = 0 and sum(s) + z = 1. Phase 1 minimizes z; the
  // initial basis (w..., z) is feasible since the first n right-hand sides
  // are zero.
  int rows = n + 1, cols = 2 * n + 1;
  std::vector<std::vector<Rational>> tab(rows + 1,
                                         std::vector<Rational>(cols + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = g.payoff[i][j];
    tab[i][n + i] = 1;
  }
  for (int j = 0; j < n; ++j) tab[n][j] = 1;
  tab[n][2 * n] = 1;
  tab[n][cols] = 1;
  // Objective row: minimize z; z starts basic in row n, so reduce.
  for (int j = 0; j <= cols; ++j) tab[rows][j] = -tab[n][j];
  tab[rows][2 * n] = 0;

  std::vector<int> basis(rows);
  for (int i = 0; i < n; ++i) basis[i] = n + i;
  basis[n] = 2 * n;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (tab[rows][j] < 0) {  // Bland: smallest index wins
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Infeasible("phase-1 objective unbounded");
    Rational piv = tab[leave][enter];
    for (int j = 0; j <= cols; ++j) tab[leave][j] /= piv;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      Rational f = tab[i][enter];
      if (f == 0) continue;
      for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (tab[rows][cols] != 0) throw Infeasible("system has no feasible point");

  Strategy s;
  s.probabilities.assign(n, Rational(0));
  for (int i = 0; i < rows; ++i)
    if (basis[i] < n) s.probabilities[basis[i]] = tab[i][cols];
  for (auto& q : s.probabilities) q.canonicalize();
  return s;
}

// Independent certificate check: the feasibility system holds exactly and
// complementary slackness holds (s_i > 0 implies (M s)_i = 0).
inline bool verify_equilibrium(const TournamentGame& g, const Strategy& s) {
  if (static_cast<int>(s.probabilities.size()) != g.n)
    throw DimensionMismatch("strategy length " +
                            std::to_string(s.probabilities.size()) +
                            " for game of order " + std::to_string(g.n));
  Rational total = 0;
  for (const Rational& p : s.probabilities) {
    if (p < 0) return false;
    total += p;
  }
  if (total != 1) return false;
  for (int i = 0; i < g.n; ++i) {
    Rational row = 0;
    for (int j = 0; j < g.n; ++j) row += Rational(g.payoff[i][j]) * s.probabilities[j];
    if (row > 0) return false;
    if (s.probabilities[i] > 0 && row != 0) return false;
  }
  return true;
}

// Support of the unique Nash equilibrium of the tournament game.
inline Mask bipartisan_in(const Tournament& t, Mask within) {
  std::vector<int> verts;
  for_each_bit(within, [&](int i) { verts.push_back(i); });
  Strategy s = solve_symmetric_game(tournament_game_in(t, within));
  Mask out = 0;
  for (size_t k = 0; k < verts.size(); ++k)
    if (s.probabilities[k] > 0) out |= bit(verts[k]);
  return out;
}

inline AltSet bipartisan(const Tournament& t) {
  return AltSet(bipartisan_in(t, t.alternatives()));
}

// "index:numerator/denominator" pairs, ascending index, space-separated.
// Indices are 1-based to match the human-facing convention.
inline std::string strategy_to_string(const Strategy& s) {
  std::string out;
  for (size_t i = 0; i < s.probabilities.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i + 1) + ":" +
           s.probabilities[i].get_num().get_str() + "/" +
           s.probabilities[i].get_den().get_str();
  }
  return out;
}

}  // namespace tk
