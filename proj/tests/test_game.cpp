#include <algorithm>
#include <numeric>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "tk/enumerate.hpp"
#include "tk/fixtures.hpp"
#include "tk/game.hpp"
#include "tk/solve.hpp"

using namespace tk;

TEST_CASE("tournament game matrices") {
  TournamentGame rps = tournament_game(fixtures::cycle3());
  CHECK(rps.payoff == std::vector<std::vector<int>>{
                          {0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  TournamentGame lin = tournament_game(fixtures::transitive(3));
  CHECK(lin.payoff == std::vector<std::vector<int>>{
                          {0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
  TournamentGame one = tournament_game(fixtures::transitive(1));
  CHECK(one.payoff == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("solve: rock-paper-scissors is uniform") {
  Strategy s = solve_symmetric_game(tournament_game(fixtures::cycle3()));
  for (int i = 0; i < 3; ++i) CHECK(s.probabilities[i] == Rational(1, 3));
}

TEST_CASE("solve: transitive triple plays the Condorcet winner purely") {
  Strategy s = solve_symmetric_game(tournament_game(fixtures::transitive(3)));
  CHECK(s.probabilities == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("solve: 5-alternative circulant is uniform") {
  Strategy s = solve_symmetric_game(tournament_game(fixtures::circulant(5, 2)));
  for (int i = 0; i < 5; ++i) CHECK(s.probabilities[i] == Rational(1, 5));
}

TEST_CASE("verify_equilibrium examples") {
  TournamentGame rps = tournament_game(fixtures::cycle3());
  Strategy uniform{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
  CHECK(verify_equilibrium(rps, uniform));
  Strategy pure{{1, 0, 0}};
  CHECK_FALSE(verify_equilibrium(rps, pure));
  TournamentGame lin = tournament_game(fixtures::transitive(3));
  CHECK(verify_equilibrium(lin, pure));
  Strategy wrong_size{{1}};
  CHECK_THROWS_AS(verify_equilibrium(rps, wrong_size), DimensionMismatch);
}

TEST_CASE("bipartisan set") {
  CHECK(bipartisan(fixtures::transitive(3)) == AltSet::of({0}));
  CHECK(bipartisan(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  Mask bp = bipartisan(fixtures::f1()).bits;
  Mask mc = minimal_covering_set(fixtures::f1()).bits;
  CHECK((bp & ~mc) == 0);
  CHECK(mc == all_mask(10));
}

TEST_CASE("certified equilibria on random order-15 games") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 25; ++round) {
    Tournament t = random_tournament(15, rng);
    TournamentGame g = tournament_game(t);
    Strategy s = solve_symmetric_game(g);
    CHECK(verify_equilibrium(g, s));
    Rational sum = 0;
    for (const Rational& p : s.probabilities) sum += p;
    CHECK(sum == 1);
  }
}

TEST_CASE("equilibrium uniqueness: repeated solves agree exactly") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 10; ++round) {
    Tournament t = random_tournament(9, rng);
    TournamentGame g = tournament_game(t);
    CHECK(solve_symmetric_game(g).probabilities ==
          solve_symmetric_game(g).probabilities);
  }
}

TEST_CASE("bipartisan support is relabeling-equivariant") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 20; ++round) {
    int n = 3 + static_cast<int>(rng() % 8);
    Tournament t = random_tournament(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mask before = bipartisan(t).bits;
    Mask mapped = 0;
    for_each_bit(before, [&](int a) { mapped |= bit(perm[a]); });
    CHECK(bipartisan(t.relabel(perm)).bits == mapped);
  }
}

TEST_CASE("non-skew-symmetric payoff rejected") {
  TournamentGame bad;
  bad.n = 2;
  bad.payoff = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(solve_symmetric_game(bad), Infeasible);
}

TEST_CASE("strategy serialization") {
  Strategy s = solve_symmetric_game(tournament_game(fixtures::cycle3()));
  CHECK(strategy_to_string(s) == "1:1/3 2:1/3 3:1/3");
  Strategy pure = solve_symmetric_game(tournament_game(fixtures::transitive(2)));
  CHECK(strategy_to_string(pure) == "1:1/1 2:0/1");
}
