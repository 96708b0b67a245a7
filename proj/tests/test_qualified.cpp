#include <algorithm>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "tk/enumerate.hpp"
#include "tk/fixtures.hpp"
#include "tk/lab.hpp"
#include "tk/qualified.hpp"

using namespace tk;

namespace {

Tournament cycle_plus_loser() {
  // 3-cycle {0,1,2} plus alternative 3 dominated by all.
  return parse_tournament("4\n0101\n0011\n1001\n0000");
}

}  // namespace

TEST_CASE("cnl") {
  CHECK(cnl(fixtures::transitive(3)) == AltSet::of({0, 1}));
  CHECK(cnl(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  CHECK(cnl(fixtures::f3()) == AltSet::of({0, 1, 2, 3, 4}));
  CHECK(cnl(fixtures::transitive(1)) == AltSet::of({0}));
}

TEST_CASE("copeland scores and set") {
  auto [ts, tset] = copeland(fixtures::transitive(3));
  CHECK(ts.scores == std::vector<int>{2, 1, 0});
  CHECK(tset == AltSet::of({0}));

  auto [cs, cset] = copeland(fixtures::cycle3());
  CHECK(cs.scores == std::vector<int>{1, 1, 1});
  CHECK(cset == AltSet::of({0, 1, 2}));

  // F3: each cycle member scores 2, alternative 3 scores 1, and alternative
  // 4 dominates the whole cycle for the top score of 3.
  auto [fs, fset] = copeland(fixtures::f3());
  int best = *std::max_element(fs.scores.begin(), fs.scores.end());
  Mask expect = 0;
  for (int a = 0; a < 5; ++a) {
    int d = popcount(fixtures::f3().dominion(a));
    CHECK(d == fs.scores[a]);
    if (d == best) expect |= bit(a);
  }
  CHECK(fset.bits == expect);
  CHECK(fset == AltSet::of({4}));
}

TEST_CASE("copeland scores sum to the edge count") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    int n = 1 + static_cast<int>(rng() % 10);
    Tournament t = random_tournament(n, rng);
    auto [cs, set] = copeland(t);
    int sum = 0;
    for (int s : cs.scores) sum += s;
    CHECK(sum == n * (n - 1) / 2);
    CHECK_FALSE(set.empty());
  }
}

TEST_CASE("covering relation") {
  CoveringRelation lin = covering_relation(fixtures::transitive(3));
  CHECK(lin.covers(0, 1));
  CHECK(lin.covers(0, 2));
  CHECK(lin.covers(1, 2));
  CHECK_FALSE(lin.covers(1, 0));

  CoveringRelation cyc = covering_relation(fixtures::cycle3());
  for (int a = 0; a < 3; ++a) CHECK(cyc.covered_by[a] == 0);

  CoveringRelation four = covering_relation(cycle_plus_loser());
  CHECK(four.covered_by[3] == (bit(0) | bit(1) | bit(2)));
}

TEST_CASE("covering relation is transitive and within dominance") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    Tournament t = random_tournament(n, rng);
    CoveringRelation r = covering_relation(t);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!r.covers(a, b)) continue;
        CHECK(t.dominates(a, b));
        CHECK_FALSE(r.covers(b, a));
        for (int c = 0; c < n; ++c)
          if (r.covers(b, c)) CHECK(r.covers(a, c));
      }
  }
}

TEST_CASE("uncovered set") {
  CHECK(uncovered(cycle_plus_loser()) == AltSet::of({0, 1, 2}));
  CHECK(uncovered(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  // Brute-force kings check on the order-10 fixture: everything is a king.
  CHECK(uncovered(fixtures::f1()).bits == all_mask(10));
}

TEST_CASE("uncovered: all three computations agree up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    TournamentStream s(n, EnumMode::labeled);
    while (auto t = s.next()) {
      Mask all = t->alternatives();
      Mask kings = uncovered_in(*t, all);
      CHECK(kings == uncovered_by_covering_in(*t, all));
      CHECK(kings == uncovered_matrix_in(*t, all));
    }
  }
}

TEST_CASE("iterated uncovered set") {
  CHECK(iterated_uncovered(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  CHECK(iterated_uncovered(fixtures::transitive(3)) == AltSet::of({0}));
  std::mt19937_64 rng(23);
  for (int round = 0; round < 20; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    Tournament t = random_tournament(n, rng);
    Mask fix = iterated_uncovered_in(t, t.alternatives());
    CHECK(uncovered_in(t, fix) == fix);  // internally UC-stable
    if (auto w = condorcet_winner(t)) CHECK(fix == bit(*w));
  }
}

TEST_CASE("banks set") {
  CHECK(banks(fixtures::transitive(3)) == AltSet::of({0}));
  CHECK(banks(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  // Witness chain 5>6>7>8 (1-based) is non-extendable, so alternative 5 is
  // a Banks winner of the order-8 fixture.
  CHECK(banks(fixtures::f2()).contains(4));
}

TEST_CASE("banks respects the exact-search cap") {
  std::mt19937_64 rng(1);
  Tournament big = random_tournament(17, rng);
  CHECK_THROWS_AS(banks(big), OrderTooLargeForExact);
}

TEST_CASE("banks element") {
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    CHECK(banks_element(fixtures::transitive(3), seed) == 0);
  Mask seen = 0;
  for (std::uint64_t seed = 0; seed < 64; ++seed)
    seen |= bit(banks_element(fixtures::cycle3(), seed));
  CHECK(seen == all_mask(3));  // every cycle member attainable
  Mask ba = banks(fixtures::f2()).bits;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    int a = banks_element(fixtures::f2(), seed);
    CHECK(((ba >> a) & 1) == 1);
    CHECK(banks_element(fixtures::f2(), seed) == a);  // deterministic
  }
}

TEST_CASE("inclusion chain and strong retentiveness, exhaustive order <= 5") {
  for (int n = 1; n <= 5; ++n) {
    TournamentStream s(n, EnumMode::labeled);
    while (auto t = s.next()) {
      Mask all = t->alternatives();
      Mask ba = banks_in(*t, all);
      Mask uc = uncovered_in(*t, all);
      Mask co = copeland_in(*t, all);
      Mask nl = cnl_in(*t, all);
      CHECK((ba & ~uc) == 0);
      CHECK((uc & ~nl) == 0);
      CHECK((co & ~uc) == 0);
      // Strong retentiveness: the choice among any dominator set stays
      // inside the global choice set.
      for (int a = 0; a < n; ++a) {
        Mask dom = t->dominators(a);
        if (dom == 0) continue;
        CHECK((cnl_in(*t, dom) & ~nl) == 0);
        CHECK((uncovered_in(*t, dom) & ~uc) == 0);
        CHECK((banks_in(*t, dom) & ~ba) == 0);
      }
      if (auto w = condorcet_winner(*t)) {
        CHECK(co == bit(*w));
        CHECK(uc == bit(*w));
        CHECK(ba == bit(*w));
        CHECK(((nl >> *w) & 1) == 1);
      }
    }
  }
}
