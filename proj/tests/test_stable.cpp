#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "tk/enumerate.hpp"
#include "tk/fixtures.hpp"
#include "tk/solve.hpp"

using namespace tk;

namespace {

Tournament cycle_plus_loser() {
  return parse_tournament("4\n0101\n0011\n1001\n0000");
}

}  // namespace

TEST_CASE("solution name parsing") {
  CHECK(parse_solution("mc") == SolutionId::MC);
  CHECK(parse_solution("TEQ") == SolutionId::TEQ);
  CHECK(parse_solution("UcInf") == SolutionId::UC_INF);
  CHECK_FALSE(parse_solution("nope").has_value());
}

TEST_CASE("external stability") {
  CHECK(is_externally_stable(SolutionId::UC, cycle_plus_loser(),
                             AltSet::of({0, 1, 2})));
  // The order-10 fixture minus its last alternative is an extending set.
  CHECK(is_externally_stable(SolutionId::BA, fixtures::f1(),
                             AltSet(all_mask(9))));
  // Removing alternative 5 (1-based) from the order-8 fixture is not: 5 is a
  // Banks winner of the full tournament.
  CHECK_FALSE(is_externally_stable(SolutionId::BA, fixtures::f2(),
                                   AltSet(all_mask(8) & ~bit(4))));
  CHECK_THROWS_AS(is_externally_stable(SolutionId::UC, fixtures::f2(), AltSet()),
                  EmptySet);
}

TEST_CASE("internal stability") {
  CHECK(is_internally_stable(SolutionId::CO, fixtures::cycle3(),
                             AltSet::of({0, 1, 2})));
  CHECK_FALSE(is_internally_stable(SolutionId::UC, fixtures::transitive(3),
                                   AltSet::of({0, 1})));
  // No externally CO-stable set of the 5-alternative fixture is internally
  // stable.
  Tournament f3 = fixtures::f3();
  for (Mask b = 1; b <= all_mask(5); ++b)
    if (is_externally_stable(SolutionId::CO, f3, AltSet(b)))
      CHECK_FALSE(is_internally_stable(SolutionId::CO, f3, AltSet(b)));
}

TEST_CASE("minimal stable sets: dominant singleton") {
  StableSetReport r = minimal_stable_sets(SolutionId::CNL, fixtures::transitive(3));
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0] == AltSet::of({0}));
  CHECK(r.unique);
  CHECK(r.union_set == AltSet::of({0}));
}

TEST_CASE("minimal stable sets: UC on the order-10 fixture") {
  StableSetReport r = minimal_stable_sets(SolutionId::UC, fixtures::f1());
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].bits == all_mask(10));
}

TEST_CASE("minimal stable sets: eight externally CO-stable sets on F3") {
  Tournament f3 = fixtures::f3();
  int external = 0;
  bool has_all = false, has_2345 = false, has_125 = false;
  for (Mask b = 1; b <= all_mask(5); ++b)
    if (is_externally_stable(SolutionId::CO, f3, AltSet(b))) {
      ++external;
      if (b == all_mask(5)) has_all = true;
      if (b == AltSet::of({1, 2, 3, 4}).bits) has_2345 = true;
      if (b == AltSet::of({0, 1, 4}).bits) has_125 = true;
    }
  CHECK(external == 8);
  CHECK(has_all);
  CHECK(has_2345);
  CHECK(has_125);
}

TEST_CASE("top cycle") {
  CHECK(top_cycle(fixtures::transitive(3)) == AltSet::of({0}));
  CHECK(top_cycle(cycle_plus_loser()) == AltSet::of({0, 1, 2}));
  CHECK(top_cycle(fixtures::f3()).bits == all_mask(5));
}

TEST_CASE("top cycle algorithm matches reachability closure") {
  for (int n = 1; n <= 5; ++n) {
    TournamentStream s(n, EnumMode::labeled);
    while (auto t = s.next())
      CHECK(top_cycle_in(*t, t->alternatives()) ==
            top_cycle_by_reachability(*t, t->alternatives()));
  }
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    Tournament t = random_tournament(12, rng);
    CHECK(top_cycle_in(t, t.alternatives()) ==
          top_cycle_by_reachability(t, t.alternatives()));
  }
}

TEST_CASE("dominant sets form a chain with the top cycle at the bottom") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 30; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);
    Tournament t = random_tournament(n, rng);
    // Dominant sets: non-empty B with B > A\B; they are exactly the
    // externally CNL-stable dominant candidates.
    std::vector<Mask> dominant;
    for (Mask b = 1; b <= all_mask(n); ++b) {
      bool dom = true;
      for_each_bit(all_mask(n) & ~b, [&](int a) {
        if ((t.dominators_in(a, b)) != b) dom = false;
      });
      if (dom) dominant.push_back(b);
    }
    for (Mask x : dominant)
      for (Mask y : dominant) CHECK(((x & ~y) == 0 || (y & ~x) == 0));
    Mask tc = top_cycle_in(t, t.alternatives());
    for (Mask x : dominant) CHECK((tc & ~x) == 0);
  }
}

TEST_CASE("minimal covering set fixtures") {
  CHECK(minimal_covering_set(fixtures::transitive(3)) == AltSet::of({0}));
  CHECK(minimal_covering_set(fixtures::cycle3()) == AltSet::of({0, 1, 2}));
  CHECK(minimal_covering_set(fixtures::f1()).bits == all_mask(10));
}

TEST_CASE("minimal covering set: unique and equal to brute force, order <= 5") {
  for (int n = 1; n <= 5; ++n) {
    TournamentStream s(n, EnumMode::labeled);
    while (auto t = s.next()) {
      StableSetReport r = minimal_stable_sets(SolutionId::UC, *t);
      CHECK(r.unique);
      CHECK(r.union_set.bits == minimal_covering_set_in(*t, t->alternatives()));
      CHECK(r.internally_stable[0]);  // MC is internally stable
      Mask mc = r.union_set.bits;
      Mask ucinf = iterated_uncovered_in(*t, t->alternatives());
      CHECK((mc & ~ucinf) == 0);
      CHECK((mc & ~top_cycle_in(*t, t->alternatives())) == 0);
    }
  }
}

TEST_CASE("minimal extending set fixtures") {
  StableSetReport f1 = minimal_extending_set(fixtures::f1());
  REQUIRE(f1.sets.size() == 1);
  CHECK(f1.sets[0].bits == all_mask(9));  // everything but alternative 10

  StableSetReport f2 = minimal_extending_set(fixtures::f2());
  REQUIRE(f2.sets.size() == 1);
  CHECK(f2.sets[0].bits == all_mask(8));

  StableSetReport lin = minimal_extending_set(fixtures::transitive(4));
  REQUIRE(lin.sets.size() == 1);
  CHECK(lin.sets[0] == AltSet::of({0}));
}

TEST_CASE("stable-set machinery respects the subset-search cap") {
  std::mt19937_64 rng(2);
  Tournament big = random_tournament(17, rng);
  CHECK_THROWS_AS(minimal_stable_sets(SolutionId::UC, big),
                  OrderTooLargeForExact);
  Tournament me_big = random_tournament(13, rng);
  CHECK_THROWS_AS(minimal_extending_set(me_big), OrderTooLargeForExact);
}

TEST_CASE("SSP of TC and MC under removal of unchosen alternatives") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(rng() % 4);
    Tournament t = random_tournament(n, rng);
    for (SolutionId s : {SolutionId::TC, SolutionId::MC}) {
      Mask chosen = solve_in(s, t, t.alternatives());
      Mask unchosen = t.alternatives() & ~chosen;
      for (Mask r = unchosen; r != 0; r = (r - 1) & unchosen)
        CHECK(solve_in(s, t, t.alternatives() & ~r) == chosen);
    }
  }
}
