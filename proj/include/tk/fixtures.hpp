#pragma once

#include "tk/decompose.hpp"
#include "tk/tournament.hpp"

namespace tk {
namespace fixtures {

// 3-cycle 0>1>2>0.
inline Tournament cycle3() {
  return Tournament::from_matrix({"010", "001", "100"});
}

// Linear order 0 > 1 > ... > n-1.
inline Tournament transitive(int n) {
  return Tournament::from_orientation(n, [](int, int) { return true; });
}

// Circulant: i beats i+1..i+k mod n (regular for n = 2k+1).
inline Tournament circulant(int n, int k) {
  return Tournament::from_orientation(n, [&](int i, int j) {
    int d = (j - i) % n;
    return d <= k;
  });
}

// Order 10: three 3-cycle blocks {0,1,2}, {3,4,5}, {6,7,8} arranged in a
// block 3-cycle (B1>B2, B2>B3, B3>B1); alternative 9 dominates exactly
// {2,5,8} and is dominated by everything else.
inline Tournament f1() {
  return Tournament::from_orientation(10, [](int i, int j) {
    if (j == 9) return i == 2 || i == 5 || i == 8 ? false : true;
    int bi = i / 3, bj = j / 3;
    if (bi == bj) return (j - i) % 3 == 1;   // internal 3-cycle
    return (bj - bi + 3) % 3 == 1;           // block cycle
  });
}

// Order 8: i beats j for i<j except the reversed pairs 7>3, 6>2, 5>1, 6>0,
// 7>0 (0-based).
inline Tournament f2() {
  return Tournament::from_orientation(8, [](int i, int j) {
    if (i == 3 && j == 7) return false;
    if (i == 2 && j == 6) return false;
    if (i == 1 && j == 5) return false;
    if (i == 0 && j == 6) return false;
    if (i == 0 && j == 7) return false;
    return true;
  });
}

// Order 5: {0,1,2} internal 3-cycle; {0,1,2}>3; 3>4; 4>{0,1,2}.
inline Tournament f3() {
  return Tournament::from_matrix({"01010",  //
                                  "00110",  //
                                  "10010",  //
                                  "00001",  //
                                  "11100"});
}

// F3 with alternatives 3 and 4 replaced by 3-cycle components.
inline Tournament f3_with_cycle_components() {
  std::vector<Tournament> parts = {transitive(1), transitive(1), transitive(1),
                                   cycle3(), cycle3()};
  return product(f3(), parts).first;
}

}  // namespace fixtures
}  // namespace tk
