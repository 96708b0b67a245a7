#pragma once

#include <cstdlib>
#include <string>

#include "tk/error.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Practical limits of the brute-force solvers. TK_MAX_ORDER overrides all of
// them (expert use).
inline constexpr int kBanksExactCap = 16;
inline constexpr int kSubsetSearchCap = 16;
inline constexpr int kExtendingSetCap = 12;
inline constexpr int kTeqNaiveCap = 14;
inline constexpr int kTeqSeededCap = 18;
inline constexpr int kCanonicalEnumCap = 7;
inline constexpr int kLabeledEnumCap = 11;  // 2^(n(n-1)/2) codes fit in a word

inline int cap_override() {
  static int v = [] {
    const char* env = std::getenv("TK_MAX_ORDER");
    return env ? std::atoi(env) : 0;
  }();
  return v;
}

inline void require_order(int order, int cap, const char* solver) {
  int limit = cap_override() > 0 ? cap_override() : cap;
  if (order > limit)
    throw OrderTooLargeForExact(std::string(solver) + ": order " +
                                std::to_string(order) + " exceeds cap " +
                                std::to_string(limit));
}

}  // namespace tk
