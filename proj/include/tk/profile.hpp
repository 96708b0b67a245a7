#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "tk/error.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Voters' linear orders over 0..n-1, most-preferred first.
struct PreferenceProfile {
  int order = 0;
  std::vector<std::vector<int>> voters;
};

// Profile file format: '#' comment lines; first line n; each subsequent line
// a space-separated permutation of 1..n (most-preferred first), one voter
// per line.
inline PreferenceProfile parse_profile(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw MalformedInput("missing order line");
  PreferenceProfile p;
  try {
    size_t pos = 0;
    p.order = std::stoi(lines[0], &pos);
    if (pos != lines[0].size()) throw MalformedInput("bad order line");
  } catch (const std::exception&) {
    throw MalformedInput("bad order line: '" + lines[0] + "'");
  }
  if (p.order < 1 || p.order > kMaxOrder)
    throw MalformedInput("bad profile order " + std::to_string(p.order));
  for (size_t v = 1; v < lines.size(); ++v) {
    std::istringstream row(lines[v]);
    std::vector<int> ord;
    Mask seen = 0;
    int x;
    while (row >> x) {
      if (x < 1 || x > p.order || (seen & bit(x - 1)))
        throw InconsistentAlternativeSets("voter " + std::to_string(v) +
                                          " is not a permutation of 1.." +
                                          std::to_string(p.order));
      seen |= bit(x - 1);
      ord.push_back(x - 1);
    }
    if (popcount(seen) != p.order)
      throw InconsistentAlternativeSets("voter " + std::to_string(v) +
                                        " ranks only " +
                                        std::to_string(popcount(seen)) +
                                        " alternatives");
    p.voters.push_back(std::move(ord));
  }
  if (p.voters.empty()) throw MalformedInput("profile has no voters");
  return p;
}

inline PreferenceProfile parse_profile(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

// Strict pairwise majority relation of the profile. Requires an odd
// electorate: with linear orders that guarantees completeness, and silent
// tie-breaking would corrupt downstream semantics.
inline Tournament mcgarvey(const PreferenceProfile& p) {
  if (p.voters.size() % 2 == 0)
    throw EvenElectorate("mcgarvey: even electorate of " +
                         std::to_string(p.voters.size()));
  int n = p.order;
  std::vector<std::vector<int>> above(n, std::vector<int>(n, 0));
  for (const auto& voter : p.voters) {
    if (static_cast<int>(voter.size()) != n)
      throw InconsistentAlternativeSets("voter order length mismatch");
    for (size_t i = 0; i < voter.size(); ++i)
      for (size_t j = i + 1; j < voter.size(); ++j)
        ++above[voter[i]][voter[j]];
  }
  int half = static_cast<int>(p.voters.size()) / 2;
  return Tournament::from_orientation(
      n, [&](int i, int j) { return above[i][j] > half; });
}

}  // namespace tk
