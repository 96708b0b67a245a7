#pragma once

#include <utility>
#include <vector>

#include "tk/error.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Partition of the alternatives into components plus the summary tournament
// on the blocks.
struct Decomposition {
  std::vector<AltSet> blocks;
  Tournament summary;
};

// True iff every outside alternative relates uniformly to all of b.
inline bool is_component(const Tournament& t, AltSet b) {
  if (b.empty()) throw EmptySet("is_component: empty block");
  Mask outside = t.alternatives() & ~b.bits;
  bool ok = true;
  for_each_bit(outside, [&](int a) {
    Mask dom = t.dominion_in(a, b.bits);
    if (dom != 0 && dom != b.bits) ok = false;
  });
  return ok;
}

// Substitutes parts[i] for alternative i of the summary. Block i keeps the
// internal relation of parts[i]; across blocks the summary edge decides.
inline std::pair<Tournament, Decomposition> product(
    const Tournament& summary, const std::vector<Tournament>& parts) {
  if (static_cast<int>(parts.size()) != summary.order())
    throw ArityMismatch("product: " + std::to_string(parts.size()) +
                        " parts for summary of order " +
                        std::to_string(summary.order()));
  int total = 0;
  std::vector<int> offset(parts.size());
  std::vector<int> block_of;
  for (size_t k = 0; k < parts.size(); ++k) {
    offset[k] = total;
    total += parts[k].order();
    for (int i = 0; i < parts[k].order(); ++i)
      block_of.push_back(static_cast<int>(k));
  }
  if (total > kMaxOrder)
    throw OrderTooLarge("product order " + std::to_string(total));
  Tournament t = Tournament::from_orientation(total, [&](int i, int j) {
    int bi = block_of[i], bj = block_of[j];
    if (bi == bj) return parts[bi].dominates(i - offset[bi], j - offset[bj]);
    return summary.dominates(bi, bj);
  });
  Decomposition d{{}, summary};
  for (size_t k = 0; k < parts.size(); ++k)
    d.blocks.push_back(
        AltSet(all_mask(parts[k].order()) << offset[k]));
  return {t, d};
}

// Quotient tournament on the given blocks; the blocks must be pairwise
// disjoint components covering all alternatives.
inline Tournament summary_under(const Tournament& t,
                                const std::vector<AltSet>& blocks) {
  Mask covered = 0;
  for (const AltSet& b : blocks) {
    if (b.empty()) throw NotAProduct("empty block");
    if (b.bits & covered) throw NotAProduct("overlapping blocks");
    if (!is_component(t, b)) throw NotAProduct("block is not a component");
    covered |= b.bits;
  }
  if (covered != t.alternatives())
    throw NotAProduct("blocks do not cover all alternatives");
  int k = static_cast<int>(blocks.size());
  return Tournament::from_orientation(k, [&](int i, int j) {
    int a = lowest_bit(blocks[i].bits);
    int b = lowest_bit(blocks[j].bits);
    return t.dominates(a, b);
  });
}

}  // namespace tk
