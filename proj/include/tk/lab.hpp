#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tk/decompose.hpp"
#include "tk/enumerate.hpp"
#include "tk/solve.hpp"
#include "tk/tournament.hpp"

namespace tk {

// Matrix oracle: adjacency-plus-identity matrix squared; members
// are the rows with no zero entry. Cross-check for the kings and covering
// computations.
inline Mask uncovered_matrix_in(const Tournament& t, Mask within) {
  std::vector<int> verts;
  for_each_bit(within, [&](int i) { verts.push_back(i); });
  int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = (i == j || t.dominates(verts[i], verts[j])) ? 1 : 0;
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    bool king = true;
    for (int j = 0; j < n && king; ++j) {
      int u = m[i][j];
      for (int k = 0; k < n; ++k) u += m[i][k] * m[k][j];
      if (u == 0) king = false;
    }
    if (king) out |= bit(verts[i]);
  }
  return out;
}

enum class AxiomId { MON, IUA, WSP, SSP, COM, IRR };

inline const char* axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::MON: return "MON";
    case AxiomId::IUA: return "IUA";
    case AxiomId::WSP: return "WSP";
    case AxiomId::SSP: return "SSP";
    case AxiomId::COM: return "COM";
    case AxiomId::IRR: return "IRR";
  }
  return "?";
}

namespace detail {

inline Tournament flip_edge(const Tournament& t, int from, int to) {
  return Tournament::from_orientation(t.order(), [&](int i, int j) {
    if (i == from && j == to) return true;
    if (i == to && j == from) return false;
    return t.dominates(i, j);
  });
}

inline Tournament rewire_unchosen(const Tournament& t,
                                  const std::vector<int>& unchosen, Mask code) {
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < unchosen.size(); ++i)
    for (size_t j = i + 1; j < unchosen.size(); ++j)
      pairs.emplace_back(unchosen[i], unchosen[j]);
  return Tournament::from_orientation(t.order(), [&](int i, int j) {
    for (size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k].first == i && pairs[k].second == j)
        return static_cast<bool>((code >> k) & 1);
    return t.dominates(i, j);
  });
}

inline std::string witness_block(const std::string& note, const Tournament& t) {
  std::string out = "witness:" + note + "\n";
  std::istringstream lines(t.to_matrix_string());
  std::string line;
  while (std::getline(lines, line)) out += "witness:" + line + "\n";
  return out;
}

}  // namespace detail

// Tests one axiom on one tournament; a returned string is a minimal
// serialized witness of a violation. For COM the tournament must come with
// its decomposition; for IRR it must be regular and the "witness" documents
// that S excludes an alternative (the axiom is existential).
inline std::optional<std::string> check_axiom(
    SolutionId s, AxiomId axiom, const Tournament& t,
    const Decomposition* decomposition = nullptr,
    std::uint64_t rewire_seed = 0) {
  Mask all = t.alternatives();
  Mask chosen = solve_in(s, t, all);
  switch (axiom) {
    case AxiomId::MON: {
      // Strengthening a chosen alternative one incoming edge at a time must
      // keep it chosen.
      std::optional<std::string> w;
      for_each_bit(chosen, [&](int a) {
        if (w) return;
        for_each_bit(t.dominators(a), [&](int b) {
          if (w) return;
          Tournament t2 = detail::flip_edge(t, a, b);
          if (!solution_contains(s, t2, all, a))
            w = detail::witness_block(std::string(solution_name(s)) +
                                          ":MON flip " + std::to_string(b + 1) +
                                          ">" + std::to_string(a + 1) +
                                          " drops " + std::to_string(a + 1),
                                      t);
        });
      });
      return w;
    }
    case AxiomId::IUA: {
      std::vector<int> unchosen;
      for_each_bit(all & ~chosen, [&](int i) { unchosen.push_back(i); });
      int pairs = static_cast<int>(unchosen.size() * (unchosen.size() - 1) / 2);
      Mask variants = Mask{1} << std::min(pairs, 15);
      bool sampled = pairs > 15;
      std::mt19937_64 rng(rewire_seed);
      for (Mask v = 0; v < variants; ++v) {
        Mask code = sampled ? rng() & all_mask(pairs) : v;
        Tournament t2 = detail::rewire_unchosen(t, unchosen, code);
        if (solve_in(s, t2, all) != chosen)
          return detail::witness_block(
              std::string(solution_name(s)) + ":IUA rewire changes choice set",
              t);
      }
      return std::nullopt;
    }
    case AxiomId::WSP:
    case AxiomId::SSP: {
      Mask unchosen = all & ~chosen;
      for (Mask r = unchosen; r != 0; r = (r - 1) & unchosen) {
        Mask b = all & ~r;
        Mask sb = solve_in(s, t, b);
        bool ok = axiom == AxiomId::WSP ? (sb & ~chosen) == 0 : sb == chosen;
        if (!ok)
          return detail::witness_block(
              std::string(solution_name(s)) + ":" + axiom_name(axiom) +
                  " removing " + format_set(AltSet(r)),
              t);
      }
      return std::nullopt;
    }
    case AxiomId::COM: {
      if (!decomposition) throw NotAProduct("COM check needs a decomposition");
      // Validates the blocks are components; throws NotAProduct otherwise.
      Tournament summary = summary_under(t, decomposition->blocks);
      Mask composed = 0;
      Mask chosen_blocks = solve_in(s, summary, summary.alternatives());
      for_each_bit(chosen_blocks, [&](int i) {
        composed |= solve_in(s, t, decomposition->blocks[i].bits);
      });
      if (composed != chosen)
        return detail::witness_block(
            std::string(solution_name(s)) + ":COM composed formula differs", t);
      return std::nullopt;
    }
    case AxiomId::IRR: {
      if (!is_regular(t)) throw NotRegular("IRR check needs a regular tournament");
      if (chosen != all)
        return detail::witness_block(
            std::string(solution_name(s)) + ":IRR excludes an alternative", t);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// One inclusion-check evaluation; hard failures are theorem violations,
// findings are conjecture counterexamples.
struct InclusionResult {
  bool hard_ok = true;
  std::string hard_failure;
  std::vector<std::string> findings;
};

inline InclusionResult check_inclusions(const Tournament& t,
                                        bool include_conjectural = true) {
  InclusionResult r;
  Mask all = t.alternatives();
  Mask co = copeland_in(t, all);
  Mask uc = uncovered_in(t, all);
  Mask ucinf = iterated_uncovered_in(t, all);
  Mask ba = banks_in(t, all);
  Mask tc = top_cycle_in(t, all);
  Mask mc = minimal_covering_set_in(t, all);
  Mask bp = bipartisan_in(t, all);
  auto hard = [&](bool ok, const char* name) {
    if (!ok && r.hard_ok) {
      r.hard_ok = false;
      r.hard_failure = name;
    }
  };
  hard((ba & ~uc) == 0, "BA subset of UC");
  hard((co & ~uc) == 0, "CO subset of UC");
  hard((uc & ~tc) == 0, "UC subset of TC");
  hard((mc & ~ucinf) == 0, "MC subset of UCINF");
  hard((ucinf & ~uc) == 0, "UCINF subset of UC");
  hard((mc & ~tc) == 0, "MC subset of TC");
  hard((bp & ~mc) == 0, "BP subset of MC");
  if (include_conjectural) {
    StableSetReport me = minimal_extending_set(t);
    TeqSolver solver(t);
    Mask teq_set = solver.solve(all);
    StableSetReport ret = minimal_retentive_sets(SolutionId::TEQ, t);
    if (!me.unique) r.findings.push_back("ME not unique");
    if (!ret.unique) r.findings.push_back("TEQ-retentive sets not unique");
    if ((teq_set & ~me.union_set.bits) != 0)
      r.findings.push_back("TEQ not within ME");
    if ((me.union_set.bits & ~mc) != 0) r.findings.push_back("ME not within MC");
    if ((me.union_set.bits & ~ba) != 0) r.findings.push_back("ME not within BA");
  }
  return r;
}

struct CheckResult {
  long pass = 0;
  long viol = 0;
  bool hard = true;
  std::vector<std::string> witnesses;
};

struct HarnessReport {
  std::string scope;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::map<std::string, double> phase_seconds;  // excluded from render()

  CheckResult& check(const std::string& name, bool hard) {
    for (auto& [n, c] : checks)
      if (n == name) return c;
    checks.emplace_back(name, CheckResult{});
    checks.back().second.hard = hard;
    return checks.back().second;
  }

  bool hard_violation() const {
    for (const auto& [n, c] : checks)
      if (c.hard && c.viol > 0) return true;
    return false;
  }

  // Line-oriented body; deterministic for a fixed scope and seed.
  std::string render() const {
    std::string out = "scope: " + scope + "\n";
    out += "seed: " + std::to_string(seed) + "\n";
    for (const auto& [name, c] : checks) {
      out += "check:" + name + " pass=" + std::to_string(c.pass) +
             " viol=" + std::to_string(c.viol) + "\n";
      for (const std::string& w : c.witnesses) out += w;
    }
    return out;
  }
};

struct SweepConfig {
  int order_lo = 1;
  int order_hi = 1;
  EnumMode mode = EnumMode::labeled;
  std::vector<std::string> checks;
  std::optional<long> sample;  // random sample instead of exhaustive
  std::uint64_t seed = 0;
  int jobs = 1;
};

namespace detail {

inline bool known_check(const std::string& name) {
  return name == "inclusions" || name == "mc-unique" || name == "oracles" ||
         name == "equilibrium" || name == "me-unique" || name == "teq-unique" ||
         name == "conjectures";
}

inline bool check_is_hard(const std::string& name) {
  return name == "inclusions" || name == "mc-unique" || name == "oracles" ||
         name == "equilibrium";
}

// Runs one named check on one tournament; appends to the result.
inline void run_check(const std::string& name, const Tournament& t,
                      CheckResult& out) {
  Mask all = t.alternatives();
  auto record = [&](bool ok, const std::string& note) {
    if (ok) {
      ++out.pass;
    } else {
      ++out.viol;
      out.witnesses.push_back(witness_block(name + " " + note, t));
    }
  };
  if (name == "inclusions") {
    InclusionResult r = check_inclusions(t, /*include_conjectural=*/false);
    record(r.hard_ok, r.hard_failure);
  } else if (name == "mc-unique") {
    StableSetReport rep = minimal_stable_sets(SolutionId::UC, t);
    Mask algo = minimal_covering_set_in(t, all);
    record(rep.unique && rep.union_set.bits == algo,
           rep.unique ? "algorithm disagrees with brute force"
                      : "minimal covering set not unique");
  } else if (name == "oracles") {
    bool tc_ok = top_cycle_in(t, all) == top_cycle_by_reachability(t, all);
    Mask kings = uncovered_in(t, all);
    bool uc_ok = kings == uncovered_by_covering_in(t, all) &&
                 kings == uncovered_matrix_in(t, all);
    TeqSolver naive(t, TeqSolver::Mode::naive);
    TeqSolver seeded(t, TeqSolver::Mode::seeded);
    bool teq_ok = naive.solve(all) == seeded.solve(all);
    record(tc_ok && uc_ok && teq_ok,
           !tc_ok ? "tc mismatch" : (!uc_ok ? "uc mismatch" : "teq mismatch"));
  } else if (name == "equilibrium") {
    TournamentGame g = tournament_game(t);
    record(verify_equilibrium(g, solve_symmetric_game(g)),
           "equilibrium certificate failed");
  } else if (name == "me-unique") {
    record(minimal_extending_set(t).unique, "minimal extending set not unique");
  } else if (name == "teq-unique") {
    record(minimal_retentive_sets(SolutionId::TEQ, t).unique,
           "minimal TEQ-retentive set not unique");
  } else if (name == "conjectures") {
    InclusionResult r = check_inclusions(t, /*include_conjectural=*/true);
    if (r.findings.empty()) {
      ++out.pass;
    } else {
      ++out.viol;
      std::string note;
      for (const auto& f : r.findings) note += f + "; ";
      out.witnesses.push_back(witness_block(name + " " + note, t));
    }
  } else {
    throw Error("unknown check: " + name);
  }
}

inline void merge(HarnessReport& into, const HarnessReport& part) {
  for (const auto& [name, c] : part.checks) {
    CheckResult& dst = into.check(name, c.hard);
    dst.pass += c.pass;
    dst.viol += c.viol;
    dst.witnesses.insert(dst.witnesses.end(), c.witnesses.begin(),
                         c.witnesses.end());
  }
}

}  // namespace detail

// Runs the selected checks over an exhaustive enumeration (or a seeded
// random sample) of each order in range. Deterministic for a fixed config;
// workers share nothing but the immutable configuration.
inline HarnessReport sweep(const SweepConfig& cfg) {
  for (const auto& c : cfg.checks)
    if (!detail::known_check(c)) throw Error("unknown check: " + c);
  HarnessReport report;
  {
    std::ostringstream scope;
    scope << "orders " << cfg.order_lo << ".." << cfg.order_hi << " "
          << (cfg.mode == EnumMode::labeled ? "labeled" : "canonical");
    if (cfg.sample) scope << " sample " << *cfg.sample;
    report.scope = scope.str();
  }
  report.seed = cfg.seed;
  for (const auto& c : cfg.checks) report.check(c, detail::check_is_hard(c));

  for (int n = cfg.order_lo; n <= cfg.order_hi; ++n) {
    auto started = std::chrono::steady_clock::now();
    // Materialize the work list for this order: either every labeled (or
    // canonical) tournament, or a seeded sample.
    std::vector<Tournament> work;
    if (cfg.sample) {
      std::mt19937_64 rng(cfg.seed);
      for (long i = 0; i < *cfg.sample; ++i)
        work.push_back(random_tournament(n, rng));
    } else {
      if (!cfg.sample && n > kLabeledEnumCap)
        throw OrderTooLarge("exhaustive sweep at order " + std::to_string(n));
      TournamentStream stream(n, cfg.mode);
      while (auto t = stream.next()) work.push_back(*t);
    }

    int jobs = std::max(1, cfg.jobs);
    std::vector<HarnessReport> parts(jobs);
    auto run_range = [&](int job) {
      size_t lo = work.size() * job / jobs;
      size_t hi = work.size() * (job + 1) / jobs;
      for (size_t i = lo; i < hi; ++i)
        for (const auto& c : cfg.checks)
          detail::run_check(c, work[i],
                            parts[job].check(c, detail::check_is_hard(c)));
    };
    if (jobs == 1) {
      run_range(0);
    } else {
      std::vector<std::thread> threads;
      for (int j = 0; j < jobs; ++j) threads.emplace_back(run_range, j);
      for (auto& th : threads) th.join();
    }
    for (const auto& part : parts) detail::merge(report, part);
    report.phase_seconds["order " + std::to_string(n)] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
  }
  return report;
}

// Every serialized witness embeds the tournament it was found on; re-parse
// and confirm the violation still shows.
inline Tournament parse_witness(const std::string& block) {
  std::string matrix;
  std::istringstream lines(block);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (line.rfind("witness:", 0) != 0) continue;
    if (first) {  // note line
      first = false;
      continue;
    }
    matrix += line.substr(8) + "\n";
  }
  return parse_tournament(matrix);
}

struct StrongStabilityDemo {
  int externally_stable_count = 0;
  int internally_and_externally_stable_count = 0;
  bool substituted_full_set_stable = false;
};

// The Copeland-stability demonstration: the 5-alternative fixture has eight
// externally CO-stable sets and none that is also internally stable, but
// substituting 3-cycles for its last two alternatives makes the full set
// both internally and externally CO-stable.
inline StrongStabilityDemo strong_stability_demo(const Tournament& f3,
                                                 const Tournament& substituted) {
  StrongStabilityDemo d;
  Mask all = f3.alternatives();
  for (Mask b = 1; b <= all; ++b) {
    if ((b & ~all) != 0) continue;
    if (!is_externally_stable(SolutionId::CO, f3, AltSet(b))) continue;
    ++d.externally_stable_count;
    if (is_internally_stable(SolutionId::CO, f3, AltSet(b)))
      ++d.internally_and_externally_stable_count;
  }
  AltSet full(substituted.alternatives());
  d.substituted_full_set_stable =
      is_externally_stable(SolutionId::CO, substituted, full) &&
      is_internally_stable(SolutionId::CO, substituted, full);
  return d;
}

}  // namespace tk
