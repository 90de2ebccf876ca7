#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "turan/family.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

struct SolverConfig {
    double time_budget = 600.0;       // seconds
    long long node_budget = 1LL << 62;
    bool symmetry_breaking = true;
    int parallel_workers = 1;
    std::uint64_t seed = 0x5eed;      // heuristic only
    int restarts = 16;

    void validate() const;
};

enum class SearchStatus { proved_exact, lower_bound_only, unsat, budget_exhausted };

std::string to_string(SearchStatus s);

struct SearchResult {
    long long value_lo = 0;
    long long value_hi = 0; // == value_lo when the value is known exactly
    std::optional<Hypergraph> witness;
    SearchStatus status = SearchStatus::budget_exhausted;
    long long nodes = 0;
    double wall_seconds = 0;

    bool exact() const { return value_lo == value_hi; }
};

struct SearchProblem {
    int n = 0, k = 0, l = 0;
    ForbiddenFamily family;

    SearchProblem(int n_, int k_, int l_, ForbiddenFamily fam);
};

/// provably exact value by full enumeration of all 2^C(n,k) graphs with
/// family-containment pruning; requires C(n,k) <= 24
SearchResult oracle_ex(const SearchProblem& p);

/// decision form: is there a family-free graph with delta_l >= d?
/// Branch and bound over edge slots in colexicographic order with incremental
/// forbidden-copy detection, degree-slack pruning and optional lexicographic
/// symmetry breaking over vertex-transposition generators.
SearchResult exists_with_min_degree(const SearchProblem& p, long long d, const SolverConfig& cfg);

/// heuristic lower bound, then ascending decision queries until an unsat proof
SearchResult exact_ex(const SearchProblem& p, const SolverConfig& cfg);

/// seeded local search (greedy fill + simulated annealing over add/remove/swap
/// moves, lexicographic objective, restarts); every witness is re-verified
SearchResult heuristic_lower_bound(const SearchProblem& p, const SolverConfig& cfg);

} // namespace turan
