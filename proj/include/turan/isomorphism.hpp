#pragma once

#include <cstdint>

#include "turan/hypergraph.hpp"

namespace turan {

inline constexpr int default_pattern_max_order = 12;
inline constexpr int default_canonical_max_order = 10;

/// true iff some injection V(F) -> V(H) maps every edge of F onto an edge of H
bool contains(const Hypergraph& h, const Hypergraph& f,
              int max_order = default_pattern_max_order);

/// number of edge-preserving injections V(F) -> V(H)
std::uint64_t count_injections(const Hypergraph& h, const Hypergraph& f,
                               int max_order = default_pattern_max_order);

std::uint64_t automorphism_count(const Hypergraph& f,
                                 int max_order = default_pattern_max_order);

/// unlabeled copies: edge-preserving injections / |Aut(F)|
std::uint64_t count_copies(const Hypergraph& h, const Hypergraph& f,
                           int max_order = default_pattern_max_order);

/// lexicographically minimal relabeling; brute force over all |V|! permutations
Hypergraph canonical_form(const Hypergraph& f,
                          int max_order = default_canonical_max_order);

/// drop vertices incident to no edge, relabeling the rest in order
Hypergraph drop_isolated(const Hypergraph& f);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b,
                   int max_order = default_canonical_max_order);

} // namespace turan
