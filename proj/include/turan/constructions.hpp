#pragma once

#include <cstdint>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

using BinaryMatrix = std::vector<std::vector<int>>;

/// k-graph on t parts of size p (part V_i = {i*p .. i*p+p-1}) whose edges are
/// the k-sets with fewer than l vertices in every part, plus the k-sets with
/// exactly l vertices in some V_i and one vertex in each of the k-l cyclically
/// following parts. For p >= l its minimum l-degree is exactly p^(k-l).
Hypergraph build_B(int p, int t, int k, int l);

/// b blocks of t*p vertices (block j = {j*t*p .. (j+1)*t*p-1}); edges are the
/// k-sets with fewer than l vertices per block, the k-sets with exactly l
/// vertices in one block and the rest spread over the a following blocks with
/// fewer than l each, and a copy of build_B(p,t,k,l) inside every block.
Hypergraph build_layered(int k, int l, int a, int b, int t, int p);

/// Sylvester recursion with -1 mapped to 0; order a power of two in 1..32
BinaryMatrix sylvester_hadamard(int order);

/// 4-graph on rows 0..m-1 and columns m..2m-1 of a binary matrix: a 4-set is
/// an edge iff it has exactly 3 rows, exactly 3 columns, or 2 rows + 2 columns
/// inducing a 2x2 submatrix with odd sum. Sets of 4 rows or 4 columns are
/// non-edges.
Hypergraph build_giraud(const BinaryMatrix& m);

/// Seeded probabilistic construction: one uniform value X_S over the base
/// vertices is drawn per l-set S of {0..n-1}; a sorted k-set is an edge iff
/// the k-l+1 values indexed by its (l-1)-prefix extensions are pairwise
/// distinct and form an edge of the base (k-l+1)-graph. Colliding values
/// yield a non-edge. Identical (base,n,k,l,seed) give identical output.
Hypergraph build_random_link(const Hypergraph& base, int n, int k, int l, std::uint64_t seed);

} // namespace turan
