#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan/vertex_set.hpp"

namespace turan {

/// Immutable k-uniform hypergraph on labeled vertices 0..n-1.
/// Edges are duplicate-free and kept in lexicographic order of their
/// sorted vertex tuples, so iteration order is deterministic.
struct Hypergraph {
    int k = 1;
    int n = 0;
    std::vector<VertexSet> edges;

    Hypergraph() = default;

    // validates sizes, ranges and duplicates; normalizes edge order
    Hypergraph(int k, int n, std::vector<VertexSet> edge_sets);

    static Hypergraph from_vertex_lists(int k, int n, const std::vector<std::vector<int>>& lists);
    static Hypergraph complete(int t, int k);
    static Hypergraph edgeless(int n, int k) { return Hypergraph(k, n, {}); }

    std::size_t edge_count() const { return edges.size(); }
    bool is_edge(VertexSet e) const;

    bool operator==(const Hypergraph&) const = default;
};

/// number of (k-|T|)-sets S with S ∪ T an edge; degree(H, ∅) = e(H)
long long degree(const Hypergraph& h, VertexSet t);

/// the (k-|T|)-graph of completions of T, on the same vertex labels
Hypergraph link(const Hypergraph& h, VertexSet t);

struct MinDegree {
    long long value = 0;
    VertexSet witness; // lexicographically smallest l-set attaining the minimum
};

/// exact enumeration over all C(n,l) l-sets; l = 0 returns e(H)
MinDegree min_l_degree(const Hypergraph& h, int l);

/// induced subgraph, vertices of S relabeled to 0..|S|-1 preserving order
Hypergraph induced(const Hypergraph& h, VertexSet s);

/// s-blow-up: each vertex becomes s clones, each edge all its transversal k-sets
Hypergraph blow_up(const Hypergraph& f, int s);

std::string describe(const Hypergraph& h);

} // namespace turan
