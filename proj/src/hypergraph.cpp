#include "turan/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/subsets.hpp"

namespace turan {

Hypergraph::Hypergraph(int k_, int n_, std::vector<VertexSet> edge_sets)
    : k(k_), n(n_), edges(std::move(edge_sets)) {
    if (k < 1) throw std::invalid_argument("uniformity k must be >= 1");
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("vertex count out of supported range");
    VertexSet universe = VertexSet::range(n);
    for (const VertexSet& e : edges) {
        if (e.size() != k) throw std::invalid_argument("edge with wrong number of vertices");
        if (!e.subset_of(universe)) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end(), VertexSet::lex_less);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge");
}

Hypergraph Hypergraph::from_vertex_lists(int k, int n, const std::vector<std::vector<int>>& lists) {
    std::vector<VertexSet> es;
    es.reserve(lists.size());
    for (const auto& l : lists) {
        VertexSet e = VertexSet::of(l);
        if (static_cast<int>(l.size()) != k || e.size() != k)
            throw std::invalid_argument("edge must have k distinct vertices");
        es.push_back(e);
    }
    return Hypergraph(k, n, std::move(es));
}

Hypergraph Hypergraph::complete(int t, int k) {
    std::vector<VertexSet> es;
    for_each_subset(t, k, [&](const std::vector<int>& s) { es.push_back(VertexSet::of(s)); });
    return Hypergraph(k, t, std::move(es));
}

bool Hypergraph::is_edge(VertexSet e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e, VertexSet::lex_less);
    return it != edges.end() && *it == e;
}

long long degree(const Hypergraph& h, VertexSet t) {
    if (t.size() > h.k) throw std::invalid_argument("degree: |T| exceeds uniformity");
    if (!t.subset_of(VertexSet::range(h.n)))
        throw std::invalid_argument("degree: T not within vertex set");
    long long c = 0;
    for (const VertexSet& e : h.edges)
        if (t.subset_of(e)) ++c;
    return c;
}

Hypergraph link(const Hypergraph& h, VertexSet t) {
    if (t.size() >= h.k) throw std::invalid_argument("link: need |T| < k");
    std::vector<VertexSet> es;
    for (const VertexSet& e : h.edges)
        if (t.subset_of(e)) es.push_back(e - t);
    return Hypergraph(h.k - t.size(), h.n, std::move(es));
}

MinDegree min_l_degree(const Hypergraph& h, int l) {
    if (l < 0 || l >= h.k) throw std::invalid_argument("min_l_degree: need 0 <= l < k");
    if (l > h.n) throw std::invalid_argument("min_l_degree: l exceeds vertex count");
    if (l == 0) return {static_cast<long long>(h.edge_count()), VertexSet{}};

    // dense count over lex ranks of l-sets, then first minimum wins
    std::vector<long long> deg(binom_u64(h.n, l), 0);
    std::vector<int> buf;
    for (const VertexSet& e : h.edges) {
        std::vector<int> vs = e.elements();
        for_each_subset(h.k, l, [&](const std::vector<int>& pick) {
            buf.clear();
            for (int i : pick) buf.push_back(vs[i]);
            ++deg[lex_rank(buf, h.n)];
        });
    }
    std::uint64_t arg = 0;
    long long best = deg.empty() ? 0 : deg[0];
    for (std::uint64_t r = 1; r < deg.size(); ++r)
        if (deg[r] < best) { best = deg[r]; arg = r; }
    return {best, VertexSet::of(lex_unrank(arg, h.n, l))};
}

Hypergraph induced(const Hypergraph& h, VertexSet s) {
    if (!s.subset_of(VertexSet::range(h.n)))
        throw std::invalid_argument("induced: S not within vertex set");
    std::vector<int> label(h.n, -1);
    std::vector<int> vs = s.elements();
    for (std::size_t i = 0; i < vs.size(); ++i) label[vs[i]] = static_cast<int>(i);
    std::vector<VertexSet> es;
    for (const VertexSet& e : h.edges) {
        if (!e.subset_of(s)) continue;
        VertexSet out;
        for (int v : e.elements()) out.insert(label[v]);
        es.push_back(out);
    }
    return Hypergraph(h.k, static_cast<int>(vs.size()), std::move(es));
}

Hypergraph blow_up(const Hypergraph& f, int s) {
    if (s < 1) throw std::invalid_argument("blow_up: s must be >= 1");
    long long nn = static_cast<long long>(f.n) * s;
    if (nn > VertexSet::max_vertices) throw std::invalid_argument("blow_up: too many vertices");
    std::vector<VertexSet> es;
    for (const VertexSet& e : f.edges) {
        std::vector<int> vs = e.elements();
        std::vector<int> clone(f.k, 0);
        while (true) {
            VertexSet out;
            for (int i = 0; i < f.k; ++i) out.insert(vs[i] * s + clone[i]);
            es.push_back(out);
            int i = f.k - 1;
            while (i >= 0 && clone[i] == s - 1) clone[i--] = 0;
            if (i < 0) break;
            ++clone[i];
        }
    }
    return Hypergraph(f.k, static_cast<int>(nn), std::move(es));
}

std::string describe(const Hypergraph& h) {
    return std::to_string(h.k) + "-graph, n=" + std::to_string(h.n) +
           ", e=" + std::to_string(h.edge_count());
}

} // namespace turan
