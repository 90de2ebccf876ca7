#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "turan/constructions.hpp"
#include "turan/exactmath.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"
#include "turan/io.hpp"
#include "turan/isomorphism.hpp"
#include "turan/rng.hpp"
#include "turan/subsets.hpp"

using namespace turan;

namespace {

// independent per-edge classifier for build_B, used to cross-check the
// generator and the disjointness of the two edge classes
int b_edge_class(const VertexSet& e, int p, int t, int k, int l) {
    std::vector<int> cnt(t, 0);
    for (int v : e.elements()) ++cnt[v / p];
    bool e1 = true;
    for (int c : cnt)
        if (c >= l) e1 = false;
    bool e2 = false;
    for (int i = 0; i < t; ++i) {
        if (cnt[i] != l) continue;
        bool ok = true;
        for (int j = 1; j <= k - l; ++j)
            if (cnt[(i + j) % t] != 1) ok = false;
        if (ok) e2 = true;
    }
    return (e1 ? 1 : 0) + (e2 ? 2 : 0);
}

} // namespace

TEST_CASE("build_B basics") {
    Hypergraph b = build_B(2, 4, 3, 2);
    CHECK(b.n == 8);
    CHECK(b.edge_count() == 40);
    CHECK(min_l_degree(b, 2).value == 2);
    CHECK(degree(b, VertexSet{0, 1}) == 2); // l-set inside part V_0

    CHECK(is_isomorphic(build_B(1, 5, 3, 2), Hypergraph::complete(5, 3)));

    // transversal 4-sets (one vertex in each of four parts) span complete
    // 3-graphs inside E1, so B(2,4,3,2) is not K_4^3-free
    ForbiddenFamily fam(3);
    fam.add(Hypergraph::complete(4, 3));
    CHECK_FALSE(is_family_free(b, fam));
    CHECK(contains(b, Hypergraph::complete(4, 3)));

    // a full part induces an edgeless graph (parts are smaller than k)
    CHECK(induced(b, VertexSet{0, 1}).edge_count() == 0);

    CHECK_THROWS_AS(build_B(2, 3, 4, 2), std::invalid_argument); // t < k
    CHECK_THROWS_AS(build_B(2, 4, 3, 1), std::invalid_argument); // l <= 1
    CHECK_THROWS_AS(build_B(0, 4, 3, 2), std::invalid_argument);
}

TEST_CASE("build_B minimum degree grid") {
    const int grid[4][2] = {{3, 2}, {4, 2}, {4, 3}, {5, 3}};
    for (auto [k, l] : grid)
        for (int t = k; t <= k + 1; ++t)
            for (int p = l; p <= l + 1; ++p) {
                Hypergraph b = build_B(p, t, k, l);
                CHECK(b.n == t * p);
                long long expect = 1;
                for (int i = 0; i < k - l; ++i) expect *= p;
                CHECK(min_l_degree(b, l).value == expect);
            }
}

TEST_CASE("build_B edge classes are disjoint and exhaustive") {
    for (auto [p, t, k, l] : std::vector<std::array<int, 4>>{{2, 4, 3, 2}, {3, 5, 4, 2}, {3, 5, 4, 3}}) {
        Hypergraph b = build_B(p, t, k, l);
        std::size_t e1 = 0, e2 = 0;
        for (const VertexSet& e : b.edges) {
            int cls = b_edge_class(e, p, t, k, l);
            CHECK(cls != 0);
            CHECK(cls != 3); // never both
            if (cls == 1) ++e1;
            if (cls == 2) ++e2;
        }
        CHECK(e1 + e2 == b.edge_count());
        // nothing outside the two classes is an edge
        std::size_t total = 0;
        for_each_subset(b.n, k, [&](const std::vector<int>& s) {
            if (b_edge_class(VertexSet::of(s), p, t, k, l) != 0) ++total;
        });
        CHECK(total == b.edge_count());
    }
}

TEST_CASE("build_layered degree formula") {
    struct Case { int k, l, a, b, t, p; long long e, delta; };
    // frozen by independent enumeration
    std::vector<Case> cases = {
        {3, 2, 1, 5, 3, 2, 2680, 8},
        {3, 2, 2, 6, 3, 2, 5484, 14},
        {3, 2, 1, 5, 3, 3, 9180, 12},
        {4, 2, 2, 7, 4, 2, 156128, 68},
    };
    for (const Case& c : cases) {
        Hypergraph h = build_layered(c.k, c.l, c.a, c.b, c.t, c.p);
        CHECK(h.n == c.b * c.t * c.p);
        CHECK(h.edge_count() == static_cast<std::size_t>(c.e));
        long long delta = min_l_degree(h, c.l).value;
        CHECK(delta == c.delta);
        long pk = 1;
        for (int i = 0; i < c.k - c.l; ++i) pk *= c.p;
        // delta_l = f(n/b; a) + p^(k-l)
        BigInt expect = f_uniform(c.t * c.p, c.a, c.k, c.l) + pk;
        CHECK(BigInt(static_cast<long>(delta)) == expect);
    }
}

TEST_CASE("build_layered parameter validation") {
    CHECK_THROWS_AS(build_layered(3, 2, 1, 4, 3, 2), std::invalid_argument); // a+k = b
    CHECK_THROWS_AS(build_layered(3, 2, 0, 5, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_layered(3, 2, 1, 5, 2, 2), std::invalid_argument); // t < k
    CHECK_THROWS_AS(build_layered(3, 2, 1, 5, 3, 1), std::invalid_argument); // p < l
}

TEST_CASE("layered blocks carry copies of B") {
    Hypergraph h = build_layered(3, 2, 1, 5, 3, 2);
    Hypergraph b = build_B(2, 3, 3, 2);
    Hypergraph canon_b = canonical_form(b);
    for (int j = 0; j < 5; ++j) {
        VertexSet block;
        for (int v = j * 6; v < (j + 1) * 6; ++v) block.insert(v);
        Hypergraph inside = induced(h, block);
        CHECK(canonical_form(inside).edges == canon_b.edges);
    }
}

TEST_CASE("sylvester_hadamard") {
    CHECK(sylvester_hadamard(1) == BinaryMatrix{{1}});
    CHECK(sylvester_hadamard(2) == BinaryMatrix{{1, 1}, {1, 0}});
    for (int order : {2, 4, 8, 16, 32}) {
        BinaryMatrix m = sylvester_hadamard(order);
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j) {
                int agree = 0;
                for (int c = 0; c < order; ++c)
                    if (m[i][c] == m[j][c]) ++agree;
                CHECK(agree == order / 2);
            }
    }
    CHECK_THROWS_AS(sylvester_hadamard(3), std::invalid_argument);
    CHECK_THROWS_AS(sylvester_hadamard(0), std::invalid_argument);
    CHECK_THROWS_AS(sylvester_hadamard(64), std::invalid_argument);
}

TEST_CASE("build_giraud on the order-4 Sylvester matrix") {
    Hypergraph g = build_giraud(sylvester_hadamard(4));
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 56);
    CHECK_FALSE(contains(g, Hypergraph::complete(5, 4)));
    CHECK(min_l_degree(g, 3).value == 4);

    // edges with exactly three rows: m * C(m,3)
    std::size_t three_rows = 0;
    for (const VertexSet& e : g.edges) {
        int rows = 0;
        for (int v : e.elements())
            if (v < 4) ++rows;
        if (rows == 3) ++three_rows;
    }
    CHECK(three_rows == 4 * binom_u64(4, 3));
}

TEST_CASE("giraud graphs are K_5^4-free for every small binary matrix") {
    Hypergraph k54 = Hypergraph::complete(5, 4);
    // exhaustive for m <= 3
    for (int m = 1; m <= 3; ++m) {
        int cells = m * m;
        for (int bits = 0; bits < (1 << cells); ++bits) {
            BinaryMatrix mat(m, std::vector<int>(m));
            for (int c = 0; c < cells; ++c) mat[c / m][c % m] = bits >> c & 1;
            CHECK_FALSE(contains(build_giraud(mat), k54));
        }
    }
    // randomized m in 4..6
    SplitMix64 rng(77);
    for (int trial = 0; trial < 24; ++trial) {
        int m = 4 + static_cast<int>(rng.uniform_below(3));
        BinaryMatrix mat(m, std::vector<int>(m));
        for (auto& row : mat)
            for (int& v : row) v = static_cast<int>(rng.uniform_below(2));
        CHECK_FALSE(contains(build_giraud(mat), k54));
    }
}

TEST_CASE("treating four rows as an edge would create K_5^4") {
    // the reading where a 4-set of rows counts as an edge fails freeness
    // even at m = 4: four rows plus any column span a complete 4-graph
    BinaryMatrix m = sylvester_hadamard(4);
    Hypergraph g = build_giraud(m);
    std::vector<VertexSet> es = g.edges;
    for_each_subset(2 * 4, 4, [&](const std::vector<int>& s) {
        int rows = 0;
        for (int v : s)
            if (v < 4) ++rows;
        if (rows == 4 || rows == 0) es.push_back(VertexSet::of(s));
    });
    Hypergraph variant(4, 8, es);
    CHECK(contains(variant, Hypergraph::complete(5, 4)));
}

TEST_CASE("build_giraud validation") {
    CHECK_THROWS_AS(build_giraud(BinaryMatrix{{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_giraud(BinaryMatrix{{2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_giraud(BinaryMatrix{}), std::invalid_argument);
}

TEST_CASE("build_random_link determinism and freeness") {
    // complete bipartite 2-graph K_{10,10}: triangle-free base
    std::vector<std::vector<int>> es;
    for (int u = 0; u < 10; ++u)
        for (int v = 10; v < 20; ++v) es.push_back({u, v});
    Hypergraph base = Hypergraph::from_vertex_lists(2, 20, es);

    Hypergraph h1 = build_random_link(base, 40, 3, 2, 12345);
    Hypergraph h2 = build_random_link(base, 40, 3, 2, 12345);
    CHECK(h1 == h2);
    Hypergraph h3 = build_random_link(base, 40, 3, 2, 54321);
    CHECK(h1.edges != h3.edges);

    ForbiddenFamily fam(3);
    fam.add(Hypergraph::complete(4, 3));
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Hypergraph h = build_random_link(base, 60, 3, 2, seed);
        CHECK(is_family_free(h, fam));
        CHECK(min_l_degree(h, 2).value > 0);
    }

    CHECK_THROWS_AS(build_random_link(Hypergraph::complete(4, 3), 30, 3, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_random_link(base, 30, 3, 1, 1), std::invalid_argument);
}
