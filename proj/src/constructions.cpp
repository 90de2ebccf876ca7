#include "turan/constructions.hpp"

#include <stdexcept>

#include "turan/rng.hpp"
#include "turan/subsets.hpp"

namespace turan {

namespace {

// counts of a k-set over the t parts: E1 shape (< l everywhere) or the E2
// shape (= l in part i, = 1 in the k-l following parts; the pattern uses all
// k vertices, so every other part is automatically empty)
bool b_edge_pattern(const std::vector<int>& cnt, int t, int k, int l) {
    bool all_small = true;
    for (int c : cnt)
        if (c >= l) { all_small = false; break; }
    if (all_small) return true;
    for (int i = 0; i < t; ++i) {
        if (cnt[i] != l) continue;
        bool ok = true;
        for (int j = 1; j <= k - l; ++j)
            if (cnt[(i + j) % t] != 1) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

} // namespace

Hypergraph build_B(int p, int t, int k, int l) {
    if (!(t >= k && k > l && l > 1 && p >= 1))
        throw std::invalid_argument("build_B requires t >= k > l > 1 and p >= 1");
    long long n = static_cast<long long>(t) * p;
    if (n > VertexSet::max_vertices) throw std::invalid_argument("build_B: t*p too large");

    std::vector<VertexSet> edges;
    std::vector<int> cnt(t);
    for_each_subset(static_cast<int>(n), k, [&](const std::vector<int>& s) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int v : s) ++cnt[v / p];
        if (b_edge_pattern(cnt, t, k, l)) edges.push_back(VertexSet::of(s));
    });
    return Hypergraph(k, static_cast<int>(n), std::move(edges));
}

Hypergraph build_layered(int k, int l, int a, int b, int t, int p) {
    if (!(k > l && l > 1 && a > 0 && a + k < b && t >= k && p >= l))
        throw std::invalid_argument(
            "build_layered requires k > l > 1, 0 < a, a+k < b, t >= k, p >= l");
    long long block = static_cast<long long>(t) * p;
    long long n = block * b;
    if (n > VertexSet::max_vertices) throw std::invalid_argument("build_layered: b*t*p too large");

    std::vector<VertexSet> edges;
    std::vector<int> blk(b), part(t);
    for_each_subset(static_cast<int>(n), k, [&](const std::vector<int>& s) {
        std::fill(blk.begin(), blk.end(), 0);
        for (int v : s) ++blk[v / block];

        bool all_small = true;
        for (int c : blk)
            if (c >= l) { all_small = false; break; }
        if (all_small) { edges.push_back(VertexSet::of(s)); return; }

        // one block holding exactly l, the a following blocks under l, others empty
        for (int i0 = 0; i0 < b; ++i0) {
            if (blk[i0] != l) continue;
            bool ok = true;
            for (int i = 0; i < b && ok; ++i) {
                if (i == i0) continue;
                int off = (i - i0 + b) % b;
                if (off >= 1 && off <= a) ok = blk[i] < l;
                else ok = blk[i] == 0;
            }
            if (ok) { edges.push_back(VertexSet::of(s)); return; }
        }

        // within-block copy of B(p,t,k,l)
        for (int j = 0; j < b; ++j) {
            if (blk[j] != k) continue;
            std::fill(part.begin(), part.end(), 0);
            for (int v : s) ++part[(v - j * block) / p];
            if (b_edge_pattern(part, t, k, l)) edges.push_back(VertexSet::of(s));
            return;
        }
    });
    return Hypergraph(k, static_cast<int>(n), std::move(edges));
}

BinaryMatrix sylvester_hadamard(int order) {
    if (order < 1 || order > 32 || (order & (order - 1)) != 0)
        throw std::invalid_argument("sylvester_hadamard: order must be a power of two in 1..32");
    std::vector<std::vector<int>> h = {{1}}; // +-1 entries
    while (static_cast<int>(h.size()) < order) {
        int m = static_cast<int>(h.size());
        std::vector<std::vector<int>> g(2 * m, std::vector<int>(2 * m));
        for (int i = 0; i < 2 * m; ++i)
            for (int j = 0; j < 2 * m; ++j)
                g[i][j] = h[i % m][j % m] * ((i >= m && j >= m) ? -1 : 1);
        h = std::move(g);
    }
    for (auto& row : h)
        for (int& v : row) v = (v == 1) ? 1 : 0;
    return h;
}

Hypergraph build_giraud(const BinaryMatrix& mat) {
    int m = static_cast<int>(mat.size());
    if (m < 1) throw std::invalid_argument("build_giraud: empty matrix");
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("build_giraud: matrix must be square");
        for (int v : row)
            if (v != 0 && v != 1) throw std::invalid_argument("build_giraud: entries must be 0/1");
    }
    if (2 * m > VertexSet::max_vertices) throw std::invalid_argument("build_giraud: matrix too large");

    // vertices: rows 0..m-1, columns m..2m-1
    std::vector<VertexSet> edges;
    for_each_subset(2 * m, 4, [&](const std::vector<int>& s) {
        int rows[4], cols[4], nr = 0, nc = 0;
        for (int v : s) {
            if (v < m) rows[nr++] = v;
            else cols[nc++] = v - m;
        }
        bool edge = false;
        if (nr == 3 || nc == 3) {
            edge = true;
        } else if (nr == 2 && nc == 2) {
            int sum = mat[rows[0]][cols[0]] + mat[rows[0]][cols[1]] +
                      mat[rows[1]][cols[0]] + mat[rows[1]][cols[1]];
            edge = (sum % 2 == 1);
        }
        if (edge) edges.push_back(VertexSet::of(s));
    });
    return Hypergraph(4, 2 * m, std::move(edges));
}

Hypergraph build_random_link(const Hypergraph& base, int n, int k, int l, std::uint64_t seed) {
    if (!(k > l && l >= 2)) throw std::invalid_argument("build_random_link: need k > l >= 2");
    if (base.k != k - l + 1)
        throw std::invalid_argument("build_random_link: base uniformity must be k-l+1");
    if (n < k || n > VertexSet::max_vertices)
        throw std::invalid_argument("build_random_link: need k <= n <= 128");
    if (base.n < 1) throw std::invalid_argument("build_random_link: base has no vertices");

    int m = base.n;
    std::vector<int> color(binom_u64(n, l));
    for_each_subset(n, l, [&](const std::vector<int>& s) {
        SplitMix64 gen(subset_stream_seed(seed, s));
        color[lex_rank(s, n)] = static_cast<int>(gen.uniform_below(m));
    });

    std::vector<VertexSet> edges;
    std::vector<int> lset(l);
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        for (int i = 0; i < l - 1; ++i) lset[i] = s[i];
        VertexSet vals;
        for (int j = 0; j < k - l + 1; ++j) {
            lset[l - 1] = s[l - 1 + j];
            int x = color[lex_rank(lset, n)];
            if (vals.contains(x)) return; // repeated value: not an edge
            vals.insert(x);
        }
        if (base.is_edge(vals)) edges.push_back(VertexSet::of(s));
    });
    return Hypergraph(k, n, std::move(edges));
}

} // namespace turan
