#include "turan/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "turan/errors.hpp"

namespace turan {

namespace {

struct EmbedContext {
    const Hypergraph* host;
    const Hypergraph* pattern;
    std::unordered_set<VertexSet, VertexSetHash> host_edges;
    std::vector<int> order;               // pattern vertices, most-constrained first
    std::vector<std::vector<VertexSet>> check_at; // pattern edges fully placed at step i
    std::vector<long long> host_deg, pat_deg;
    std::vector<int> image;               // pattern vertex -> host vertex or -1
    std::vector<char> used;               // host vertex used
    std::uint64_t hits = 0;
    bool stop_at_first = false;
    bool found = false;

    EmbedContext(const Hypergraph& h, const Hypergraph& f) : host(&h), pattern(&f) {
        for (const VertexSet& e : h.edges) host_edges.insert(e);
        host_deg.assign(h.n, 0);
        for (const VertexSet& e : h.edges)
            for (int v : e.elements()) ++host_deg[v];
        pat_deg.assign(f.n, 0);
        for (const VertexSet& e : f.edges)
            for (int v : e.elements()) ++pat_deg[v];

        // order pattern vertices by adjacency to the already-placed prefix
        std::vector<char> placed(f.n, 0);
        for (int step = 0; step < f.n; ++step) {
            int best = -1;
            long long best_score = -1;
            for (int v = 0; v < f.n; ++v) {
                if (placed[v]) continue;
                long long score = 0;
                for (const VertexSet& e : f.edges) {
                    if (!e.contains(v)) continue;
                    int unplaced = 0;
                    for (int u : e.elements())
                        if (!placed[u] && u != v) ++unplaced;
                    if (unplaced == 0) score += 1000;
                    score += 1;
                }
                score = score * 64 + pat_deg[v];
                if (score > best_score) { best_score = score; best = v; }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        check_at.resize(f.n);
        std::vector<int> pos(f.n);
        for (int i = 0; i < f.n; ++i) pos[order[i]] = i;
        for (const VertexSet& e : f.edges) {
            int last = 0;
            for (int v : e.elements()) last = std::max(last, pos[v]);
            check_at[last].push_back(e);
        }
        image.assign(f.n, -1);
        used.assign(h.n, 0);
    }

    void search(int step) {
        if (found && stop_at_first) return;
        if (step == pattern->n) {
            ++hits;
            found = true;
            return;
        }
        int pv = order[step];
        for (int hv = 0; hv < host->n; ++hv) {
            if (used[hv] || host_deg[hv] < pat_deg[pv]) continue;
            image[pv] = hv;
            used[hv] = 1;
            bool ok = true;
            for (const VertexSet& e : check_at[step]) {
                VertexSet mapped;
                for (int v : e.elements()) mapped.insert(image[v]);
                if (!host_edges.count(mapped)) { ok = false; break; }
            }
            if (ok) search(step + 1);
            used[hv] = 0;
            image[pv] = -1;
            if (found && stop_at_first) return;
        }
    }
};

void check_pattern(const Hypergraph& h, const Hypergraph& f, int max_order) {
    if (h.k != f.k) throw std::invalid_argument("uniformity mismatch");
    if (f.n > max_order)
        throw unsupported_size("pattern has " + std::to_string(f.n) +
                               " vertices, above configured max of " + std::to_string(max_order));
}

} // namespace

bool contains(const Hypergraph& h, const Hypergraph& f, int max_order) {
    check_pattern(h, f, max_order);
    if (f.n > h.n) return false;
    EmbedContext ctx(h, f);
    ctx.stop_at_first = true;
    ctx.search(0);
    return ctx.found;
}

std::uint64_t count_injections(const Hypergraph& h, const Hypergraph& f, int max_order) {
    check_pattern(h, f, max_order);
    if (f.n > h.n) return 0;
    EmbedContext ctx(h, f);
    ctx.search(0);
    return ctx.hits;
}

std::uint64_t automorphism_count(const Hypergraph& f, int max_order) {
    return count_injections(f, f, max_order);
}

std::uint64_t count_copies(const Hypergraph& h, const Hypergraph& f, int max_order) {
    check_pattern(h, f, max_order);
    std::uint64_t aut = automorphism_count(f, max_order);
    return count_injections(h, f, max_order) / aut;
}

Hypergraph canonical_form(const Hypergraph& f, int max_order) {
    if (f.n > max_order)
        throw unsupported_size("canonical_form: " + std::to_string(f.n) +
                               " vertices, above configured max of " + std::to_string(max_order));
    std::vector<int> perm(f.n);
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    std::vector<VertexSet> best;
    do {
        std::vector<VertexSet> relabeled;
        relabeled.reserve(f.edges.size());
        for (const VertexSet& e : f.edges) {
            VertexSet out;
            for (int v : e.elements()) out.insert(perm[v]);
            relabeled.push_back(out);
        }
        std::sort(relabeled.begin(), relabeled.end(), VertexSet::lex_less);
        if (first || std::lexicographical_compare(relabeled.begin(), relabeled.end(),
                                                  best.begin(), best.end(), VertexSet::lex_less)) {
            best = std::move(relabeled);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Hypergraph(f.k, f.n, std::move(best));
}

Hypergraph drop_isolated(const Hypergraph& f) {
    VertexSet covered;
    for (const VertexSet& e : f.edges) covered |= e;
    return induced(f, covered);
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_order) {
    if (a.k != b.k || a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, max_order).edges == canonical_form(b, max_order).edges;
}

} // namespace turan
