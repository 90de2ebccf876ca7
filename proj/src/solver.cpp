#include "turan/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "turan/errors.hpp"
#include "turan/isomorphism.hpp"
#include "turan/rng.hpp"
#include "turan/subsets.hpp"

namespace turan {

void SolverConfig::validate() const {
    if (time_budget <= 0) throw std::invalid_argument("time budget must be positive");
    if (node_budget <= 0) throw std::invalid_argument("node budget must be positive");
    if (parallel_workers < 1) throw std::invalid_argument("need at least one worker");
    if (restarts < 1) throw std::invalid_argument("need at least one restart");
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::proved_exact: return "proved-exact";
        case SearchStatus::lower_bound_only: return "lower-bound-only";
        case SearchStatus::unsat: return "unsat";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

SearchProblem::SearchProblem(int n_, int k_, int l_, ForbiddenFamily fam)
    : n(n_), k(k_), l(l_), family(std::move(fam)) {
    if (!(0 <= l && l < k && k <= n)) throw std::invalid_argument("need 0 <= l < k <= n");
    if (n > 64) throw std::invalid_argument("solver supports at most 64 vertices");
    if (family.k != k) throw std::invalid_argument("family uniformity mismatch");
    for (const Hypergraph& f : family.members)
        if (f.edge_count() == 0 && f.n <= n)
            throw std::invalid_argument("family member with no edges forbids every graph");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t set_to_u64(VertexSet s) { return s.w0; }

// ---------------------------------------------------------------------------
// shared precomputed tables: edge slots in colex order, l-subset indices per
// slot, anchored embedding patterns for incremental forbidden-copy detection
// ---------------------------------------------------------------------------

struct AnchoredPattern {
    int fn = 0;
    std::vector<int> order;                          // pattern vertices, anchor first
    std::vector<std::vector<std::vector<int>>> checks; // per step: edges (as vertex lists)
};

// covering data for a complete forbidden member K_f^k: freeness demands every
// f-set of the host contain at least one excluded slot
struct CompleteCover {
    int fsize = 0;
    long long fset_count = 0;
    int cover_per_slot = 0;                 // C(n-k, f-k)
    std::vector<std::vector<int>> slot_fsets; // per slot: lex ranks of f-sets containing it
};

struct SlotSystem {
    int n, k, l;
    std::vector<std::uint64_t> slot_mask;      // ascending == colex order on k-sets
    std::vector<std::vector<int>> slot_lsets;  // lex ranks of the l-subsets of each slot
    long long lset_count = 0;
    long long max_degree = 0;                  // C(n-l, k-l)
    std::vector<AnchoredPattern> patterns;
    std::vector<CompleteCover> covers;

    SlotSystem(const SearchProblem& p) : n(p.n), k(p.k), l(p.l) {
        for_each_subset(n, k, [&](const std::vector<int>& s) {
            slot_mask.push_back(set_to_u64(VertexSet::of(s)));
        });
        std::sort(slot_mask.begin(), slot_mask.end());
        lset_count = static_cast<long long>(binom_u64(n, l));
        max_degree = static_cast<long long>(binom_u64(n - l, k - l));

        slot_lsets.resize(slot_mask.size());
        std::vector<int> buf;
        for (std::size_t s = 0; s < slot_mask.size(); ++s) {
            std::vector<int> vs = mask_elements(slot_mask[s]);
            for_each_subset(k, l, [&](const std::vector<int>& pick) {
                buf.clear();
                for (int i : pick) buf.push_back(vs[i]);
                slot_lsets[s].push_back(static_cast<int>(lex_rank(buf, n)));
            });
        }

        for (const Hypergraph& f : p.family.members) {
            for (std::size_t a = 0; a < f.edge_count(); ++a)
                patterns.push_back(make_pattern(f, static_cast<int>(a)));
            if (f.n <= n && f.edge_count() == binom_u64(f.n, k)) covers.push_back(make_cover(f.n));
        }
    }

    CompleteCover make_cover(int fsize) const {
        CompleteCover c;
        c.fsize = fsize;
        c.fset_count = static_cast<long long>(binom_u64(n, fsize));
        c.cover_per_slot = static_cast<int>(binom_u64(n - k, fsize - k));
        c.slot_fsets.resize(slot_mask.size());
        std::vector<int> fs(fsize);
        for (std::size_t s = 0; s < slot_mask.size(); ++s) {
            std::vector<int> vs = mask_elements(slot_mask[s]);
            // extend the slot by every (f-k)-set of the other vertices
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!(slot_mask[s] >> v & 1)) rest.push_back(v);
            for_each_subset(static_cast<int>(rest.size()), fsize - k,
                            [&](const std::vector<int>& pick) {
                                fs.clear();
                                fs.insert(fs.end(), vs.begin(), vs.end());
                                for (int i : pick) fs.push_back(rest[i]);
                                std::sort(fs.begin(), fs.end());
                                c.slot_fsets[s].push_back(static_cast<int>(lex_rank(fs, n)));
                            });
        }
        return c;
    }

    static std::vector<int> mask_elements(std::uint64_t m) {
        std::vector<int> out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    int slot_index(std::uint64_t mask) const {
        auto it = std::lower_bound(slot_mask.begin(), slot_mask.end(), mask);
        if (it == slot_mask.end() || *it != mask) return -1;
        return static_cast<int>(it - slot_mask.begin());
    }

    AnchoredPattern make_pattern(const Hypergraph& f, int anchor) const {
        AnchoredPattern pat;
        pat.fn = f.n;
        std::vector<std::vector<int>> fedges;
        for (const VertexSet& e : f.edges) fedges.push_back(e.elements());

        std::vector<char> placed(f.n, 0);
        for (int v : fedges[anchor]) {
            pat.order.push_back(v);
            placed[v] = 1;
        }
        while (static_cast<int>(pat.order.size()) < f.n) {
            int best = -1, best_adj = -1;
            for (int v = 0; v < f.n; ++v) {
                if (placed[v]) continue;
                int adj = 0;
                for (const auto& e : fedges) {
                    bool has_v = false;
                    int unplaced = 0;
                    for (int u : e) {
                        if (u == v) has_v = true;
                        else if (!placed[u]) ++unplaced;
                    }
                    if (has_v && unplaced == 0) ++adj;
                }
                if (adj > best_adj) { best_adj = adj; best = v; }
            }
            placed[best] = 1;
            pat.order.push_back(best);
        }

        std::vector<int> pos(f.n);
        for (int i = 0; i < f.n; ++i) pos[pat.order[i]] = i;
        pat.checks.resize(f.n);
        for (std::size_t ei = 0; ei < fedges.size(); ++ei) {
            if (static_cast<int>(ei) == anchor) continue; // anchor maps onto the new edge
            int last = 0;
            for (int v : fedges[ei]) last = std::max(last, pos[v]);
            pat.checks[last].push_back(fedges[ei]);
        }
        return pat;
    }
};

// edge membership view over included-slot flags
struct EdgePresence {
    const SlotSystem* sys;
    const std::vector<char>* included;

    bool has(std::uint64_t mask) const {
        int idx = sys->slot_index(mask);
        return idx >= 0 && (*included)[idx];
    }
};

// would including `slot` complete a copy of some family member? When
// `copy_slots` is given, the slots carrying the other edges of one such copy
// are written there.
bool creates_copy(const SlotSystem& sys, const EdgePresence& present, int slot,
                  std::vector<int>* copy_slots = nullptr) {
    std::uint64_t emask = sys.slot_mask[slot];
    std::vector<int> everts = SlotSystem::mask_elements(emask);

    for (const AnchoredPattern& pat : sys.patterns) {
        if (pat.fn > sys.n) continue;
        std::vector<int> image(pat.fn, -1);
        std::uint64_t used = 0;

        auto dfs = [&](auto&& self, int step) -> bool {
            if (step == pat.fn) return true;
            int pv = pat.order[step];
            bool anchor_step = step < sys.k;
            int cand_count = anchor_step ? sys.k : sys.n;
            for (int ci = 0; ci < cand_count; ++ci) {
                int hv = anchor_step ? everts[ci] : ci;
                if (used >> hv & 1) continue;
                image[pv] = hv;
                used |= 1ull << hv;
                bool ok = true;
                for (const auto& fe : pat.checks[step]) {
                    std::uint64_t m = 0;
                    for (int v : fe) m |= 1ull << image[v];
                    if (!present.has(m)) { ok = false; break; }
                }
                if (ok && self(self, step + 1)) return true;
                used &= ~(1ull << hv);
                image[pv] = -1;
            }
            return false;
        };
        if (dfs(dfs, 0)) {
            if (copy_slots) {
                copy_slots->clear();
                for (const auto& step_edges : pat.checks)
                    for (const auto& fe : step_edges) {
                        std::uint64_t m = 0;
                        for (int v : fe) m |= 1ull << image[v];
                        copy_slots->push_back(sys.slot_index(m));
                    }
            }
            return true;
        }
    }
    return false;
}

Hypergraph graph_from_slots(const SlotSystem& sys, const std::vector<char>& included) {
    std::vector<VertexSet> es;
    for (std::size_t s = 0; s < sys.slot_mask.size(); ++s)
        if (included[s]) {
            VertexSet e;
            for (int v : SlotSystem::mask_elements(sys.slot_mask[s])) e.insert(v);
            es.push_back(e);
        }
    return Hypergraph(sys.k, sys.n, std::move(es));
}

// ---------------------------------------------------------------------------
// decision search
// ---------------------------------------------------------------------------

constexpr char kUndecided = -1, kIn = 0, kOut = 1;

struct SymmetryBreaker {
    const SlotSystem* sys;
    std::vector<std::vector<int>> perm; // generator x slot -> image slot
    std::vector<int> pos;               // walk front per generator
    std::vector<char> cleared;          // generator dominated below this subtree

    struct TrailEntry { int gen, old_pos; char old_cleared; };
    std::vector<std::vector<TrailEntry>> trail;

    SymmetryBreaker(const SlotSystem& s) : sys(&s) {
        int n = s.n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::vector<int> p(s.slot_mask.size());
                for (std::size_t i = 0; i < s.slot_mask.size(); ++i) {
                    std::uint64_t m = s.slot_mask[i];
                    bool bu = m >> u & 1, bv = m >> v & 1;
                    std::uint64_t t = m;
                    if (bu != bv) t ^= (1ull << u) | (1ull << v);
                    p[i] = s.slot_index(t);
                }
                perm.push_back(std::move(p));
            }
        pos.assign(perm.size(), 0);
        cleared.assign(perm.size(), 0);
        trail.resize(s.slot_mask.size() + 1);
    }

    // advance walks after slot `p` was decided; false -> prefix not canonical.
    // Decisions happen in slot order, so positions 0..p are exactly the
    // decided ones. A rejection restores its own trail before returning.
    bool accept(const std::vector<char>& assign, int p) {
        trail[p].clear();
        for (std::size_t g = 0; g < perm.size(); ++g) {
            if (cleared[g]) continue;
            int start = pos[g];
            int i = start;
            char verdict = 0; // 0 stalled/equal, 1 dominated (sigma x > x), 2 reject
            while (i <= p) {
                char a = assign[i];
                int j = perm[g][i];
                char b = (j <= p) ? assign[j] : kUndecided;
                if (b == kUndecided) break;
                if (b < a) { verdict = 2; break; }
                if (b > a) { verdict = 1; break; }
                ++i;
            }
            if (verdict == 2) {
                undo(p);
                return false;
            }
            if (i != start || verdict == 1) {
                trail[p].push_back({static_cast<int>(g), start, cleared[g]});
                pos[g] = i;
                if (verdict == 1) cleared[g] = 1;
            }
        }
        return true;
    }

    void undo(int p) {
        for (auto it = trail[p].rbegin(); it != trail[p].rend(); ++it) {
            pos[it->gen] = it->old_pos;
            cleared[it->gen] = it->old_cleared;
        }
        trail[p].clear();
    }
};

struct DecisionSearch {
    const SlotSystem& sys;
    long long d;
    bool use_symmetry;
    long long node_budget;
    Clock::time_point deadline;
    // parallel mode: abandon this task once an earlier prefix has a witness
    const std::atomic<long long>* abort_above = nullptr;
    long long my_index = 0;

    std::vector<char> assign;
    std::vector<char> included;
    std::vector<int> inc_deg, undec;
    // covering state per complete member, and the shared exclusion capacity
    std::vector<std::vector<int>> cover_excl;
    std::vector<long long> cover_open;
    long long capacity = 0;
    std::unique_ptr<SymmetryBreaker> sym;
    long long nodes = 0;
    bool exhausted = false;
    std::vector<char> sat_included;

    DecisionSearch(const SlotSystem& s, long long d_, const SolverConfig& cfg,
                   Clock::time_point deadline_)
        : sys(s), d(d_), use_symmetry(cfg.symmetry_breaking), node_budget(cfg.node_budget),
          deadline(deadline_) {
        assign.assign(sys.slot_mask.size(), kUndecided);
        included.assign(sys.slot_mask.size(), 0);
        inc_deg.assign(sys.lset_count, 0);
        undec.assign(sys.lset_count, static_cast<int>(sys.max_degree));
        for (const CompleteCover& c : sys.covers) {
            cover_excl.emplace_back(c.fset_count, 0);
            cover_open.push_back(c.fset_count);
        }
        capacity = sys.lset_count * (sys.max_degree - d);
        if (use_symmetry) sym = std::make_unique<SymmetryBreaker>(sys);
    }

    bool over_budget() {
        if (nodes >= node_budget) return true;
        if ((nodes & 0x1fff) == 0 && Clock::now() > deadline) return true;
        if (abort_above && (nodes & 0xff) == 0 &&
            my_index > abort_above->load(std::memory_order_relaxed))
            return true;
        return false;
    }

    // exclusion bookkeeping for the covering bound; returns false when some
    // complete member can no longer be excluded from every f-set
    bool apply_exclude_covers(int p) {
        capacity -= static_cast<long long>(sys.slot_lsets[p].size());
        bool ok = true;
        for (std::size_t c = 0; c < sys.covers.size(); ++c)
            for (int r : sys.covers[c].slot_fsets[p])
                if (cover_excl[c][r]++ == 0) --cover_open[c];
        long long future = capacity / static_cast<long long>(binom_u64(sys.k, sys.l));
        for (std::size_t c = 0; c < sys.covers.size(); ++c)
            if (cover_open[c] > future * sys.covers[c].cover_per_slot) ok = false;
        return ok;
    }

    void undo_exclude_covers(int p) {
        capacity += static_cast<long long>(sys.slot_lsets[p].size());
        for (std::size_t c = 0; c < sys.covers.size(); ++c)
            for (int r : sys.covers[c].slot_fsets[p])
                if (--cover_excl[c][r] == 0) ++cover_open[c];
    }

    // returns true when a witness was found
    bool dfs(int p) {
        ++nodes;
        if (over_budget()) { exhausted = true; return false; }
        if (p == static_cast<int>(sys.slot_mask.size())) {
            for (long long t = 0; t < sys.lset_count; ++t)
                if (inc_deg[t] < d) return false;
            sat_included = included;
            return true;
        }

        // include first: witnesses are cheap, refutations need the whole tree
        EdgePresence pres{&sys, &included};
        if (!creates_copy(sys, pres, p)) {
            assign[p] = kIn;
            included[p] = 1;
            for (int t : sys.slot_lsets[p]) ++inc_deg[t];
            bool sym_ok = !use_symmetry || sym->accept(assign, p);
            if (sym_ok) {
                if (dfs(p + 1)) return true;
                if (use_symmetry) sym->undo(p);
            }
            for (int t : sys.slot_lsets[p]) --inc_deg[t];
            included[p] = 0;
            assign[p] = kUndecided;
            if (exhausted) return false;
        }

        assign[p] = kOut;
        bool feasible = true;
        for (int t : sys.slot_lsets[p]) {
            --undec[t];
            if (inc_deg[t] + undec[t] < d) feasible = false;
        }
        bool covers_ok = apply_exclude_covers(p);
        feasible = feasible && covers_ok;
        if (feasible) {
            bool sym_ok = !use_symmetry || sym->accept(assign, p);
            if (sym_ok) {
                if (dfs(p + 1)) return true;
                if (use_symmetry) sym->undo(p);
            }
        }
        undo_exclude_covers(p);
        for (int t : sys.slot_lsets[p]) ++undec[t];
        assign[p] = kUndecided;
        return false;
    }

    // replay a fixed decision prefix (used by parallel workers); false if the
    // prefix is infeasible under this search's own pruning
    bool replay(const std::vector<char>& prefix) {
        for (std::size_t p = 0; p < prefix.size(); ++p) {
            if (prefix[p] == kIn) {
                EdgePresence pres{&sys, &included};
                if (creates_copy(sys, pres, static_cast<int>(p))) return false;
                assign[p] = kIn;
                included[p] = 1;
                for (int t : sys.slot_lsets[p]) ++inc_deg[t];
            } else {
                assign[p] = kOut;
                bool ok = true;
                for (int t : sys.slot_lsets[p]) {
                    --undec[t];
                    if (inc_deg[t] + undec[t] < d) ok = false;
                }
                if (!apply_exclude_covers(static_cast<int>(p)) || !ok) return false;
            }
            if (use_symmetry && !sym->accept(assign, static_cast<int>(p))) return false;
        }
        return true;
    }
};

void verify_witness(const SearchProblem& p, const Hypergraph& w, long long claimed) {
    if (!is_family_free(w, p.family))
        throw std::logic_error("internal error: witness fails family-freeness re-verification");
    if (min_l_degree(w, p.l).value < claimed)
        throw std::logic_error("internal error: witness fails degree re-verification");
}

SearchResult run_decision_sequential(const SearchProblem& p, const SlotSystem& sys, long long d,
                                     const SolverConfig& cfg, Clock::time_point deadline) {
    DecisionSearch search(sys, d, cfg, deadline);
    auto t0 = Clock::now();
    bool sat = search.dfs(0);
    SearchResult res;
    res.nodes = search.nodes;
    res.wall_seconds = seconds_since(t0);
    if (sat) {
        Hypergraph w = graph_from_slots(sys, search.sat_included);
        long long val = min_l_degree(w, p.l).value;
        verify_witness(p, w, d);
        res.value_lo = val;
        res.value_hi = sys.max_degree;
        res.witness = std::move(w);
        res.status = SearchStatus::lower_bound_only;
    } else if (search.exhausted) {
        res.value_lo = 0;
        res.value_hi = sys.max_degree;
        res.status = SearchStatus::budget_exhausted;
    } else {
        res.value_lo = 0;
        res.value_hi = d - 1;
        res.status = SearchStatus::unsat;
    }
    return res;
}

// enumerate feasible decision prefixes of a fixed depth, in search order
void enumerate_prefixes(DecisionSearch& s, int depth, int p, std::vector<std::vector<char>>& out) {
    if (p == depth || p == static_cast<int>(s.sys.slot_mask.size())) {
        out.emplace_back(s.assign.begin(), s.assign.begin() + p);
        return;
    }
    EdgePresence pres{&s.sys, &s.included};
    if (!creates_copy(s.sys, pres, p)) {
        s.assign[p] = kIn;
        s.included[p] = 1;
        for (int t : s.sys.slot_lsets[p]) ++s.inc_deg[t];
        bool ok = !s.use_symmetry || s.sym->accept(s.assign, p);
        if (ok) {
            enumerate_prefixes(s, depth, p + 1, out);
            if (s.use_symmetry) s.sym->undo(p);
        }
        for (int t : s.sys.slot_lsets[p]) --s.inc_deg[t];
        s.included[p] = 0;
        s.assign[p] = kUndecided;
    }
    s.assign[p] = kOut;
    bool feasible = true;
    for (int t : s.sys.slot_lsets[p]) {
        --s.undec[t];
        if (s.inc_deg[t] + s.undec[t] < s.d) feasible = false;
    }
    if (!s.apply_exclude_covers(p)) feasible = false;
    if (feasible) {
        bool ok = !s.use_symmetry || s.sym->accept(s.assign, p);
        if (ok) {
            enumerate_prefixes(s, depth, p + 1, out);
            if (s.use_symmetry) s.sym->undo(p);
        }
    }
    s.undo_exclude_covers(p);
    for (int t : s.sys.slot_lsets[p]) ++s.undec[t];
    s.assign[p] = kUndecided;
}

SearchResult run_decision_parallel(const SearchProblem& p, const SlotSystem& sys, long long d,
                                   const SolverConfig& cfg, Clock::time_point deadline) {
    auto t0 = Clock::now();
    int split_depth = std::min<int>(static_cast<int>(sys.slot_mask.size()),
                                    std::max(8, 2 * cfg.parallel_workers));
    std::vector<std::vector<char>> prefixes;
    {
        DecisionSearch enumerator(sys, d, cfg, deadline);
        enumerate_prefixes(enumerator, split_depth, 0, prefixes);
    }

    enum class Outcome : char { pending, unsat, sat, aborted };
    std::vector<Outcome> outcome(prefixes.size(), Outcome::pending);
    std::vector<std::vector<char>> sat_graph(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long long> first_sat{static_cast<long long>(prefixes.size())};
    std::atomic<long long> total_nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::mutex mu;

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            // work beyond the earliest witness in search order is irrelevant
            if (static_cast<long long>(i) > first_sat.load()) {
                outcome[i] = Outcome::aborted;
                continue;
            }
            DecisionSearch s(sys, d, cfg, deadline);
            s.abort_above = &first_sat;
            s.my_index = static_cast<long long>(i);
            if (!s.replay(prefixes[i])) {
                outcome[i] = Outcome::unsat;
                continue;
            }
            bool sat = s.dfs(static_cast<int>(prefixes[i].size()));
            total_nodes += s.nodes;
            if (s.exhausted) {
                out_of_budget = true;
                outcome[i] = Outcome::aborted;
                continue;
            }
            if (sat) {
                std::lock_guard<std::mutex> lock(mu);
                sat_graph[i] = s.sat_included;
                outcome[i] = Outcome::sat;
                long long cur = first_sat.load();
                while (static_cast<long long>(i) < cur &&
                       !first_sat.compare_exchange_weak(cur, static_cast<long long>(i))) {}
            } else {
                outcome[i] = Outcome::unsat;
            }
        }
    };

    std::vector<std::thread> threads;
    for (int w = 0; w < cfg.parallel_workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    SearchResult res;
    res.nodes = total_nodes.load();
    res.wall_seconds = seconds_since(t0);
    // merge in search order: the first witness whose predecessors all resolved
    // unsat reproduces the sequential answer; any witness still decides SAT
    long long sat_idx = -1;
    bool unresolved = false;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (outcome[i] == Outcome::sat) { sat_idx = static_cast<long long>(i); break; }
        if (outcome[i] != Outcome::unsat) unresolved = true;
    }
    if (sat_idx >= 0) {
        Hypergraph w = graph_from_slots(sys, sat_graph[sat_idx]);
        long long val = min_l_degree(w, p.l).value;
        verify_witness(p, w, d);
        res.value_lo = val;
        res.value_hi = sys.max_degree;
        res.witness = std::move(w);
        res.status = SearchStatus::lower_bound_only;
        return res;
    }
    if (unresolved || out_of_budget) {
        res.status = SearchStatus::budget_exhausted;
        res.value_lo = 0;
        res.value_hi = sys.max_degree;
        return res;
    }
    res.value_lo = 0;
    res.value_hi = d - 1;
    res.status = SearchStatus::unsat;
    return res;
}

} // namespace

SearchResult exists_with_min_degree(const SearchProblem& p, long long d, const SolverConfig& cfg) {
    cfg.validate();
    if (d < 0) throw std::invalid_argument("decision threshold d must be >= 0");
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget));
    SlotSystem sys(p);

    SearchResult res;
    if (d > sys.max_degree) { // no graph can reach d completions of any l-set
        res.value_lo = 0;
        res.value_hi = d - 1;
        res.status = SearchStatus::unsat;
        res.wall_seconds = seconds_since(t0);
        return res;
    }
    if (cfg.parallel_workers > 1) return run_decision_parallel(p, sys, d, cfg, deadline);
    return run_decision_sequential(p, sys, d, cfg, deadline);
}

// ---------------------------------------------------------------------------
// oracle: full enumeration over all 2^C(n,k) graphs (lexicographic slot
// order, distinct from the branch-and-bound path) with containment pruning
// ---------------------------------------------------------------------------

namespace {

struct OracleSearch {
    const SearchProblem& p;
    std::vector<VertexSet> slots; // lex order
    std::vector<std::vector<int>> slot_lsets;
    std::vector<long long> deg;
    std::vector<char> included;
    long long best = -1;
    std::vector<VertexSet> best_edges;
    std::vector<VertexSet> current;
    long long nodes = 0;

    OracleSearch(const SearchProblem& pr) : p(pr) {
        for_each_subset(p.n, p.k, [&](const std::vector<int>& s) {
            slots.push_back(VertexSet::of(s));
        });
        std::sort(slots.begin(), slots.end(), VertexSet::lex_less);
        slot_lsets.resize(slots.size());
        std::vector<int> buf;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            std::vector<int> vs = slots[s].elements();
            for_each_subset(p.k, p.l, [&](const std::vector<int>& pick) {
                buf.clear();
                for (int i : pick) buf.push_back(vs[i]);
                slot_lsets[s].push_back(static_cast<int>(lex_rank(buf, p.n)));
            });
        }
        deg.assign(binom_u64(p.n, p.l), 0);
        included.assign(slots.size(), 0);
    }

    void leaf() {
        long long v = p.l == 0 ? static_cast<long long>(current.size())
                               : *std::min_element(deg.begin(), deg.end());
        if (v < best) return;
        std::vector<VertexSet> edges = current;
        std::sort(edges.begin(), edges.end(), VertexSet::lex_less);
        if (v > best ||
            std::lexicographical_compare(edges.begin(), edges.end(), best_edges.begin(),
                                         best_edges.end(), VertexSet::lex_less)) {
            best = v;
            best_edges = std::move(edges);
        }
    }

    void dfs(std::size_t s) {
        ++nodes;
        if (s == slots.size()) { leaf(); return; }
        // include, unless it completes a forbidden copy
        current.push_back(slots[s]);
        Hypergraph h(p.k, p.n, current);
        if (is_family_free(h, p.family)) {
            included[s] = 1;
            if (p.l > 0)
                for (int t : slot_lsets[s]) ++deg[t];
            dfs(s + 1);
            if (p.l > 0)
                for (int t : slot_lsets[s]) --deg[t];
            included[s] = 0;
        }
        current.pop_back();
        dfs(s + 1);
    }
};

} // namespace

SearchResult oracle_ex(const SearchProblem& p) {
    if (binom_u64(p.n, p.k) > 24)
        throw unsupported_size("oracle_ex: C(n,k) > 24 edge slots; use exact_ex");
    auto t0 = Clock::now();
    OracleSearch search(p);
    search.dfs(0);

    SearchResult res;
    Hypergraph w(p.k, p.n, search.best_edges);
    verify_witness(p, w, search.best);
    res.value_lo = res.value_hi = search.best;
    res.witness = std::move(w);
    res.status = SearchStatus::proved_exact;
    res.nodes = search.nodes;
    res.wall_seconds = seconds_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// heuristic lower bound: greedy fill plus simulated annealing
// ---------------------------------------------------------------------------

namespace {

struct AnnealState {
    const SlotSystem& sys;
    std::vector<char> included;
    std::vector<int> deg;
    std::vector<long long> hist; // deg value -> number of l-sets
    long long cur_min = 0;

    AnnealState(const SlotSystem& s) : sys(s) {
        included.assign(sys.slot_mask.size(), 0);
        deg.assign(sys.lset_count, 0);
        hist.assign(sys.max_degree + 2, 0);
        hist[0] = sys.lset_count;
        cur_min = 0;
    }

    void add(int slot) {
        included[slot] = 1;
        for (int t : sys.slot_lsets[slot]) {
            --hist[deg[t]];
            ++deg[t];
            ++hist[deg[t]];
        }
        while (hist[cur_min] == 0) ++cur_min;
    }

    void remove(int slot) {
        included[slot] = 0;
        for (int t : sys.slot_lsets[slot]) {
            --hist[deg[t]];
            --deg[t];
            ++hist[deg[t]];
            if (deg[t] < cur_min) cur_min = deg[t];
        }
    }

    // lexicographic objective (minimum degree, minus count at the minimum)
    std::pair<long long, long long> score() const { return {cur_min, -hist[cur_min]}; }

    double scalar_score() const {
        return static_cast<double>(cur_min) -
               static_cast<double>(hist[cur_min]) / static_cast<double>(sys.lset_count + 1);
    }
};

} // namespace

SearchResult heuristic_lower_bound(const SearchProblem& p, const SolverConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget));
    SlotSystem sys(p);
    int slot_count = static_cast<int>(sys.slot_mask.size());

    std::pair<long long, long long> best_score{-1, 0};
    std::vector<char> best_included(sys.slot_mask.size(), 0);
    std::vector<VertexSet> best_edges;

    // l-sets per rank, to pick completions of a minimum-degree l-set
    std::vector<std::vector<int>> lset_slots(sys.lset_count);
    for (int s = 0; s < slot_count; ++s)
        for (int t : sys.slot_lsets[s]) lset_slots[t].push_back(s);

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        if (Clock::now() > deadline) break;
        SplitMix64 rng(mix_u64(cfg.seed, static_cast<std::uint64_t>(restart)));
        AnnealState st(sys);
        EdgePresence pres{&sys, &st.included};

        auto legal = [&](int slot) {
            return !st.included[slot] && !creates_copy(sys, pres, slot);
        };

        // greedy fill: keep completing a minimum-degree l-set while possible
        {
            bool progress = true;
            while (progress) {
                progress = false;
                for (int attempt = 0; attempt < 8 && !progress; ++attempt) {
                    long long start = static_cast<long long>(rng.uniform_below(sys.lset_count));
                    for (long long off = 0; off < sys.lset_count; ++off) {
                        long long t = (start + off) % sys.lset_count;
                        if (st.deg[t] != st.cur_min) continue;
                        std::vector<int> cands;
                        for (int s : lset_slots[t])
                            if (legal(s)) cands.push_back(s);
                        if (cands.empty()) continue;
                        st.add(cands[rng.uniform_below(cands.size())]);
                        progress = true;
                        break;
                    }
                }
            }
        }

        auto consider_best = [&]() {
            auto sc = st.score();
            if (sc > best_score) {
                best_score = sc;
                best_included = st.included;
            }
        };
        consider_best();

        // a random minimum-degree l-set, then a random candidate slot over it
        auto pick_min_lset = [&]() {
            long long start = static_cast<long long>(rng.uniform_below(sys.lset_count));
            for (long long off = 0; off < sys.lset_count; ++off) {
                long long t = (start + off) % sys.lset_count;
                if (st.deg[t] == st.cur_min) return t;
            }
            return start;
        };

        // annealing over targeted adds, unblocking swaps, random swaps, removes
        long long iters = 24000LL * std::max(1, slot_count / 8);
        double temp = 1.0;
        double cool = std::pow(0.02 / temp, 1.0 / static_cast<double>(iters));
        std::vector<int> blockers;
        for (long long it = 0; it < iters; ++it) {
            if ((it & 0xfff) == 0 && Clock::now() > deadline) break;
            temp *= cool;
            double before = st.scalar_score();
            std::uint64_t roll = rng.uniform_below(100);

            if (roll < 40) { // legal add at a minimum l-set
                long long t = pick_min_lset();
                std::vector<int> cands;
                for (int s : lset_slots[t])
                    if (legal(s)) cands.push_back(s);
                if (cands.empty()) continue;
                int slot = cands[rng.uniform_below(cands.size())];
                st.add(slot);
                double delta = st.scalar_score() - before;
                if (delta < 0 && rng.uniform01() >= std::exp(delta / temp)) st.remove(slot);
                else consider_best();
            } else if (roll < 75) { // unblock a blocked completion of a minimum l-set
                long long t = pick_min_lset();
                std::vector<int> blocked;
                for (int s : lset_slots[t])
                    if (!st.included[s]) blocked.push_back(s);
                if (blocked.empty()) continue;
                int slot = blocked[rng.uniform_below(blocked.size())];
                int out_slot = -1;
                if (creates_copy(sys, pres, slot, &blockers)) {
                    out_slot = blockers[rng.uniform_below(blockers.size())];
                    st.remove(out_slot);
                    if (creates_copy(sys, pres, slot)) {
                        // still blocked by another copy: keep only the removal
                        double delta = st.scalar_score() - before;
                        if (delta < 0 && rng.uniform01() >= std::exp(delta / temp))
                            st.add(out_slot);
                        continue;
                    }
                }
                st.add(slot);
                double delta = st.scalar_score() - before;
                if (delta < 0 && rng.uniform01() >= std::exp(delta / temp)) {
                    st.remove(slot);
                    if (out_slot >= 0) st.add(out_slot);
                } else {
                    consider_best();
                }
            } else if (roll < 90) { // random swap
                std::vector<int> ins;
                for (int s = 0; s < slot_count; ++s)
                    if (st.included[s]) ins.push_back(s);
                if (ins.empty()) continue;
                int out_slot = ins[rng.uniform_below(ins.size())];
                st.remove(out_slot);
                int in_slot = -1;
                for (int tries = 0; tries < 64 && in_slot < 0; ++tries) {
                    int s = static_cast<int>(rng.uniform_below(slot_count));
                    if (s != out_slot && legal(s)) in_slot = s;
                }
                if (in_slot < 0) {
                    st.add(out_slot);
                    continue;
                }
                st.add(in_slot);
                double delta = st.scalar_score() - before;
                if (delta < 0 && rng.uniform01() >= std::exp(delta / temp)) {
                    st.remove(in_slot);
                    st.add(out_slot);
                } else {
                    consider_best();
                }
            } else { // random remove
                std::vector<int> ins;
                for (int s = 0; s < slot_count; ++s)
                    if (st.included[s]) ins.push_back(s);
                if (ins.empty()) continue;
                int out_slot = ins[rng.uniform_below(ins.size())];
                st.remove(out_slot);
                double delta = st.scalar_score() - before;
                if (delta < 0 && rng.uniform01() >= std::exp(delta / temp)) st.add(out_slot);
            }
        }
    }

    Hypergraph w = graph_from_slots(sys, best_included);
    long long val = min_l_degree(w, p.l).value;
    verify_witness(p, w, val);

    SearchResult res;
    res.value_lo = val;
    res.value_hi = sys.max_degree;
    res.witness = std::move(w);
    res.status = SearchStatus::lower_bound_only;
    res.wall_seconds = seconds_since(t0);
    return res;
}

SearchResult exact_ex(const SearchProblem& p, const SolverConfig& cfg) {
    cfg.validate();
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget));

    SolverConfig hcfg = cfg;
    hcfg.time_budget = std::max(0.05, cfg.time_budget * 0.25);
    SearchResult best = heuristic_lower_bound(p, hcfg);
    long long lo = best.value_lo;
    long long nodes = 0;

    // ascend from the heuristic bound; only the final refutation is expensive
    while (true) {
        double remaining = std::chrono::duration<double>(deadline - Clock::now()).count();
        if (remaining <= 0) {
            best.value_lo = lo;
            best.value_hi = static_cast<long long>(binom_u64(p.n - p.l, p.k - p.l));
            best.status = SearchStatus::budget_exhausted;
            best.nodes = nodes;
            best.wall_seconds = seconds_since(t0);
            return best;
        }
        SolverConfig dcfg = cfg;
        dcfg.time_budget = remaining;
        SearchResult dec = exists_with_min_degree(p, lo + 1, dcfg);
        nodes += dec.nodes;
        if (dec.status == SearchStatus::unsat) {
            best.value_lo = best.value_hi = lo;
            best.status = SearchStatus::proved_exact;
            best.nodes = nodes;
            best.wall_seconds = seconds_since(t0);
            return best;
        }
        if (dec.status == SearchStatus::budget_exhausted) {
            best.value_lo = lo;
            best.value_hi = static_cast<long long>(binom_u64(p.n - p.l, p.k - p.l));
            best.status = SearchStatus::budget_exhausted;
            best.nodes = nodes;
            best.wall_seconds = seconds_since(t0);
            return best;
        }
        // found a better witness
        best.witness = dec.witness;
        lo = std::max(lo + 1, dec.value_lo);
    }
}

} // namespace turan
