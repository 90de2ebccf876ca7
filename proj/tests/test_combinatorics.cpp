#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "turan/errors.hpp"
#include "turan/exactmath.hpp"
#include "turan/hypergraph.hpp"
#include "turan/subsets.hpp"

using namespace turan;

namespace {

// brute-force oracle: choose k-l labeled elements from parts of the given
// sizes, at most l-1 per part, by enumerating subsets of the disjoint union
BigInt f_oracle(const std::vector<long>& ns, int k, int l) {
    int total = 0;
    std::vector<int> part_of;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (long j = 0; j < ns[i]; ++j) part_of.push_back(static_cast<int>(i)), ++total;
    long count = 0;
    for_each_subset(total, k - l, [&](const std::vector<int>& pick) {
        std::vector<int> per(ns.size(), 0);
        for (int x : pick) ++per[part_of[x]];
        for (int c : per)
            if (c > l - 1) return;
        ++count;
    });
    return BigInt(count);
}

void enumerate_part_vectors(int max_total, int max_parts,
                            const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!cur.empty()) visit(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (long v = 1; v <= remaining; ++v) {
            cur.push_back(v);
            self(self, remaining - static_cast<int>(v));
            cur.pop_back();
        }
    };
    rec(rec, max_total);
}

} // namespace

TEST_CASE("f_multi small closed forms") {
    CHECK(f_multi({7, 9}, 4, 2) == 63);        // only the (1,1) tuple
    CHECK(f_multi({7, 9}, 3, 2) == 16);        // (1,0) and (0,1)
    CHECK(f_multi({4, 4}, 5, 3) == 28);        // 6 + 16 + 6
    CHECK(f_multi({}, 4, 2) == 0);             // no parts, k-l > 0
    CHECK(f_multi({0, 5}, 3, 2) == 5);
    CHECK_THROWS_AS(f_multi({3, 3}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(f_multi({-1}, 3, 2), std::invalid_argument);
}

TEST_CASE("f_multi equals the brute-force selection count") {
    const int grid[4][2] = {{3, 2}, {4, 2}, {4, 3}, {5, 3}};
    for (auto [k, l] : grid) {
        enumerate_part_vectors(12, 4, [&, k = k, l = l](const std::vector<long>& ns) {
            CHECK(f_multi(ns, k, l) == f_oracle(ns, k, l));
        });
        // zero-size parts contribute a single empty choice each
        CHECK(f_multi({3, 0, 3}, k, l) == f_multi({3, 3}, k, l));
    }
}

TEST_CASE("f_uniform") {
    CHECK(f_uniform(6, 1, 3, 2) == 6);
    CHECK(f_uniform(4, 2, 5, 3) == 28);
    for (int n0 : {2, 5, 9})
        for (int a : {1, 2, 3})
            CHECK(f_uniform(n0, a, 4, 2) <= binom_big(a * n0, 2));
}

TEST_CASE("finite chain bounds on f_uniform") {
    // f(n'/b; a) >= C(a n'/b, k-l) - (a/b)^(k-l) a^-(l-1) C(k-l, l) C(n', k-l)
    // and f(n'/b; a) <= C(a n'/b, k-l), in exact rational arithmetic
    auto rat_pow = [](Rational base, int e) {
        Rational out(1);
        for (int i = 0; i < e; ++i) out *= base;
        return out;
    };
    const int grid[4][2] = {{3, 2}, {4, 2}, {4, 3}, {5, 3}};
    const int ratios[3][2] = {{1, 2}, {2, 5}, {3, 4}};
    for (auto [k, l] : grid)
        for (auto [a, b] : ratios)
            for (long np = b; np <= 120; np += b) {
                long n0 = np / b;
                Rational f(f_uniform(n0, a, k, l));
                Rational upper(binom_big(a * n0, k - l));
                CHECK(f <= upper);
                Rational term = rat_pow(Rational(a, b), k - l) / rat_pow(Rational(a), l - 1) *
                                Rational(binom_big(k - l, l)) * Rational(binom_big(np, k - l));
                CHECK(f >= upper - term);
            }
}

TEST_CASE("jump_parameters at (3,2)") {
    JumpParams p = jump_parameters(3, 2, Rational(1, 10));
    // epsilon0 = delta / (1 + (4(k-l)^2)^(k-l)) = (1/10) / 5
    CHECK(p.epsilon0_pow == Rational(1, 50));
    CHECK(p.t == 50);
    CHECK(p.m0 == 100);
    CHECK(p.epsilon0 == doctest::Approx(0.02));
}

TEST_CASE("jump_parameters bounds and monotonicity") {
    // strictly increasing in delta at fixed (k,l)
    Rational prev(0);
    for (int i = 1; i <= 9; ++i) {
        JumpParams p = jump_parameters(3, 2, Rational(i, 10));
        CHECK(p.epsilon0_pow > prev);
        prev = p.epsilon0_pow;
        CHECK(p.t >= 3);
    }
    for (auto [k, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
        JumpParams p = jump_parameters(k, l, Rational(1, 100));
        CHECK(p.t >= k);
        CHECK(p.m0 == static_cast<long>(l) * p.t);
    }
    CHECK_THROWS_AS(jump_parameters(3, 2, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(jump_parameters(3, 2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(jump_parameters(3, 1, Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("layered_parameters") {
    JumpParams p = layered_parameters(3, 2, Rational(1, 10), Rational(1, 5));
    CHECK(p.a == 1);
    CHECK(p.b == 5);
    CHECK(p.epsilon == p.epsilon0_pow / (4 * 5));
    CHECK(p.n0_bound == 6);

    JumpParams q = layered_parameters(3, 2, Rational(1, 10), Rational(1, 2));
    CHECK(q.a == 4);
    CHECK(q.b == 8);
    CHECK(q.epsilon > 0);
    // M >= b l / (1 - q) and M >= N0
    CHECK(Rational(q.m_big) >= Rational(8 * 2) / (1 - Rational(1, 2)));
    CHECK(q.m_big >= q.n0_bound);

    CHECK_THROWS_AS(layered_parameters(3, 2, Rational(1, 10), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(layered_parameters(3, 2, Rational(1, 10), Rational(0)), std::invalid_argument);
}

TEST_CASE("m_threshold") {
    long v = m_threshold(3, 2, Rational(1, 2));
    // self-check: v satisfies both conditions, v-1 violates at least one
    auto cond2 = [&](long m) {
        BigInt a = binom_big(m, 1), b = binom_big(m - 2, 1);
        return Rational(2 * (a - b)) <= Rational(1, 2) * Rational(2 * a - b);
    };
    auto cond1_approx = [&](long m) {
        double lhs = std::lgamma(m + 1.0) - std::lgamma(3.0) - std::lgamma(m - 1.0) -
                     (0.25 * m) / 8.0;
        return lhs <= std::log(0.5);
    };
    CHECK(cond1_approx(v));
    CHECK(cond2(v));
    CHECK_FALSE((cond1_approx(v - 1) && cond2(v - 1)));

    // relaxing epsilon can only lower the threshold
    CHECK(m_threshold(3, 2, Rational(3, 10)) >= m_threshold(3, 2, Rational(1, 2)));
    CHECK(m_threshold(3, 2, Rational(1, 2)) >= m_threshold(3, 2, Rational(7, 10)));

    CHECK_THROWS_AS(m_threshold(3, 2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(m_threshold(3, 2, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(m_threshold(2, 2, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("count_good_subsets exact mode") {
    // complete host: every m-set is good for small alpha
    Hypergraph k73 = Hypergraph::complete(7, 3);
    GoodSubsetCount all = count_good_subsets(k73, 2, 5, Rational(1, 3), true);
    CHECK(all.count == binom_big(7, 5));

    // edgeless host: strict inequality at alpha = 0 is unattainable
    GoodSubsetCount none = count_good_subsets(Hypergraph::edgeless(8, 3), 2, 5, Rational(0), true);
    CHECK(none.count == 0);

    // K_6^3 minus one edge: all six 5-subsets stay above 1/3
    std::vector<VertexSet> es;
    Hypergraph k63 = Hypergraph::complete(6, 3);
    for (const VertexSet& e : k63.edges)
        if (!(e == VertexSet{3, 4, 5})) es.push_back(e);
    Hypergraph h(3, 6, es);
    GoodSubsetCount got = count_good_subsets(h, 2, 5, Rational(1, 3), true);
    CHECK(got.count == 6);
    // at alpha = 1/2 only the 5-sets avoiding the removed edge survive
    GoodSubsetCount half = count_good_subsets(h, 2, 5, Rational(1, 2), true);
    CHECK(half.count == 3);

    CHECK_THROWS_AS(count_good_subsets(Hypergraph::complete(30, 3), 2, 15, Rational(1, 3), true,
                                       1000),
                    resource_limit);
    CHECK_THROWS_AS(count_good_subsets(k73, 2, 2, Rational(1, 3), true), std::invalid_argument);
}

TEST_CASE("count_good_subsets sampling mode brackets the exact count") {
    std::vector<VertexSet> es;
    Hypergraph k63 = Hypergraph::complete(6, 3);
    for (const VertexSet& e : k63.edges)
        if (!(e == VertexSet{0, 1, 2})) es.push_back(e);
    Hypergraph h(3, 6, es);
    GoodSubsetCount exact = count_good_subsets(h, 2, 5, Rational(1, 2), true);
    GoodSubsetCount sampled =
        count_good_subsets(h, 2, 5, Rational(1, 2), false, 2'000'000, 3000, 42);
    CHECK(sampled.samples == 3000);
    CHECK(Rational(exact.count) >= sampled.ci_low);
    CHECK(Rational(exact.count) <= sampled.ci_high);
}

TEST_CASE("rational rendering") {
    CHECK(rational_repr(Rational(1, 50)) == "1/50 (0.02)");
    CHECK(rational_repr(Rational(5)) == "5 (5)");
}
