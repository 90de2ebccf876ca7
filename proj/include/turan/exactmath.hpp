#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binom_big(long n, long r);

/// "p/q" plus a 6-significant-digit decimal rendering
std::string rational_repr(const Rational& q);
double rational_to_double(const Rational& q);

/// number of ways to pick k-l elements from parts of sizes ns with at most
/// l-1 taken from each part; exact integer arithmetic
BigInt f_multi(const std::vector<long>& ns, int k, int l);

/// f_multi with a equal parts of size n0
BigInt f_uniform(long n0, int a, int k, int l);

/// Derived constants of the jump analysis. epsilon0 is algebraic:
/// epsilon0^(k-l) is stored exactly, alongside a double approximation.
struct JumpParams {
    int k = 0, l = 0;
    Rational delta;
    Rational epsilon0_pow; // epsilon0^(k-l), exact
    double epsilon0 = 0;   // approximation for display
    long t = 0;
    long m0 = 0;

    // layered extension (set when a target ratio q was supplied)
    bool has_layered = false;
    Rational q;
    long a = 0, b = 0;
    Rational epsilon; // exact: epsilon0^(k-l) / (4 b^(k-l))
    BigInt m_big;     // the four-term maximum
    long n0_bound = 0;
};

/// epsilon0^(k-l) = delta / (1 + (4(k-l)^2)^(k-l)), t = floor(1/epsilon0),
/// M0 = l*t; validates the admissible delta range and the chained bounds.
JumpParams jump_parameters(int k, int l, const Rational& delta);

/// extends jump_parameters with (a,b) scaled from q in lowest terms so that
/// a+k < b, epsilon, N0 and the four-term maximum M (each term ceiling'd)
JumpParams layered_parameters(int k, int l, const Rational& delta, const Rational& q);

/// smallest m >= k with  C(m,l) * exp(-eps^2 m / (8(k-l)^2)) <= 1/2  and
/// (C(m,k-l) - C(m-l,k-l)) / (C(m,k-l) - C(m-l,k-l)/2) <= eps.
/// The exp side is evaluated in high precision with the left side rounded up.
long m_threshold(int k, int l, const Rational& eps);

struct GoodSubsetCount {
    bool exact = true;
    BigInt count;         // exact mode
    BigInt total;         // C(n,m)
    long samples = 0;     // sampling mode
    long hits = 0;
    Rational estimate;    // hits/samples * C(n,m)
    Rational ci_low, ci_high; // 95% Wilson interval, scaled to counts
};

/// number of m-sets S with delta_l(H[S]) > alpha * C(m,k-l); exact mode
/// enumerates all C(n,m) subsets (subject to a budget), sampling mode draws
/// seeded uniform m-sets and reports a binomial confidence interval
GoodSubsetCount count_good_subsets(const Hypergraph& h, int l, int m, const Rational& alpha,
                                   bool exact, long budget = 2'000'000,
                                   long samples = 10'000, std::uint64_t seed = 1);

} // namespace turan
