#include "turan/exactmath.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "turan/errors.hpp"
#include "turan/rng.hpp"
#include "turan/subsets.hpp"

namespace turan {

BigInt binom_big(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

double rational_to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

std::string rational_repr(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    std::string s = c.get_num().get_str();
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", rational_to_double(c));
    return s + " (" + buf + ")";
}

BigInt f_multi(const std::vector<long>& ns, int k, int l) {
    if (!(k > l && l > 1)) throw std::invalid_argument("f_multi: need k > l > 1");
    for (long n : ns)
        if (n < 0) throw std::invalid_argument("f_multi: part sizes must be non-negative");
    int a = static_cast<int>(ns.size());
    BigInt total = 0;
    // walk tuples (q_1..q_a) with 0 <= q_i <= l-1 summing to k-l
    auto rec = [&](auto&& self, int i, int left, const BigInt& acc) -> void {
        if (i == a) {
            if (left == 0) total += acc;
            return;
        }
        int hi = std::min(l - 1, left);
        for (int qi = 0; qi <= hi; ++qi)
            self(self, i + 1, left - qi, acc * binom_big(ns[i], qi));
    };
    rec(rec, 0, k - l, BigInt(1));
    return total;
}

BigInt f_uniform(long n0, int a, int k, int l) {
    return f_multi(std::vector<long>(a, n0), k, l);
}

namespace {

BigInt pow_big(const BigInt& base, int e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

Rational pow_rat(const Rational& base, int e) {
    Rational c = base;
    c.canonicalize();
    return Rational(pow_big(c.get_num(), e), pow_big(c.get_den(), e));
}

// largest integer t with t^r <= x (x > 0 rational)
long floor_root(const Rational& x, int r) {
    BigInt fl = x.get_num() / x.get_den();
    BigInt root;
    mpz_root(root.get_mpz_t(), fl.get_mpz_t(), static_cast<unsigned long>(r));
    long t = static_cast<long>(root.get_si());
    while (Rational(pow_big(BigInt(t + 1), r)) <= x) ++t;
    while (t > 0 && Rational(pow_big(BigInt(t), r)) > x) --t;
    return t;
}

// smallest integer c >= 0 with c^r >= x
BigInt ceil_root(const Rational& x, int r) {
    if (x <= 0) return 0;
    BigInt lo = x.get_num() / x.get_den();
    BigInt root;
    mpz_root(root.get_mpz_t(), lo.get_mpz_t(), static_cast<unsigned long>(r));
    BigInt c = root;
    while (Rational(pow_big(c, r)) < x) ++c;
    while (c > 0 && Rational(pow_big(c - 1, r)) >= x) --c;
    return c;
}

BigInt ceil_rat(const Rational& x) {
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (rem != 0) ++q;
    return q;
}

} // namespace

JumpParams jump_parameters(int k, int l, const Rational& delta) {
    if (!(k > l && l > 1)) throw std::invalid_argument("jump_parameters: need k > l > 1");
    int r = k - l;
    BigInt d_denom = pow_big(BigInt(4L * r * r), r);               // (4(k-l)^2)^(k-l)
    Rational upper = Rational(d_denom) / Rational(pow_big(BigInt(k), r)); // (4(k-l)^2/k)^(k-l)
    if (!(delta > 0 && delta < upper))
        throw std::invalid_argument("jump_parameters: delta must lie in (0, " +
                                    upper.get_str() + ") for k=" + std::to_string(k) +
                                    ", l=" + std::to_string(l));

    JumpParams p;
    p.k = k;
    p.l = l;
    p.delta = delta;
    p.epsilon0_pow = delta / Rational(1 + d_denom);
    p.epsilon0_pow.canonicalize();

    Rational k_pow = Rational(1) / Rational(pow_big(BigInt(k), r));
    if (!(p.epsilon0_pow <= k_pow && k_pow < Rational(1, 2)))
        throw std::logic_error("jump_parameters: chained bound on epsilon0 violated");

    p.t = floor_root(Rational(1) / p.epsilon0_pow, r);
    if (p.t < k) throw std::logic_error("jump_parameters: t = floor(1/epsilon0) fell below k");

    p.m0 = l * p.t;
    // M0 >= l / (2(k-l) epsilon0), compared with both sides raised to k-l
    Rational lhs = Rational(pow_big(BigInt(2L * r * p.m0), r)) * p.epsilon0_pow;
    if (lhs < Rational(pow_big(BigInt(l), r)))
        throw std::logic_error("jump_parameters: M0 bound violated");

    p.epsilon0 = std::pow(rational_to_double(p.epsilon0_pow), 1.0 / r);
    return p;
}

namespace {

// ceil of  b*l*(k-l) / (q * ln(1 + x/2))  for exact rational x > 0,
// via interval evaluation at increasing precision
BigInt ceil_log_term(long b, int l, int r, const Rational& q, const Rational& x) {
    for (mpfr_prec_t prec = 256; prec <= 1 << 16; prec *= 2) {
        mpfr_t arg, ln_lo, ln_hi, num, t_lo, t_hi;
        mpfr_inits2(prec, arg, ln_lo, ln_hi, num, t_lo, t_hi, static_cast<mpfr_ptr>(nullptr));

        Rational one_plus = 1 + x / 2;
        mpfr_set_q(arg, one_plus.get_mpq_t(), MPFR_RNDD);
        mpfr_log(ln_lo, arg, MPFR_RNDD);
        mpfr_set_q(arg, one_plus.get_mpq_t(), MPFR_RNDU);
        mpfr_log(ln_hi, arg, MPFR_RNDU);

        Rational numer = Rational(static_cast<long>(b) * l * r) / q;
        mpfr_set_q(num, numer.get_mpq_t(), MPFR_RNDU);
        mpfr_div(t_hi, num, ln_lo, MPFR_RNDU);
        mpfr_set_q(num, numer.get_mpq_t(), MPFR_RNDD);
        mpfr_div(t_lo, num, ln_hi, MPFR_RNDD);

        mpfr_t c_lo, c_hi;
        mpfr_inits2(prec, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_ceil(c_lo, t_lo);
        mpfr_ceil(c_hi, t_hi);
        bool agree = mpfr_cmp(c_lo, c_hi) == 0;
        BigInt out;
        mpfr_get_z(out.get_mpz_t(), c_hi, MPFR_RNDN);
        mpfr_clears(arg, ln_lo, ln_hi, num, t_lo, t_hi, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
        if (agree) return out;
    }
    throw resource_limit("ceil_log_term: interval refinement did not converge");
}

} // namespace

JumpParams layered_parameters(int k, int l, const Rational& delta, const Rational& q) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("layered_parameters: q must be in (0,1)");
    JumpParams p = jump_parameters(k, l, delta);
    int r = k - l;

    Rational qc = q;
    qc.canonicalize();
    long a0 = static_cast<long>(qc.get_num().get_si());
    long b0 = static_cast<long>(qc.get_den().get_si());
    long c = k / (b0 - a0) + 1; // least c with c*(b0-a0) > k, i.e. a0c + k < b0c
    p.has_layered = true;
    p.q = qc;
    p.a = a0 * c;
    p.b = b0 * c;
    p.epsilon = p.epsilon0_pow / Rational(4 * pow_big(BigInt(p.b), r));
    p.epsilon.canonicalize();
    p.n0_bound = p.b + 1;

    // term 1: 2(k-l) * (C(M0,k-l)/(delta - eps0^(k-l)))^(1/(k-l)), exact ceiling
    Rational gap = delta - p.epsilon0_pow;
    Rational q1 = Rational(pow_big(BigInt(2L * r), r)) * Rational(binom_big(p.m0, r)) / gap;
    BigInt t1 = ceil_root(q1, r);
    // term 2: the logarithmic bound
    Rational x = p.epsilon0_pow / pow_rat(qc, r);
    BigInt t2 = ceil_log_term(p.b, l, r, qc, x);
    // terms 3 and 4
    BigInt t3(p.n0_bound);
    BigInt t4 = ceil_rat(Rational(static_cast<long>(p.b) * l) / (1 - qc));

    p.m_big = t1;
    if (t2 > p.m_big) p.m_big = t2;
    if (t3 > p.m_big) p.m_big = t3;
    if (t4 > p.m_big) p.m_big = t4;
    return p;
}

long m_threshold(int k, int l, const Rational& eps) {
    if (!(k > l && l >= 1)) throw std::invalid_argument("m_threshold: need k > l >= 1");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("m_threshold: need 0 < eps < 1");
    int r = k - l;
    double eps_d = rational_to_double(eps);
    double c = eps_d * eps_d / (8.0 * r * r);

    auto cond2 = [&](long m) {
        BigInt a = binom_big(m, r), b = binom_big(m - l, r);
        // (a-b)/(a-b/2) <= eps  <=>  2(a-b) <= eps (2a-b)
        return Rational(2 * (a - b)) <= eps * Rational(2 * a - b);
    };

    mpfr_t x, e, lhs;
    mpfr_inits2(256, x, e, lhs, static_cast<mpfr_ptr>(nullptr));
    auto cond1 = [&](long m) {
        // left side rounded up so the "smallest m" is never understated
        Rational arg = pow_rat(eps, 2) * m / Rational(8L * r * r);
        mpfr_set_q(x, arg.get_mpq_t(), MPFR_RNDD);
        mpfr_neg(x, x, MPFR_RNDU);
        mpfr_exp(e, x, MPFR_RNDU);
        BigInt cml = binom_big(m, l);
        mpfr_mul_z(lhs, e, cml.get_mpz_t(), MPFR_RNDU);
        return mpfr_cmp_d(lhs, 0.5) <= 0;
    };

    constexpr long cap = 50'000'000;
    for (long m = k; m <= cap; ++m) {
        // cheap double screen for the exp condition before exact evaluation
        double ln_lhs = std::lgamma(m + 1.0) - std::lgamma(l + 1.0) - std::lgamma(m - l + 1.0) -
                        c * m;
        if (ln_lhs > std::log(0.75)) continue;
        if (cond1(m) && cond2(m)) {
            mpfr_clears(x, e, lhs, static_cast<mpfr_ptr>(nullptr));
            return m;
        }
    }
    mpfr_clears(x, e, lhs, static_cast<mpfr_ptr>(nullptr));
    throw resource_limit("m_threshold: no m below scan cap satisfied both conditions");
}

GoodSubsetCount count_good_subsets(const Hypergraph& h, int l, int m, const Rational& alpha,
                                   bool exact, long budget, long samples, std::uint64_t seed) {
    if (!(l < h.k && h.k <= m && m <= h.n))
        throw std::invalid_argument("count_good_subsets: need l < k <= m <= n");
    GoodSubsetCount out;
    out.total = binom_big(h.n, m);
    Rational threshold = alpha * Rational(binom_big(m, h.k - l));

    auto good = [&](const std::vector<int>& s) {
        Hypergraph sub = induced(h, VertexSet::of(s));
        return Rational(static_cast<long>(min_l_degree(sub, l).value)) > threshold;
    };

    if (exact) {
        if (out.total > budget)
            throw resource_limit("count_good_subsets: C(n,m) = " + out.total.get_str() +
                                 " exceeds the exact-mode budget; rerun with sampling");
        BigInt cnt = 0;
        for_each_subset(h.n, m, [&](const std::vector<int>& s) {
            if (good(s)) ++cnt;
        });
        out.count = cnt;
        out.exact = true;
        return out;
    }

    out.exact = false;
    out.samples = samples;
    SplitMix64 gen(seed);
    std::vector<int> pool(h.n);
    for (long i = 0; i < samples; ++i) {
        for (int v = 0; v < h.n; ++v) pool[v] = v;
        for (int j = 0; j < m; ++j) {
            int pick = j + static_cast<int>(gen.uniform_below(h.n - j));
            std::swap(pool[j], pool[pick]);
        }
        std::vector<int> s(pool.begin(), pool.begin() + m);
        std::sort(s.begin(), s.end());
        if (good(s)) ++out.hits;
    }
    out.estimate = Rational(out.hits, samples) * Rational(out.total);
    out.estimate.canonicalize();
    // Wilson 95% interval on the hit probability, scaled to subset counts
    double z = 1.959963984540054;
    double ph = static_cast<double>(out.hits) / samples;
    double denom = 1.0 + z * z / samples;
    double center = ph + z * z / (2.0 * samples);
    double half = z * std::sqrt(ph * (1.0 - ph) / samples + z * z / (4.0 * samples * samples));
    Rational lo_p, hi_p;
    mpq_set_d(lo_p.get_mpq_t(), std::max(0.0, (center - half) / denom));
    mpq_set_d(hi_p.get_mpq_t(), std::min(1.0, (center + half) / denom));
    out.ci_low = lo_p * Rational(out.total);
    out.ci_high = hi_p * Rational(out.total);
    out.ci_low.canonicalize();
    out.ci_high.canonicalize();
    return out;
}

} // namespace turan
