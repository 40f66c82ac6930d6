#include "oracles.hpp"

#include <mpfr.h>

#include <algorithm>
#include <deque>

namespace umlab::oracles {

namespace {

struct Mpc {
    mpfr_t re, im;
    explicit Mpc(unsigned bits) {
        mpfr_init2(re, bits);
        mpfr_init2(im, bits);
        mpfr_set_ui(re, 0, MPFR_RNDN);
        mpfr_set_ui(im, 0, MPFR_RNDN);
    }
    ~Mpc() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
    Mpc(const Mpc&) = delete;
    Mpc& operator=(const Mpc&) = delete;
};

void c_set(Mpc& d, const Mpc& s) {
    mpfr_set(d.re, s.re, MPFR_RNDN);
    mpfr_set(d.im, s.im, MPFR_RNDN);
}

// d = a * b; safe when d aliases a or b (scratch must alias neither)
void c_mul(Mpc& d, const Mpc& a, const Mpc& b, Mpc& scratch) {
    mpfr_mul(scratch.re, a.re, b.re, MPFR_RNDN);
    mpfr_mul(scratch.im, a.im, b.im, MPFR_RNDN);
    mpfr_sub(scratch.re, scratch.re, scratch.im, MPFR_RNDN);
    mpfr_mul(scratch.im, a.re, b.im, MPFR_RNDN);
    mpfr_fma(scratch.im, a.im, b.re, scratch.im, MPFR_RNDN);
    c_set(d, scratch);
}

// d = a - b
void c_sub(Mpc& d, const Mpc& a, const Mpc& b) {
    mpfr_sub(d.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(d.im, a.im, b.im, MPFR_RNDN);
}

// d = a / b
void c_div(Mpc& d, const Mpc& a, const Mpc& b, Mpc& s1, Mpc& s2) {
    mpfr_mul(s1.re, b.re, b.re, MPFR_RNDN);
    mpfr_mul(s1.im, b.im, b.im, MPFR_RNDN);
    mpfr_add(s1.re, s1.re, s1.im, MPFR_RNDN); // |b|^2
    // a * conj(b)
    mpfr_mul(s2.re, a.re, b.re, MPFR_RNDN);
    mpfr_mul(s2.im, a.im, b.im, MPFR_RNDN);
    mpfr_add(s2.re, s2.re, s2.im, MPFR_RNDN);
    mpfr_mul(s2.im, a.im, b.re, MPFR_RNDN);
    mpfr_mul(s1.im, a.re, b.im, MPFR_RNDN);
    mpfr_sub(s2.im, s2.im, s1.im, MPFR_RNDN);
    mpfr_div(d.re, s2.re, s1.re, MPFR_RNDN);
    mpfr_div(d.im, s2.im, s1.re, MPFR_RNDN);
}

Rational fr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    Int mant;
    const mp_exp_t e2 = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    if (e2 >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e2));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e2));
    return r;
}

} // namespace

std::vector<ApproxRoot> durand_kerner_roots(const IntPoly& f, unsigned bits) {
    const long d = f.degree();
    if (d < 1) throw Error("durand_kerner_roots needs degree >= 1");
    // monic coefficients c_i / lc at working precision
    std::deque<Mpc> coeff;
    for (long i = 0; i <= d; ++i) {
        coeff.emplace_back(bits);
        Rational ci = make_rational(f[static_cast<size_t>(i)], f.lc());
        mpfr_set_q(coeff.back().re, ci.get_mpq_t(), MPFR_RNDN);
    }
    // initial guesses: r * (0.4 + 0.9i)^k with r slightly above the root bound
    std::deque<Mpc> z;
    Mpc seed(bits), acc(bits), s1(bits), s2(bits);
    mpfr_set_d(seed.re, 0.4, MPFR_RNDN);
    mpfr_set_d(seed.im, 0.9, MPFR_RNDN);
    mpfr_set_d(acc.re, 0.7, MPFR_RNDN);
    mpfr_set_d(acc.im, 0.2, MPFR_RNDN);
    for (long k = 0; k < d; ++k) {
        z.emplace_back(bits);
        c_mul(acc, acc, seed, s1);
        c_set(z.back(), acc);
    }
    Mpc fz(bits), denom(bits), delta(bits), diff(bits);
    mpfr_t tol, err, mag;
    mpfr_init2(tol, bits);
    mpfr_init2(err, bits);
    mpfr_init2(mag, bits);
    mpfr_set_ui_2exp(tol, 1, -static_cast<long>(bits * 3 / 4), MPFR_RNDN);
    for (int iter = 0; iter < 2000; ++iter) {
        mpfr_set_ui(err, 0, MPFR_RNDN);
        for (long i = 0; i < d; ++i) {
            // fz = f(z_i) (monic Horner)
            mpfr_set_ui(fz.re, 1, MPFR_RNDN);
            mpfr_set_ui(fz.im, 0, MPFR_RNDN);
            for (long k = d - 1; k >= 0; --k) {
                c_mul(fz, fz, z[static_cast<size_t>(i)], s1);
                mpfr_add(fz.re, fz.re, coeff[static_cast<size_t>(k)].re, MPFR_RNDN);
            }
            // denom = prod_{j != i} (z_i - z_j)
            mpfr_set_ui(denom.re, 1, MPFR_RNDN);
            mpfr_set_ui(denom.im, 0, MPFR_RNDN);
            for (long j = 0; j < d; ++j) {
                if (j == i) continue;
                c_sub(diff, z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
                c_mul(denom, denom, diff, s1);
            }
            c_div(delta, fz, denom, s1, s2);
            c_sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(i)], delta);
            mpfr_hypot(mag, delta.re, delta.im, MPFR_RNDN);
            if (mpfr_cmp(mag, err) > 0) mpfr_set(err, mag, MPFR_RNDN);
        }
        if (mpfr_cmp(err, tol) < 0) break;
    }
    std::vector<ApproxRoot> out;
    out.reserve(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i)
        out.push_back({fr_to_rational(z[static_cast<size_t>(i)].re),
                       fr_to_rational(z[static_cast<size_t>(i)].im)});
    mpfr_clears(tol, err, mag, nullptr);
    return out;
}

Rational log_mahler_measure(const IntPoly& f, unsigned bits) {
    mpfr_t acc, mag, one;
    mpfr_init2(acc, bits);
    mpfr_init2(mag, bits);
    mpfr_init2(one, bits);
    mpfr_set_ui(one, 1, MPFR_RNDN);
    Int lead = ::abs(f.lc());
    mpfr_set_z(acc, lead.get_mpz_t(), MPFR_RNDN);
    mpfr_log(acc, acc, MPFR_RNDN);
    mpfr_t re, im;
    mpfr_init2(re, bits);
    mpfr_init2(im, bits);
    for (const ApproxRoot& r : durand_kerner_roots(f, bits)) {
        mpfr_set_q(re, r.re.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(im, r.im.get_mpq_t(), MPFR_RNDN);
        mpfr_hypot(mag, re, im, MPFR_RNDN);
        if (mpfr_cmp(mag, one) > 0) {
            mpfr_log(mag, mag, MPFR_RNDN);
            mpfr_add(acc, acc, mag, MPFR_RNDN);
        }
    }
    Rational out = fr_to_rational(acc);
    mpfr_clears(acc, mag, one, re, im, nullptr);
    return out;
}

Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const long df = f.degree(), dg = g.degree();
    if (df < 0 || dg < 0) throw Error("sylvester_resultant with zero polynomial");
    if (df == 0) return pow_int(f.lc(), static_cast<unsigned long>(dg));
    if (dg == 0) return pow_int(g.lc(), static_cast<unsigned long>(df));
    const long n = df + dg;
    std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (long r = 0; r < dg; ++r)
        for (long k = 0; k <= df; ++k)
            a[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
                Rational(f[static_cast<size_t>(df - k)]);
    for (long r = 0; r < df; ++r)
        for (long k = 0; k <= dg; ++k)
            a[static_cast<size_t>(dg + r)][static_cast<size_t>(r + k)] =
                Rational(g[static_cast<size_t>(dg - k)]);
    // rational Gaussian elimination with partial pivoting by nonzero
    Rational det(1);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r) {
            if (sgn(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Int(0);
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (long r = col + 1; r < n; ++r) {
            Rational factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (sgn(factor) == 0) continue;
            for (long k = col; k < n; ++k)
                a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    factor * a[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    if (den(det) != 1) throw Error("sylvester determinant not integral");
    return num(det);
}

namespace {

uint64_t pw(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = (static_cast<__uint128_t>(r) * a) % p;
        a = (static_cast<__uint128_t>(a) * a) % p;
        e >>= 1;
    }
    return r;
}

using Mod = std::vector<uint64_t>; // low-to-high, monic use

void mod_trim(Mod& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Mod mod_rem(Mod a, const Mod& b, uint64_t p) {
    const long db = static_cast<long>(b.size()) - 1;
    const uint64_t inv = pw(b.back(), p - 2, p);
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        const size_t da = a.size() - 1;
        const uint64_t f = (static_cast<__uint128_t>(a.back()) * inv) % p;
        for (long i = 0; i <= db; ++i) {
            const size_t k = da - static_cast<size_t>(db) + static_cast<size_t>(i);
            const uint64_t sub = (static_cast<__uint128_t>(f) * b[static_cast<size_t>(i)]) % p;
            a[k] = (a[k] + p - sub) % p;
        }
        mod_trim(a);
    }
    return a;
}

Mod mod_divexact(const Mod& a, const Mod& b, uint64_t p) {
    Mod rem = a, quot(a.size() - b.size() + 1, 0);
    const long db = static_cast<long>(b.size()) - 1;
    const uint64_t inv = pw(b.back(), p - 2, p);
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
        const size_t da = rem.size() - 1;
        const uint64_t f = (static_cast<__uint128_t>(rem.back()) * inv) % p;
        quot[da - static_cast<size_t>(db)] = f;
        for (long i = 0; i <= db; ++i) {
            const size_t k = da - static_cast<size_t>(db) + static_cast<size_t>(i);
            const uint64_t sub = (static_cast<__uint128_t>(f) * b[static_cast<size_t>(i)]) % p;
            rem[k] = (rem[k] + p - sub) % p;
        }
        mod_trim(rem);
    }
    if (!rem.empty()) throw Error("naive oracle: inexact division");
    mod_trim(quot);
    return quot;
}

bool mod_has_root(const Mod& f, uint64_t p) {
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t acc = 0;
        for (size_t i = f.size(); i-- > 0;)
            acc = ((static_cast<__uint128_t>(acc) * x) % p + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

} // namespace

std::vector<unsigned> naive_mod_p_pattern(const IntPoly& f, unsigned long p) {
    Mod fr;
    for (const Int& c : f.coeffs()) {
        Int r = c % static_cast<long>(p);
        if (sgn(r) < 0) r += static_cast<long>(p);
        fr.push_back(r.get_ui());
    }
    mod_trim(fr);
    if (fr.empty() || fr.size() - 1 != static_cast<size_t>(f.degree()))
        throw Error("naive oracle: leading coefficient vanishes mod p");

    // all monic irreducibles of degree 1..3 mod p
    std::vector<Mod> irreducibles;
    for (uint64_t c0 = 0; c0 < p; ++c0) irreducibles.push_back({c0, 1});
    for (uint64_t c1 = 0; c1 < p; ++c1)
        for (uint64_t c0 = 0; c0 < p; ++c0) {
            Mod cand{c0, c1, 1};
            if (!mod_has_root(cand, p)) irreducibles.push_back(cand);
        }
    if (f.degree() >= 3) {
        for (uint64_t c2 = 0; c2 < p; ++c2)
            for (uint64_t c1 = 0; c1 < p; ++c1)
                for (uint64_t c0 = 0; c0 < p; ++c0) {
                    Mod cand{c0, c1, c2, 1};
                    if (!mod_has_root(cand, p)) irreducibles.push_back(cand);
                }
    }
    std::vector<unsigned> pattern;
    for (const Mod& irr : irreducibles) {
        while (fr.size() >= irr.size()) {
            Mod rem = mod_rem(fr, irr, p);
            if (!rem.empty()) break;
            pattern.push_back(static_cast<unsigned>(irr.size() - 1));
            fr = mod_divexact(fr, irr, p);
        }
        if (fr.size() <= 1) break;
    }
    if (fr.size() > 1) pattern.push_back(static_cast<unsigned>(fr.size() - 1));
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

bool binomial_reducible_oracle(unsigned long m, const Rational& a) {
    if (m == 1) return false;
    auto nth_power = [](const Rational& q, unsigned long k) {
        return exact_rational_root(q, k).has_value();
    };
    const bool rational_root = nth_power(a, m);
    if (m == 2) return rational_root;
    if (m == 3) return rational_root;
    if (m == 4) {
        if (rational_root) return true;
        // (X^2 + c)(X^2 + e) with c + e = 0, ce = -a  =>  a = c^2
        if (nth_power(a, 2)) return true;
        // (X^2 + bX + c)(X^2 - bX + c), b != 0: 2c = b^2, c^2 = -a  =>  -4a = b^4
        if (nth_power(Rational(-4) * a, 4)) return true;
        return false;
    }
    throw Error("binomial oracle only covers m <= 4");
}

long Rng::integer(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(engine);
}

Rational Rng::rational(long bound) {
    long p = integer(-bound, bound);
    long q = integer(1, bound);
    return make_rational(Int(p), Int(q));
}

IntPoly Rng::poly(long degree, long coeff_bound, bool monic) {
    std::vector<Int> c;
    for (long i = 0; i < degree; ++i) c.emplace_back(integer(-coeff_bound, coeff_bound));
    if (monic) {
        c.emplace_back(1);
    } else {
        long lead = 0;
        while (lead == 0) lead = integer(-coeff_bound, coeff_bound);
        c.emplace_back(lead);
    }
    return IntPoly(std::move(c));
}

IntPoly Rng::squarefree_poly(long degree, long coeff_bound, bool monic) {
    for (int tries = 0; tries < 1000; ++tries) {
        IntPoly f = poly(degree, coeff_bound, monic);
        if (f.degree() == degree && polyring::is_squarefree(f)) return f;
    }
    throw Error("failed to sample a squarefree polynomial");
}

} // namespace umlab::oracles
