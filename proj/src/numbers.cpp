#include "umlab/numbers.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstring>
#include <sstream>

namespace umlab {

Rational make_rational(const Int& n, const Int& d) {
    if (sgn(d) == 0) throw Error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw Error("rational parse error at position " + std::to_string(pos) + ": " + msg +
                    " in \"" + text + "\"");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::string {
        std::string out;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') out += '-';  // set_str rejects a leading '+'
            ++pos;
        }
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out += text[pos++];
            ++digits;
        }
        if (digits == 0) fail("expected digits");
        return out;
    };
    skip_ws();
    const std::string numerator = read_int();
    skip_ws();
    std::string denominator = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        denominator = read_int();
        skip_ws();
    }
    if (pos != text.size()) fail("trailing characters");
    Int n, d;
    if (n.set_str(numerator, 10) != 0) fail("bad numerator");
    if (d.set_str(denominator, 10) != 0) fail("bad denominator");
    return make_rational(n, d);
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).get_str();
    return num(q).get_str() + "/" + den(q).get_str();
}

size_t rational_bit_size(const Rational& q) {
    if (sgn(q) == 0) return 1;
    return std::max(mpz_sizeinbase(num(q).get_mpz_t(), 2), mpz_sizeinbase(den(q).get_mpz_t(), 2));
}

unsigned long remove_factor(Int& n, unsigned long p) {
    Int out;
    const mp_bitcnt_t e = mpz_remove(out.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
    n = out;
    return static_cast<unsigned long>(e);
}

std::optional<Int> exact_root(const Int& n, unsigned long k) {
    if (sgn(n) < 0) return std::nullopt;
    Int r;
    const int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rational> exact_rational_root(const Rational& q, unsigned long k) {
    if (k == 0) throw Error("zeroth root");
    if (sgn(q) == 0) return Rational(0);
    const bool negative = sgn(q) < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    auto rn = exact_root(abs(num(q)), k);
    if (!rn) return std::nullopt;
    auto rd = exact_root(den(q), k);
    if (!rd) return std::nullopt;
    Rational r = make_rational(*rn, *rd);
    return negative ? Rational(-r) : r;
}

namespace {

struct MpfrValue {
    mpfr_t x;
    explicit MpfrValue(unsigned bits) { mpfr_init2(x, bits); }
    ~MpfrValue() { mpfr_clear(x); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

Rational mpfr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    Int mant;
    const mp_exp_t e2 = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    if (e2 >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e2));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e2));
    }
    return r;
}

} // namespace

Rational round_dyadic(const Rational& q, unsigned bits, bool up) {
    if (bits < 2) bits = 2;
    MpfrValue v(bits);
    mpfr_set_q(v.x, q.get_mpq_t(), up ? MPFR_RNDU : MPFR_RNDD);
    return mpfr_to_rational(v.x);
}

std::string decimal_string(const Rational& q, unsigned digits) {
    if (sgn(q) == 0) return "0";
    const unsigned bits = static_cast<unsigned>(digits * 3.33) + 32;
    MpfrValue v(bits);
    mpfr_set_q(v.x, q.get_mpq_t(), MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v.x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (sgn(base) == 0) {
        if (e < 0) throw Error("0 raised to a negative power");
        return Rational(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r = make_rational(pow_int(num(base), a), pow_int(den(base), a));
    if (e < 0) r = 1 / r;
    return r;
}

} // namespace umlab
