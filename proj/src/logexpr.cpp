#include "umlab/logexpr.hpp"

#include "umlab/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace umlab {

namespace {

const unsigned long kSmallPrimeBound = 1000;

// Splits base into known small-prime structure plus an opaque cofactor.
// Opaque cofactors are additionally tested for cheap perfect-power shape so
// that e.g. log(49) and 2*log(7) land in the same canonical form.
void split_base(const Int& base, const Rational& coeff,
                std::vector<LogExpr::Term>& out) {
    Int rest = base;
    Int p(2);
    while (mpz_cmp_ui(p.get_mpz_t(), kSmallPrimeBound) <= 0) {
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            const unsigned long e = remove_factor(rest, p.get_ui());
            out.push_back({coeff * Rational(static_cast<long>(e)), p});
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (rest == 1) break;
    }
    if (rest == 1) return;
    // Cheap perfect-power reduction for moderate cofactors.
    if (mpz_sizeinbase(rest.get_mpz_t(), 2) <= 4096 && mpz_perfect_power_p(rest.get_mpz_t())) {
        const size_t maxe = mpz_sizeinbase(rest.get_mpz_t(), 2);
        for (unsigned long e = 2; e <= maxe; ++e) {
            if (auto r = exact_root(rest, e)) {
                Int check = pow_int(*r, e);
                if (check == rest) {
                    split_base(*r, coeff * Rational(static_cast<long>(e)), out);
                    return;
                }
            }
        }
    }
    out.push_back({coeff, rest});
}

} // namespace

LogExpr LogExpr::log_of(const Int& base, const Rational& coeff) {
    if (sgn(base) <= 0) throw Error("log of non-positive integer " + to_string(base));
    LogExpr e;
    if (base == 1 || sgn(coeff) == 0) return e;
    e.add_term(coeff, base);
    e.normalize();
    return e;
}

LogExpr LogExpr::log_abs(const Rational& q) {
    if (sgn(q) == 0) throw Error("log of zero");
    LogExpr e;
    Int n = abs(num(q));
    if (n != 1) e.add_term(Rational(1), n);
    if (den(q) != 1) e.add_term(Rational(-1), den(q));
    e.normalize();
    return e;
}

void LogExpr::add_term(Rational coeff, Int base) {
    terms_.push_back({std::move(coeff), std::move(base)});
}

void LogExpr::normalize() {
    std::vector<Term> split;
    for (const Term& t : terms_) split_base(t.base, t.coeff, split);
    std::sort(split.begin(), split.end(),
              [](const Term& a, const Term& b) { return a.base < b.base; });
    std::vector<Term> merged;
    for (Term& t : split) {
        if (!merged.empty() && merged.back().base == t.base) {
            merged.back().coeff += t.coeff;
            if (sgn(merged.back().coeff) == 0) merged.pop_back();
        } else if (sgn(t.coeff) != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

LogExpr LogExpr::operator+(const LogExpr& o) const {
    LogExpr r;
    r.constant_ = constant_ + o.constant_;
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

LogExpr LogExpr::operator-(const LogExpr& o) const { return *this + (-o); }

LogExpr LogExpr::operator-() const {
    LogExpr r;
    r.constant_ = -constant_;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LogExpr LogExpr::operator*(const Rational& c) const {
    if (sgn(c) == 0) return LogExpr();
    LogExpr r;
    r.constant_ = constant_ * c;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

bool LogExpr::operator==(const LogExpr& o) const {
    if (constant_ != o.constant_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].base != o.terms_[i].base || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Interval LogExpr::enclose(unsigned bits) const {
    struct Fr {
        mpfr_t x;
        explicit Fr(unsigned b) { mpfr_init2(x, b); }
        ~Fr() { mpfr_clear(x); }
    };
    Interval acc = Interval::point(constant_);
    for (const Term& t : terms_) {
        Fr lo(bits), hi(bits), in(bits + 8);
        mpfr_set_z(in.x, t.base.get_mpz_t(), MPFR_RNDD);
        mpfr_log(lo.x, in.x, MPFR_RNDD);
        mpfr_set_z(in.x, t.base.get_mpz_t(), MPFR_RNDU);
        mpfr_log(hi.x, in.x, MPFR_RNDU);
        Int mant_lo, mant_hi;
        mp_exp_t e_lo = mpfr_get_z_2exp(mant_lo.get_mpz_t(), lo.x);
        mp_exp_t e_hi = mpfr_get_z_2exp(mant_hi.get_mpz_t(), hi.x);
        auto dyadic = [](const Int& m, mp_exp_t e) {
            Rational r(m);
            if (e >= 0)
                mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
            else
                mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
            return r;
        };
        Interval term_log(dyadic(mant_lo, e_lo), dyadic(mant_hi, e_hi));
        acc = acc + term_log * t.coeff;
    }
    return acc;
}

double LogExpr::to_double() const {
    if (terms_.empty()) return constant_.get_d();
    Interval e = enclose(64);
    return e.mid().get_d();
}

std::string LogExpr::decimal(unsigned digits) const {
    Interval e = enclose(static_cast<unsigned>(digits * 3.33) + 64);
    return decimal_string(e.mid(), digits);
}

std::optional<Rational> LogExpr::exp_exact() const {
    if (sgn(constant_) != 0) return std::nullopt;
    Rational out(1);
    for (const Term& t : terms_) {
        if (den(t.coeff) == 1) {
            if (!num(t.coeff).fits_slong_p()) return std::nullopt; // absurd size
            out *= pow_rational(Rational(t.base), num(t.coeff).get_si());
            continue;
        }
        if (!den(t.coeff).fits_ulong_p()) return std::nullopt;
        auto root = exact_root(t.base, den(t.coeff).get_ui());
        if (!root) return std::nullopt;
        if (!num(t.coeff).fits_slong_p()) return std::nullopt;
        out *= pow_rational(Rational(*root), num(t.coeff).get_si());
    }
    return out;
}

std::optional<int> LogExpr::compare(const LogExpr& a, const LogExpr& b, unsigned max_bits) {
    LogExpr diff = a - b;
    if (diff.is_zero()) return 0;
    for (unsigned bits = 128; bits <= max_bits; bits *= 4) {
        Interval e = diff.enclose(bits);
        if (e.strictly_positive()) return 1;
        if (e.strictly_negative()) return -1;
    }
    return std::nullopt;
}

int LogExpr::compare_strict(const LogExpr& a, const LogExpr& b) {
    auto c = compare(a, b);
    if (!c)
        throw Error("log-expression comparison undecided within precision budget");
    return *c;
}

} // namespace umlab
