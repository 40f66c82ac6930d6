#include "umlab/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace umlab::polyring {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) {
    return IntPoly(std::vector<Int>{c});
}

IntPoly IntPoly::monomial(const Int& c, size_t k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Rational& r) {
    return IntPoly({-num(r), den(r)});
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return IntPoly();
    Int g = content();
    if (sgn(c_.back()) < 0) g = -g;
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& c : c_) out.push_back(c / g);
    return IntPoly(std::move(out));
}

bool IntPoly::is_primitive() const { return !c_.empty() && content() == 1; }

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return IntPoly(std::move(out));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> out = c_;
    for (Int& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& k) const {
    std::vector<Int> out = c_;
    for (Int& c : out) c *= k;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw Error("inexact polynomial division (degree)");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - d.c_.size() + 1, Int(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Int& top = rem[i + d.c_.size() - 1];
        if (sgn(top) == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
        if (sgn(r) != 0) throw Error("inexact polynomial division (coefficient)");
        quot[i] = q;
        for (size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= q * d.c_[j];
    }
    for (const Int& c : rem)
        if (sgn(c) != 0) throw Error("inexact polynomial division (remainder)");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::shift_down(size_t k) const {
    if (is_zero()) return IntPoly();
    if (c_.size() <= k) throw Error("shift_down past degree");
    for (size_t i = 0; i < k; ++i)
        if (sgn(c_[i]) != 0)
            throw Error("shift_down: low coefficient " + std::to_string(i) + " is nonzero");
    return IntPoly(std::vector<Int>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::string IntPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        Int a = c_[i];
        if (first) {
            if (sgn(a) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
        }
        Int mag = ::abs(a);
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly to_rat(const IntPoly& f) {
    RatPoly out;
    out.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) out.emplace_back(c);
    return out;
}

long rat_degree(const RatPoly& f) {
    long d = static_cast<long>(f.size()) - 1;
    while (d >= 0 && sgn(f[static_cast<size_t>(d)]) == 0) --d;
    return d;
}

IntPoly clear_denominators(const RatPoly& f) {
    const long d = rat_degree(f);
    if (d < 0) return IntPoly();
    Int l(1);
    for (long i = 0; i <= d; ++i)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(f[static_cast<size_t>(i)]).get_mpz_t());
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) {
        Rational c = f[static_cast<size_t>(i)] * Rational(l);
        out.push_back(num(c));
    }
    return IntPoly(std::move(out));
}

RatPoly rat_derivative(const RatPoly& f) {
    const long d = rat_degree(f);
    if (d <= 0) return {};
    RatPoly out(static_cast<size_t>(d));
    for (long i = 1; i <= d; ++i)
        out[static_cast<size_t>(i - 1)] = f[static_cast<size_t>(i)] * Rational(i);
    return out;
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
    const long da = rat_degree(a), db = rat_degree(b);
    if (da < 0 || db < 0) return {};
    RatPoly out(static_cast<size_t>(da + db) + 1, Rational(0));
    for (long i = 0; i <= da; ++i)
        for (long j = 0; j <= db; ++j)
            out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return out;
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

RatPoly rat_rem(const RatPoly& a, const RatPoly& b, RatPoly* q) {
    const long db = rat_degree(b);
    if (db < 0) throw Error("polynomial division by zero");
    RatPoly rem = a;
    long dr = rat_degree(rem);
    RatPoly quot(dr >= db ? static_cast<size_t>(dr - db) + 1 : 1, Rational(0));
    const Rational& blc = b[static_cast<size_t>(db)];
    while ((dr = rat_degree(rem)) >= db) {
        Rational f = rem[static_cast<size_t>(dr)] / blc;
        quot[static_cast<size_t>(dr - db)] = f;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
        rem[static_cast<size_t>(dr)] = 0;
    }
    if (q) *q = quot;
    rem.resize(db >= 1 ? static_cast<size_t>(db) : 1, Rational(0));
    return rem;
}

Rational rat_eval(const RatPoly& f, const Rational& x) {
    Rational acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

long MultiplicityProfile::simple_part_degree() const {
    long d = 0;
    for (const Factor& f : factors)
        if (f.mult == 1) d += f.poly.degree();
    return d;
}

namespace {

// Pseudo-remainder: lc(B)^{deg A - deg B + 1} * A = Q*B + R.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    const long db = b.degree();
    if (db < 0) throw Error("pseudo-division by zero");
    IntPoly r = a;
    long e = a.degree() - db + 1;
    const Int& l = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        IntPoly lead = IntPoly::monomial(r.lc(), static_cast<size_t>(r.degree() - db));
        r = r * l - lead * b;
        --e;
    }
    if (e > 0) {
        Int scale(1);
        mpz_pow_ui(scale.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(e));
        r = r * scale;
    }
    return r;
}

} // namespace

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0)");
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

namespace {

RatPoly rat_monic(const RatPoly& f) {
    const long d = rat_degree(f);
    if (d < 0) return {};
    RatPoly out(static_cast<size_t>(d) + 1);
    const Rational& l = f[static_cast<size_t>(d)];
    for (long i = 0; i <= d; ++i) out[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] / l;
    return out;
}

RatPoly rat_gcd_monic(RatPoly a, RatPoly b) {
    while (rat_degree(b) >= 0) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (rat_degree(b) < 0) break;
    }
    return rat_monic(a);
}

RatPoly rat_divexact(const RatPoly& a, const RatPoly& b) {
    RatPoly q;
    RatPoly r = rat_rem(a, b, &q);
    if (rat_degree(r) >= 0) throw Error("inexact rational polynomial division");
    return q;
}

} // namespace

MultiplicityProfile squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw Error("squarefree decomposition of zero");
    MultiplicityProfile out;
    out.unit = Rational(1);
    if (f.degree() == 0) {
        out.unit = Rational(f.lc());
        return out;
    }
    // Yun's algorithm over Q; factors are primitivized on emission.
    RatPoly fr = to_rat(f);
    RatPoly g = rat_gcd_monic(fr, rat_derivative(fr));
    RatPoly b = rat_divexact(fr, g);
    RatPoly c = rat_divexact(rat_derivative(fr), g);
    RatPoly d = rat_sub(c, rat_derivative(b));
    unsigned i = 1;
    while (rat_degree(b) > 0) {
        RatPoly a = rat_degree(d) < 0 ? rat_monic(b) : rat_gcd_monic(b, d);
        if (rat_degree(a) > 0) {
            IntPoly fac = clear_denominators(a);
            if (sgn(fac.lc()) < 0) fac = -fac;
            out.factors.push_back({fac.primitive_part(), i});
        }
        b = rat_divexact(b, a);
        c = rat_divexact(d, a);
        d = rat_sub(c, rat_derivative(b));
        ++i;
    }
    Rational prod_lc(1);
    for (const auto& fac : out.factors)
        prod_lc *= pow_rational(Rational(fac.poly.lc()), static_cast<long>(fac.mult));
    out.unit = Rational(f.lc()) / prod_lc;
    return out;
}

long count_simple_roots(const IntPoly& f) {
    if (f.is_zero()) throw Error("count_simple_roots of zero");
    return squarefree_decomposition(f).simple_part_degree();
}

bool is_pth_power(const Rational& a, unsigned long p) {
    if (sgn(a) == 0) throw Error("is_pth_power of zero");
    return exact_rational_root(a, p).has_value();
}

namespace {

std::vector<unsigned long> prime_divisors(unsigned long m) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

} // namespace

BinomialVerdict binomial_irreducible(unsigned long m, const Rational& a) {
    if (m < 1) throw Error("binomial degree must be >= 1");
    if (sgn(a) == 0) throw Error("binomial with a = 0");
    if (m == 1) return {true, "degree 1"};
    for (unsigned long p : prime_divisors(m)) {
        if (auto c = exact_rational_root(a, p)) {
            return {false, "a = (" + to_string(*c) + ")^" + std::to_string(p) +
                               " with p = " + std::to_string(p) + " dividing m"};
        }
    }
    if (m % 4 == 0) {
        const Rational t = -a / 4;
        // a in -4 Q^4 iff -a/4 is a fourth power; test as two square roots.
        if (sgn(t) > 0) {
            if (auto s = exact_rational_root(t, 2)) {
                if (auto c = exact_rational_root(*s, 2)) {
                    return {false, "a = -4*(" + to_string(*c) + ")^4"};
                }
            }
        }
    }
    return {true, "no p-th power for p | m; not in -4*Q^4"};
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant with zero polynomial");
    IntPoly a = f, b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) s = -s;
        std::swap(a, b);
    }
    const Int ca = a.content(), cb = b.content();
    a = a.exact_div(IntPoly::constant(ca));
    b = b.exact_div(IntPoly::constant(cb));
    Int t = pow_int(ca, static_cast<unsigned long>(b.degree())) *
            pow_int(cb, static_cast<unsigned long>(a.degree()));
    if (b.degree() == 0) {
        Int r = pow_int(b[0], static_cast<unsigned long>(a.degree()));
        return Int(s) * t * r;
    }
    Int gg(1), h(1);
    while (true) {
        const long da = a.degree(), db = b.degree();
        const long delta = da - db;
        if ((da % 2 != 0) && (db % 2 != 0)) s = -s;
        IntPoly r = prem(a, b);
        a = b;
        Int denom = gg * pow_int(h, static_cast<unsigned long>(delta));
        b = r.exact_div(IntPoly::constant(denom));
        gg = a.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            Int gd = pow_int(gg, static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gd;
            } else {
                Int hd = pow_int(h, static_cast<unsigned long>(delta - 1));
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
                if (sgn(rem) != 0) throw Error("subresultant bookkeeping division not exact");
                h = q;
            }
        }
        if (b.is_zero()) return Int(0);
        if (b.degree() == 0) {
            const long dA = a.degree();
            Int number = pow_int(b[0], static_cast<unsigned long>(dA));
            Int denom2 = pow_int(h, static_cast<unsigned long>(dA - 1));
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), number.get_mpz_t(), denom2.get_mpz_t());
            if (sgn(rem) != 0) throw Error("subresultant final division not exact");
            return Int(s) * t * q;
        }
    }
}

Int discriminant(const IntPoly& f) {
    const long d = f.degree();
    if (d < 1) throw Error("discriminant needs degree >= 1");
    if (d == 1) return Int(1);
    Int res = resultant(f, f.derivative());
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    if (sgn(rem) != 0) throw Error("discriminant division not exact");
    const long e = (d * (d - 1) / 2) % 2;
    return e == 0 ? q : Int(-q);
}

namespace {

// f(X + t) for integer t, by synthetic (Taylor) shift.
IntPoly shift_arg(const IntPoly& f, const Int& t) {
    if (f.is_zero()) return IntPoly();
    IntPoly acc;
    const IntPoly lin({t, Int(1)}); // X + t
    for (size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * lin + IntPoly::constant(f[i]);
    return acc;
}

RatPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences, then expansion.
    const size_t n = xs.size();
    std::vector<Rational> coef = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    RatPoly acc{coef[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // acc = acc*(X - xs[i]) + coef[i]
        RatPoly shifted(acc.size() + 1, Rational(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            shifted[k + 1] += acc[k];
            shifted[k] -= acc[k] * xs[i];
        }
        shifted[0] += coef[i];
        acc = std::move(shifted);
    }
    return acc;
}

} // namespace

IntPoly difference_polynomial(const IntPoly& f) {
    const long m = f.degree();
    if (m < 2) throw Error("difference polynomial needs degree >= 2");
    if (!is_squarefree(f)) throw Error("difference polynomial requires squarefree input");
    const long n_points = m * m + 1;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(n_points));
    ys.reserve(static_cast<size_t>(n_points));
    for (long i = 0; i < n_points; ++i) {
        const long t = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);
        IntPoly ft = shift_arg(f, Int(t));
        xs.emplace_back(t);
        ys.emplace_back(t == 0 ? Int(0) : resultant(f, ft));
    }
    RatPoly interp = lagrange_interpolate(xs, ys);
    std::vector<Int> coeffs;
    coeffs.reserve(interp.size());
    for (const Rational& c : interp) {
        if (den(c) != 1) throw Error("difference polynomial interpolation not integral");
        coeffs.push_back(num(c));
    }
    IntPoly full(std::move(coeffs));
    IntPoly d = full.shift_down(static_cast<size_t>(m));
    if (d.degree() != m * (m - 1))
        throw Error("difference polynomial has unexpected degree " + std::to_string(d.degree()));
    return d;
}

IntPoly translate_roots(const IntPoly& f, const Rational& r) {
    if (f.is_zero()) return IntPoly();
    // den^deg * f(X - r), then primitive part.
    RatPoly acc{Rational(0)};
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        // acc = acc*(X - r) + c_i
        RatPoly shifted(acc.size() + 1, Rational(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            shifted[k + 1] += acc[k];
            shifted[k] -= acc[k] * r;
        }
        shifted[0] += Rational(f[i]);
        acc = std::move(shifted);
    }
    IntPoly out = clear_denominators(acc);
    return sgn(out.lc()) < 0 ? (-out).primitive_part() : out.primitive_part();
}

IntPoly scale_roots(const IntPoly& f, const Rational& c) {
    if (sgn(c) == 0) throw Error("scale_roots by zero");
    RatPoly acc;
    const long d = f.degree();
    for (long i = 0; i <= d; ++i)
        acc.push_back(Rational(f[static_cast<size_t>(i)]) * pow_rational(1 / c, i));
    IntPoly out = clear_denominators(acc);
    return sgn(out.lc()) < 0 ? (-out).primitive_part() : out.primitive_part();
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + msg +
                    " in \"" + s + "\"");
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Rational read_number() {
        skip_ws();
        std::string digits;
        size_t count = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++count;
        }
        if (count == 0) fail("expected digits");
        Int n(digits, 10);
        if (eat('/')) {
            skip_ws();
            std::string ddigits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ddigits += s[pos++];
            if (ddigits.empty()) fail("expected denominator digits");
            return make_rational(n, Int(ddigits, 10));
        }
        return Rational(n);
    }
    unsigned long read_exponent() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty()) fail("expected exponent digits");
        return std::stoul(digits);
    }

    RatPoly parse_sum() {
        RatPoly acc{Rational(0)};
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign_factor = 1;
            if (eat('+')) {
                sign_factor = 1;
            } else if (eat('-')) {
                sign_factor = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, exp] = parse_term();
            if (acc.size() < exp + 1) acc.resize(exp + 1, Rational(0));
            acc[exp] += coeff * sign_factor;
            skip_ws();
        }
        return acc;
    }

    std::pair<Rational, unsigned long> parse_term() {
        skip_ws();
        Rational coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = read_number();
            have_coeff = true;
        }
        skip_ws();
        if (pos < s.size() && (s[pos] == '*')) {
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
            ++pos;
            unsigned long exp = 1;
            if (eat('^')) exp = read_exponent();
            return {coeff, exp};
        }
        if (!have_coeff) fail("expected coefficient or variable");
        return {coeff, 0};
    }
};

} // namespace

IntPoly parse_poly(const std::string& text) {
    size_t b = 0;
    while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    if (b < text.size() && text[b] == '[') {
        size_t e = text.find_last_of(']');
        if (e == std::string::npos)
            throw Error("polynomial parse error: '[' without matching ']' in \"" + text + "\"");
        std::string inner = text.substr(b + 1, e - b - 1);
        RatPoly coeffs;
        std::string item;
        std::istringstream ss(inner);
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
        if (coeffs.empty())
            throw Error("polynomial parse error: empty coefficient list in \"" + text + "\"");
        return clear_denominators(coeffs);
    }
    PolyParser p(text);
    RatPoly sum = p.parse_sum();
    if (rat_degree(sum) < 0)
        throw Error("polynomial parse error: zero polynomial in \"" + text + "\"");
    return clear_denominators(sum);
}

} // namespace umlab::polyring
