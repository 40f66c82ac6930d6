#ifndef UMLAB_NUMBERS_HPP
#define UMLAB_NUMBERS_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace umlab {

// Arbitrary-precision integers and reduced fractions. mpq_class keeps the
// canonical form (gcd(|num|, den) = 1, den >= 1) through arithmetic; every
// construction path below canonicalizes explicitly.
using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A hypothesis failure or inconclusive outcome: the operation declines to
// certify. Distinct from Error so callers (and the CLI exit code) can tell
// "refused" from "broken".
struct Refusal : Error {
    explicit Refusal(const std::string& what) : Error(what) {}
};

Rational make_rational(const Int& num, const Int& den);

// Accepts "p", "p/q", optional leading sign, ASCII digits only.
// Position info is reported on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Int& z);
std::string to_string(const Rational& q);

inline const Int& num(const Rational& q) { return q.get_num(); }
inline const Int& den(const Rational& q) { return q.get_den(); }

inline int sign(const Rational& q) { return sgn(q); }
inline Rational abs(const Rational& q) { return ::abs(q); }

// floor(log2 |q|) + 1 for q != 0; bit size of the larger of num/den.
size_t rational_bit_size(const Rational& q);

// Largest power of p dividing n (n > 0); returns exponent, divides n down.
unsigned long remove_factor(Int& n, unsigned long p);

// Exact integer k-th root if n is a perfect k-th power (n >= 0).
std::optional<Int> exact_root(const Int& n, unsigned long k);

// c with c^k == q, if such a rational exists. Odd k allows negatives.
std::optional<Rational> exact_rational_root(const Rational& q, unsigned long k);

// Directed dyadic rounding of q to `bits` significant bits.
// up=false: result <= q; up=true: result >= q. Exact for dyadics that fit.
Rational round_dyadic(const Rational& q, unsigned bits, bool up);

// Decimal rendering of q with `digits` significant digits (round to nearest),
// used for the "float" fields of certificates. Deterministic.
std::string decimal_string(const Rational& q, unsigned digits = 30);

Int pow_int(const Int& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);

} // namespace umlab

#endif
