#ifndef UMLAB_CURVES_HPP
#define UMLAB_CURVES_HPP

#include "umlab/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace umlab::curves {

using polyring::IntPoly;
using polyring::MultiplicityProfile;

// The affine plane curve Y^n = c * Q(X), smooth projective model implied.
// Geometric irreducibility (gcd of n with all root multiplicities of Q is 1)
// is checked on construction.
struct SuperellipticCurve {
    unsigned long n; // cover degree, >= 2
    Rational c;      // nonzero constant
    IntPoly q;
    MultiplicityProfile profile;
    long degree;

    static SuperellipticCurve make(unsigned long n, const Rational& c, const IntPoly& q);
};

// Genus by Riemann-Hurwitz for the degree-n cover (X,Y) -> X:
// 2g - 2 = -2n + sum_i deg(f_i) * (n - gcd(n, m_i)) + (n - gcd(n, deg Q)),
// where (f_i, m_i) runs over the squarefree decomposition of Q and the last
// term accounts for the place at infinity. The even-parity of the right-hand
// side is asserted before dividing.
long superelliptic_genus(const SuperellipticCurve& curve);

struct GenusReport {
    struct Entry {
        unsigned long q;    // prime cover degree
        long genus;
        long branch_points; // finite branch points plus infinity when ramified
        bool irreducible;   // geometric irreducibility held for this q
    };
    unsigned long m = 0;
    IntPoly poly;
    std::vector<Entry> entries;        // one per prime divisor q of m
    std::optional<Entry> quartic;      // the Y^4 = -Q(X)/4 companion when 4 | m
    long k_required = 0;               // simple-zero threshold for the smallest prime
    long k_found = 0;
    bool verdict = false;              // every computed genus >= 2
    bool k_met = false;                // k_found >= k_required
    std::string disclaimer;
};

// Required number of simple zeros as a function of the smallest prime divisor
// p of m: 5 if p = 2, 4 if p = 3, 2 if p >= 5.
long required_simple_zeros(unsigned long smallest_prime);

unsigned long smallest_prime_divisor(unsigned long m);

// For every prime q | m builds Y^q = Q(X) and computes its genus; when 4 | m
// also the companion Y^4 = -Q(X)/4. verdict is true iff all genera are >= 2.
// The conclusion downstream ("all but finitely many rational specializations
// give degree-m roots") rests on Faltings' theorem; the finite exceptional
// sets are not enumerable, which the report states explicitly.
GenusReport verify_degm_hypotheses(unsigned long m, const IntPoly& q);

} // namespace umlab::curves

#endif
