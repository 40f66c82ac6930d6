#ifndef UMLAB_GALOIS_HPP
#define UMLAB_GALOIS_HPP

#include "umlab/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umlab::galois {

using polyring::IntPoly;

// Degree pattern of the distinct-degree factorization of f mod p. For p not
// dividing disc(f)*lc(f) this is the cycle type of a Frobenius element of the
// Galois group (Dedekind).
struct CycleTypeSample {
    unsigned long prime = 0;
    std::vector<unsigned> pattern; // sorted ascending, sums to deg f; empty if ramified
    bool ramified = false;
};

enum class GroupVerdict { symmetric, contains_alternating, inconclusive };

std::string verdict_name(GroupVerdict v);

struct GaloisCertificate {
    IntPoly poly;
    GroupVerdict verdict = GroupVerdict::inconclusive;
    std::vector<CycleTypeSample> witnesses; // the samples that justify the verdict
    Int discriminant;
    bool discriminant_square = false;
    unsigned long prime_budget = 0;
    std::optional<unsigned long> transitive_prime; // p with f irreducible mod p
    std::string note;
};

// Factor-degree pattern of f mod p. Requires p not dividing lc(f).
// Ramified primes (p | disc f) carry no pattern.
CycleTypeSample factor_pattern_mod_p(const IntPoly& f, unsigned long p);

// One-sided certification: returns `symmetric` only when sampled Frobenius
// cycle types force the full symmetric group (an m-cycle, an (m-1)-cycle and
// an element some power of which is a transposition, which with transitivity
// is conclusive by Jordan's criterion). `contains_alternating` analogously
// needs 2-transitivity witnesses plus a prime cycle of length <= m-3.
// Never claims a negative: absent witnesses yield `inconclusive`.
GaloisCertificate certify_symmetric(const IntPoly& f, unsigned long prime_budget = 1000);

struct DiscSquare {
    bool is_square;
    Int disc;
};

DiscSquare discriminant_is_square(const IntPoly& f);

// Classification of a sampled pattern; used by the verdict logic and by the
// independent verifier.
bool pattern_is_m_cycle(const std::vector<unsigned>& pattern, long m);
bool pattern_is_m_minus_1_cycle(const std::vector<unsigned>& pattern, long m);
// Exactly one even entry, equal to 2: an odd power of the Frobenius element
// is then a transposition.
bool pattern_powers_to_transposition(const std::vector<unsigned>& pattern);
// Exactly one entry equal to the prime q <= m-3, no other entry divisible by
// q: a power is then a q-cycle.
bool pattern_powers_to_prime_cycle(const std::vector<unsigned>& pattern, long m,
                                   unsigned long* which_prime = nullptr);

} // namespace umlab::galois

#endif
