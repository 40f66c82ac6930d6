#ifndef UMLAB_CERTIFY_HPP
#define UMLAB_CERTIFY_HPP

#include "umlab/algebraic.hpp"
#include "umlab/curves.hpp"
#include "umlab/galois.hpp"
#include "umlab/heights.hpp"
#include "umlab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace umlab::certify {

using exactnum::AlgebraicNumber;
using polyring::IntPoly;

struct Budgets {
    unsigned long denominator_bits = 10'000'000; // cap on b^{e_n} bit sizes
    unsigned precision_bits = 256;               // starting mpfr ladder precision
    unsigned long prime_budget = 1000;
    int refine_attempts = 3;
};

// ---------------------------------------------------------------- L numbers

struct LRow {
    unsigned long n = 0;
    Rational alpha;
    LogExpr height;    // e_n * log b, cross-checked against log max(|p|, q)
    Rational v;        // (e_{n+1} - 1) / e_n
    Interval distance; // exact tail enclosure of |lambda - alpha_n|
    LogExpr log_bound; // log of e^{-v_n h(alpha_n)} = -(e_{n+1}-1) log b
};

struct LNumberCertificate {
    LiouvilleSeries series;
    unsigned long n_min = 1, n_max = 0;
    std::vector<LRow> rows;
    Rational a_minimal; // minimal A with h(alpha_{n+1}) <= A v_n h(alpha_n)
};

LNumberCertificate certify_L(const LiouvilleSeries& series, unsigned long n_min,
                             unsigned long n_max, const Budgets& budgets = {});

// ------------------------------------------------------------ U_m sequences

struct NeighborhoodSpec {
    Rational epsilon;          // <= half the distance from lambda to zeros of Q
    Interval lambda_enclosure;
    Rational deriv_bound;      // certified sup of |u'| on the epsilon-disk
};

struct UmRow {
    unsigned long n = 0;
    Rational alpha;
    Rational q_alpha;           // Q(alpha_n); unused by the translate construction
    AlgebraicNumber beta;
    std::optional<LogExpr> height_exact; // root construction
    Interval height_bounds;              // enclosure of h(beta_n)
    Rational w;
    Interval distance;                   // rigorous enclosure of |kappa - beta_n|
    bool in_eps_disk = false;
    std::optional<Rational> deriv_route_dist_hi; // C_deriv * tail_hi when inside the disk
};

struct WilmsCheck {
    IntPoly poly;
    bool certified = false;
    std::string reason;
    IntPoly difference_poly;
    bool difference_squarefree = false;
    galois::GaloisCertificate group;
    long degree_claim = 0; // m(m-1)
};

struct ImSeparation {
    bool certified = false;
    std::string reason;
    long deg_im_gamma_bound = 0; // m(m-1), via the even difference polynomial
    long deg_im_beta_bound = 0;  // m^2
    Interval h_gamma;            // certified enclosure of h(gamma)
    Rational log2_upper;         // the rational upper bound of log 2 used
    Rational c_value;            // explicit C with |kappa - beta| >= e^{-C(h(beta)+1)}
};

struct UmCertificate {
    enum class Construction { root, translate };
    Construction construction = Construction::root;
    unsigned long m = 0;
    LiouvilleSeries series;
    unsigned long n_min = 1, n_max = 0;
    IntPoly poly; // Q for the root construction; minpoly(gamma) for translate

    // root construction
    std::optional<curves::GenusReport> hypotheses;
    std::optional<NeighborhoodSpec> neighborhood;
    long n_deg = 0;          // N = deg Q
    Rational a_constant;     // minimal A of the underlying L certificate
    Rational b_claimed;      // 8 N^2 m A
    bool branch_real_positive = true;
    std::optional<ComplexBox> branch_box; // declared branch when not real-positive

    // translate construction
    std::optional<AlgebraicNumber> gamma;
    std::optional<galois::GaloisCertificate> gamma_group;
    std::optional<WilmsCheck> wilms;
    std::optional<ImSeparation> im_separation;
    bool sparseness_required = false; // the h(alpha_{n+1}) <= A v_n h(alpha_n) chain

    unsigned long lambda_level = 0;
    Interval lambda_enclosure;
    ComplexBox kappa_enclosure;
    Rational c_constant = Rational(1); // C in upper(|kappa-beta_n|) <= C e^{-w_n h}
    Rational b_empirical;
    std::vector<UmRow> rows;
};

// The m isolating boxes of the roots of X^m = a for a ranging over a
// sign-definite real interval, by modulus and angle.
std::vector<ComplexBox> binomial_root_boxes(const Interval& a, unsigned long m, unsigned bits);

// epsilon (half of a certified lower bound on the distance from the lambda
// enclosure to the zeros of Q) plus a certified sup of |u'| = |Q'/(m u^{m-1})|
// over the epsilon-disk. Throws when the enclosure is not separated from the
// zeros at the current precision.
NeighborhoodSpec compute_neighborhood(const IntPoly& q, const Interval& lambda, unsigned long m);

// Theorem-1.2-style construction: beta_n is the m-th root of Q(alpha_n) in
// the declared branch. Distances are enclosed directly by interval
// arithmetic; the derivative-route bound is reported for cross-validation on
// rows inside the epsilon-disk.
UmCertificate construct_um_root(const LiouvilleSeries& series, const IntPoly& q, unsigned long m,
                                const std::optional<ComplexBox>& branch, unsigned long n_min,
                                unsigned long n_max, const Budgets& budgets = {});

// Translate construction: beta_n = gamma + alpha_n with non-real gamma whose
// Galois group is certified symmetric. kappa - beta_n = lambda - alpha_n
// exactly, so distances are the series tail enclosures themselves.
UmCertificate construct_um_translate(const AlgebraicNumber& gamma, const LiouvilleSeries& series,
                                     unsigned long n_min, unsigned long n_max,
                                     const Budgets& budgets = {});

// Certifies that all pairwise differences of roots of f are distinct and
// conjugate, hence of degree exactly m(m-1): needs a symmetric-group
// certificate plus squarefree difference polynomial.
WilmsCheck wilms_check(const IntPoly& f, unsigned long prime_budget = 1000);

// Explicit C such that |kappa - beta| >= e^{-C(h(beta)+1)} for every
// algebraic beta of degree < m, assembled from Liouville's inequality applied
// to Im gamma and a generic Im beta.
ImSeparation im_separation_constant(const AlgebraicNumber& gamma, const WilmsCheck& wilms);

// ------------------------------------------------------------------ gap scan

struct GapReport {
    long degree_bound = 0;
    long coeff_bound = 0;
    std::optional<Rational> height_bound; // optional filter on h(gamma)
    unsigned long candidates_scanned = 0;
    unsigned long members_excluded = 0;

    struct EtaPoint {
        Rational eta;
        Rational log_c; // certified: every candidate has log dist >= log_c - eta*h
        IntPoly worst_minpoly;
        ComplexBox worst_box;
        Interval worst_height;
        Interval worst_distance;
    };
    std::vector<EtaPoint> grid;
    size_t fitted_index = 0; // largest c on the grid
    std::vector<std::string> exceptions;
    bool floor_consistency = false;  // triangle consistency with the Liouville floor
    bool fitted_above_floor = false; // fitted bound does not undercut the floor
};

// Enumerates integer polynomials of degree <= m with coefficients in
// [-coeff_bound, coeff_bound], isolates their roots, drops the certificate
// members, and fits the largest (c, eta) on a power-of-two eta grid with
// every candidate satisfying lower(|kappa - gamma|) >= c e^{-eta h(gamma)}.
GapReport gap_exclusion_scan(const UmCertificate& cert, long coeff_bound,
                             const std::optional<Rational>& height_bound = std::nullopt,
                             const Budgets& budgets = {});

} // namespace umlab::certify

#endif
