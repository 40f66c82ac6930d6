#include "umlab/certify.hpp"
#include "umlab/jsonio.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace umlab;
using namespace umlab::certify;
using polyring::parse_poly;

namespace {
const IntPoly kBigQ = parse_poly("x^5-10x^4+35x^3-50x^2+24x"); // X(X-1)(X-2)(X-3)(X-4)
}

TEST_CASE("L certificate for the base-2 factorial series") {
    auto series = LiouvilleSeries::factorial(2);
    auto cert = certify_L(series, 1, 6);
    REQUIRE(cert.rows.size() == 6);
    CHECK(cert.rows[0].alpha == Rational(1, 2));
    CHECK(cert.rows[1].alpha == Rational(3, 4));
    CHECK(cert.rows[2].alpha == Rational(49, 64));
    CHECK(cert.rows[1].v == Rational(5, 2));   // (3! - 1)/2!
    CHECK(cert.rows[2].v == Rational(23, 6));  // (4! - 1)/3!
    CHECK(cert.a_minimal == Rational(2));
    for (size_t i = 1; i < cert.rows.size(); ++i) CHECK(cert.rows[i - 1].v < cert.rows[i].v);
}

TEST_CASE("series tail bounds are sound") {
    for (unsigned long base : {2ul, 3ul, 10ul}) {
        auto series = LiouvilleSeries::factorial(base);
        for (unsigned long n = 1; n <= 5; ++n) {
            Interval tail = series.tail_enclosure(n);
            // exact partial tail sum_{n < j <= n+4} b^{-e_j} must sit inside
            Rational partial(0);
            for (unsigned long j = n + 1; j <= n + 4; ++j)
                partial += Rational(Int(1), pow_int(Int(base), series.exponent(j)));
            CHECK(tail.lo <= partial);
            CHECK(partial <= tail.hi);
            // and the enclosure matches alpha_{n+k} - alpha_n
            Rational diff = series.partial_sum(n + 4) - series.partial_sum(n);
            CHECK(diff == partial);
        }
    }
}

TEST_CASE("explicit exponent lists") {
    auto series = LiouvilleSeries::from_list(2, {1, 2, 6, 24, 120});
    CHECK(series.partial_sum(2) == Rational(3, 4));
    CHECK(series.v_lower(2) == Rational(5, 2));
    CHECK(series.max_row() == 4);
    CHECK_THROWS_AS(LiouvilleSeries::from_list(2, {3, 3}), Error);
    CHECK_THROWS_AS((void)series.exponent(6), Error);
}

TEST_CASE("budget guard refuses oversized rows") {
    Budgets tiny;
    tiny.denominator_bits = 100;
    auto series = LiouvilleSeries::factorial(2);
    CHECK_THROWS_WITH_AS(certify_L(series, 1, 9, tiny), doctest::Contains("budget"), Error);
}

TEST_CASE("U_m root construction: the degree-5 fixture at small range") {
    auto series = LiouvilleSeries::factorial(2);
    auto cert = construct_um_root(series, kBigQ, 2, std::nullopt, 1, 3);
    REQUIRE(cert.rows.size() == 3);
    CHECK(cert.n_deg == 5);
    CHECK(cert.a_constant == Rational(2));
    CHECK(cert.b_claimed == Rational(800)); // 8 * 25 * 2 * 2

    const auto& row1 = cert.rows[0];
    CHECK(row1.q_alpha == Rational(105, 32));
    CHECK(row1.beta.minpoly == parse_poly("[-105,0,32]"));
    CHECK(*row1.height_exact == LogExpr::log_of(Int(105), Rational(1, 2)));
    CHECK(!row1.in_eps_disk); // alpha_1 = 1/2 is farther from lambda than eps
    CHECK(cert.rows[1].in_eps_disk);
    CHECK(cert.rows[2].in_eps_disk);
    for (const auto& row : cert.rows) {
        CHECK(sgn(row.w) > 0);
        CHECK(row.distance.hi < 1);
    }
    CHECK(cert.b_empirical <= cert.b_claimed);
    CHECK(cert.hypotheses->verdict);
    CHECK(cert.neighborhood->epsilon > 0);
}

TEST_CASE("U_m root construction refuses bad inputs") {
    auto series = LiouvilleSeries::factorial(2);
    // hypothesis verifier fails: squarefree quartic has genus 1 for q = 2
    CHECK_THROWS_AS(construct_um_root(series, parse_poly("x^4-x-1"), 2, std::nullopt, 1, 3),
                    Refusal);
    // Q = X^2 + 1 shifted: k_found too small -> genus too small
    CHECK_THROWS_AS(construct_um_root(series, parse_poly("x^2+1"), 2, std::nullopt, 1, 3),
                    Refusal);
}

TEST_CASE("wilms check fixtures") {
    auto ok = wilms_check(parse_poly("x^4-x-1"), 1000);
    CHECK(ok.certified);
    CHECK(ok.degree_claim == 12);
    CHECK(ok.difference_squarefree);

    auto refused = wilms_check(parse_poly("x^4-2x^2+9"), 1000);
    CHECK(!refused.certified);
    CHECK(refused.reason.find("D not squarefree") != std::string::npos);

    auto gauss = wilms_check(parse_poly("x^2+1"), 1000);
    CHECK(gauss.certified);
    CHECK(gauss.degree_claim == 2);
    CHECK(gauss.difference_poly == parse_poly("x^2+4"));
}

TEST_CASE("wilms certification implies numerically distinct differences") {
    for (const char* text : {"x^4-x-1", "x^5-x-1", "x^3-3x-1"}) {
        auto w = wilms_check(parse_poly(text), 2000);
        if (!w.certified) continue;
        auto roots = oracles::durand_kerner_roots(w.poly, 512);
        const Rational tol(1, pow_int(Int(10), 30));
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = 0; j < roots.size(); ++j)
                for (size_t k = 0; k < roots.size(); ++k)
                    for (size_t l = 0; l < roots.size(); ++l) {
                        if (i == j || k == l || (i == k && j == l)) continue;
                        Rational dre = roots[i].re - roots[j].re - roots[k].re + roots[l].re;
                        Rational dim = roots[i].im - roots[j].im - roots[k].im + roots[l].im;
                        CHECK((abs(dre) >= tol || abs(dim) >= tol));
                    }
    }
}

TEST_CASE("imaginary-part separation constant") {
    // gamma = i
    exactnum::AlgebraicNumber i_unit;
    i_unit.minpoly = parse_poly("x^2+1");
    i_unit.isolator = ComplexBox(Interval(Rational(-1, 4), Rational(1, 4)),
                                 Interval(Rational(3, 4), Rational(5, 4)));
    auto w = wilms_check(i_unit.minpoly, 1000);
    auto sep = im_separation_constant(i_unit, w);
    CHECK(sep.certified);
    CHECK(sep.deg_im_gamma_bound == 2);
    CHECK(sep.deg_im_beta_bound == 4);
    CHECK(sep.c_value > 0);
    // h(i) = 0, so C = 8 max(2, 5 log 2) = 40 log 2 up to rounding
    CHECK(sep.c_value < Rational(28));
    CHECK(sep.c_value > Rational(27));

    // real gamma is refused
    exactnum::AlgebraicNumber real_root;
    real_root.minpoly = parse_poly("x^2-2");
    real_root.isolator =
        ComplexBox(Interval(Rational(1), Rational(2)), Interval::point(Rational(0)));
    auto w2 = wilms_check(real_root.minpoly, 1000);
    auto sep2 = im_separation_constant(real_root, w2);
    CHECK(!sep2.certified);
}

TEST_CASE("U_m translate construction with gamma = i") {
    exactnum::AlgebraicNumber i_unit;
    i_unit.minpoly = parse_poly("x^2+1");
    i_unit.isolator = ComplexBox(Interval(Rational(-1, 4), Rational(1, 4)),
                                 Interval(Rational(3, 4), Rational(5, 4)));
    auto series = LiouvilleSeries::factorial(2);
    auto cert = construct_um_translate(i_unit, series, 1, 4);
    REQUIRE(cert.rows.size() == 4);
    CHECK(cert.m == 2);
    CHECK(!cert.sparseness_required);
    for (const auto& row : cert.rows) {
        // kappa - beta_n = lambda - alpha_n exactly: the enclosure is the
        // series tail, bit for bit
        Interval tail = series.tail_enclosure(row.n);
        CHECK(row.distance.lo == tail.lo);
        CHECK(row.distance.hi == tail.hi);
        CHECK(row.w == series.v_lower(row.n) / 2);
        // beta_n = alpha_n + i has minpoly ((den X - num)^2 + den^2)/content
        IntPoly expect = polyring::translate_roots(parse_poly("x^2+1"), row.alpha);
        CHECK(row.beta.minpoly == expect);
    }
    CHECK(cert.im_separation.has_value());
    CHECK(cert.im_separation->certified);
    CHECK(cert.wilms->certified);
}

TEST_CASE("translate refuses real gamma and inconclusive groups") {
    auto series = LiouvilleSeries::factorial(2);
    exactnum::AlgebraicNumber real_root;
    real_root.minpoly = parse_poly("x^2-2");
    real_root.isolator =
        ComplexBox(Interval(Rational(1), Rational(2)), Interval::point(Rational(0)));
    CHECK_THROWS_AS(construct_um_translate(real_root, series, 1, 3), Refusal);

    // Klein-four quartic: non-real roots exist but the group is inconclusive
    auto f = parse_poly("x^4-2x^2+9");
    exactnum::AlgebraicNumber gamma;
    gamma.minpoly = f;
    for (const auto& box : exactnum::isolate_roots(f))
        if (!box.is_real_line()) gamma.isolator = box;
    CHECK_THROWS_AS(construct_um_translate(gamma, series, 1, 3), Refusal);
}

TEST_CASE("gap exclusion scan on a small translate certificate") {
    exactnum::AlgebraicNumber i_unit;
    i_unit.minpoly = parse_poly("x^2+1");
    i_unit.isolator = ComplexBox(Interval(Rational(-1, 4), Rational(1, 4)),
                                 Interval(Rational(3, 4), Rational(5, 4)));
    auto series = LiouvilleSeries::factorial(2);
    auto cert = construct_um_translate(i_unit, series, 1, 3);
    auto report = gap_exclusion_scan(cert, 6, std::nullopt);
    CHECK(report.exceptions.empty());
    CHECK(report.candidates_scanned > 100);
    // beta_1 = 1/2 + i has minpoly 4x^2 - 4x + 5, inside the coefficient box
    CHECK(report.members_excluded >= 1);
    CHECK(report.floor_consistency);
    CHECK(report.fitted_above_floor);
    const auto& fitted = report.grid[report.fitted_index];
    CHECK(sgn(fitted.eta) > 0);
}

TEST_CASE("gap scan refuses infeasible bounds") {
    exactnum::AlgebraicNumber i_unit;
    i_unit.minpoly = parse_poly("x^2+1");
    i_unit.isolator = ComplexBox(Interval(Rational(-1, 4), Rational(1, 4)),
                                 Interval(Rational(3, 4), Rational(5, 4)));
    auto series = LiouvilleSeries::factorial(2);
    auto cert = construct_um_translate(i_unit, series, 1, 2);
    CHECK_THROWS_WITH_AS(gap_exclusion_scan(cert, 4000, std::nullopt),
                         doctest::Contains("infeasible"), Error);
}
