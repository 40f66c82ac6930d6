#include "umlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace umlab::certify {

using exactnum::eval_box;
using exactnum::eval_interval;
using exactnum::height_enclosure;
using exactnum::height_of_binomial_root;
using exactnum::height_rational;
using exactnum::isolate_roots;
using exactnum::refine_isolator;

namespace {

LogExpr height_of_alpha(const LiouvilleSeries& s, unsigned long n) {
    // alpha_n < 1 in lowest terms with denominator b^{e_n}
    return LogExpr::log_of(Int(s.base), Rational(s.exponent(n)));
}

void check_budget(const LiouvilleSeries& s, unsigned long row, const Budgets& budgets,
                  const std::string& stage) {
    if (s.bits_for_row(row) > static_cast<double>(budgets.denominator_bits))
        throw Error("denominator bit budget exceeded at stage: " + stage + " (row " +
                    std::to_string(row) + ")");
}

} // namespace

LNumberCertificate certify_L(const LiouvilleSeries& series, unsigned long n_min,
                             unsigned long n_max, const Budgets& budgets) {
    if (n_min < 1 || n_max < n_min) throw Error("bad row range");
    if (n_max > series.max_row()) throw Error("range exceeds the available exponents");
    check_budget(series, n_max, budgets, "certify_L");

    LNumberCertificate cert;
    cert.series = series;
    cert.n_min = n_min;
    cert.n_max = n_max;

    const Int b(series.base);
    for (unsigned long n = n_min; n <= n_max; ++n) {
        LRow row;
        row.n = n;
        row.alpha = series.partial_sum(n);
        row.height = height_rational(row.alpha);
        // structural cross-check: the reduced height is e_n log b exactly
        if (!(row.height == height_of_alpha(series, n)))
            throw Error("row " + std::to_string(n) + ": reduced height disagrees with e_n log b");
        row.v = series.v_lower(n);
        row.distance = series.tail_enclosure(n);
        row.log_bound = LogExpr::log_of(b, -Rational(series.exponent(n + 1) - 1));
        // |lambda - alpha_n| <= e^{-v_n h(alpha_n)}, exact comparison
        if (LogExpr::compare_strict(LogExpr::log_abs(row.distance.hi), row.log_bound) > 0)
            throw Error("row " + std::to_string(n) + ": tail bound exceeds e^{-v_n h}");
        cert.rows.push_back(std::move(row));
    }
    // v_n strictly increasing over the certified range
    for (size_t i = 1; i < cert.rows.size(); ++i)
        if (!(cert.rows[i - 1].v < cert.rows[i].v))
            throw Error("v_n not strictly increasing at row " + std::to_string(cert.rows[i].n));
    // minimal A: h(alpha_{n+1}) = A_n v_n h(alpha_n) with A_n = e_{n+1}/(e_{n+1}-1)
    Rational a_min(0);
    for (unsigned long n = n_min; n < n_max; ++n) {
        const unsigned long next = series.exponent(n + 1);
        Rational an(next, next - 1);
        if (an > a_min) a_min = an;
    }
    if (sgn(a_min) == 0) a_min = Rational(2); // single-row certificate: default bound
    cert.a_minimal = a_min;
    // (1.3)-style rows re-checked symbolically
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        LogExpr rhs = cert.rows[i].height * (cert.rows[i].v * cert.a_minimal);
        if (LogExpr::compare_strict(cert.rows[i + 1].height, rhs) > 0)
            throw Error("sparseness inequality failed at row " + std::to_string(cert.rows[i].n));
    }
    return cert;
}

namespace {

// Lower bound for the distance between a real interval and a complex box.
Rational distance_lower(const Interval& x, const ComplexBox& w) {
    auto gap = [](const Interval& a, const Interval& b) -> Rational {
        if (a.intersects(b)) return Rational(0);
        return a.hi < b.lo ? b.lo - a.hi : a.lo - b.hi;
    };
    const Rational gr = gap(x, w.re);
    const Rational gi = gap(Interval::point(Rational(0)), w.im);
    return std::max(gr, gi);
}

// Certified sup |Q'| and inf |Q| over the epsilon-disk around lambda, via a
// cell covering of the disk. Cells intersecting the disk stay well inside
// twice the root distance, so inf |Q| > 0 is certifiable.
struct DiskBounds {
    Rational sup_qprime;
    Rational inf_q;
};

void cell_bounds(const IntPoly& q, const IntPoly& qp, const ComplexBox& cell, DiskBounds& acc,
                 int depth) {
    Interval aq = abs_squared(eval_box(q, cell));
    if (aq.contains_zero()) {
        if (depth > 12) throw Error("epsilon-disk derivative bound: |Q| not separated from 0");
        const Rational rm = cell.re.mid(), im = cell.im.mid();
        ComplexBox c1(Interval(cell.re.lo, rm), Interval(cell.im.lo, im));
        ComplexBox c2(Interval(rm, cell.re.hi), Interval(cell.im.lo, im));
        ComplexBox c3(Interval(cell.re.lo, rm), Interval(im, cell.im.hi));
        ComplexBox c4(Interval(rm, cell.re.hi), Interval(im, cell.im.hi));
        cell_bounds(q, qp, c1, acc, depth + 1);
        cell_bounds(q, qp, c2, acc, depth + 1);
        cell_bounds(q, qp, c3, acc, depth + 1);
        cell_bounds(q, qp, c4, acc, depth + 1);
        return;
    }
    Interval aqp = abs_box(eval_box(qp, cell), 128);
    Interval aqv = sqrt_interval(aq, 128);
    if (aqp.hi > acc.sup_qprime) acc.sup_qprime = aqp.hi;
    if (sgn(acc.inf_q) == 0 || aqv.lo < acc.inf_q) acc.inf_q = aqv.lo;
}

DiskBounds disk_bounds(const IntPoly& q, const Interval& lambda, const Rational& eps) {
    const IntPoly qp = q.derivative();
    DiskBounds acc{Rational(0), Rational(0)};
    const Rational lo_re = lambda.lo - eps, hi_re = lambda.hi + eps;
    const int grid = 8;
    const Rational dx = (hi_re - lo_re) / grid;
    const Rational dy = (eps * 2) / grid;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            ComplexBox cell(Interval(lo_re + dx * i, lo_re + dx * (i + 1)),
                            Interval(-eps + dy * j, -eps + dy * (j + 1)));
            // skip cells certainly outside the disk
            if (distance_lower(lambda, cell) > eps) continue;
            cell_bounds(q, qp, cell, acc, 0);
        }
    }
    return acc;
}

} // namespace

std::vector<ComplexBox> binomial_root_boxes(const Interval& a, unsigned long m, unsigned bits) {
    if (a.contains_zero()) throw Error("binomial root boxes need a sign-definite interval");
    std::vector<ComplexBox> out;
    Interval rho = nth_root(abs(a), m, bits);
    Interval pi = pi_interval(bits);
    const int odd = sgn(a.lo) < 0 ? 1 : 0;
    for (unsigned long k = 0; k < m; ++k) {
        Interval theta = pi * make_rational(Int(2 * k + odd), Int(m));
        Interval c = cos_interval(theta, bits);
        Interval s = sin_interval(theta, bits);
        out.push_back(ComplexBox(rho * c, rho * s));
    }
    return out;
}

NeighborhoodSpec compute_neighborhood(const IntPoly& q, const Interval& lambda_in,
                                      unsigned long m) {
    // a coarse outward rounding of the enclosure is enough here: it can only
    // shrink epsilon and enlarge the reported sup, both of which stay valid
    const Interval lambda = round_outward(lambda_in, 768);
    IntPoly sf = q.primitive_part();
    if (!polyring::is_squarefree(sf)) {
        auto prof = polyring::squarefree_decomposition(q);
        sf = IntPoly::constant(Int(1));
        for (const auto& f : prof.factors) sf = sf * f.poly;
        sf = sf.primitive_part();
    }
    Rational min_dist(0);
    for (const ComplexBox& rb : isolate_roots(sf)) {
        exactnum::AlgebraicNumber rn{sf, rb, false, ""};
        ComplexBox tight = refine_isolator(rn, Rational(1, 1 << 16)).isolator;
        Rational dl = distance_lower(lambda, tight);
        if (sgn(dl) == 0)
            throw Error("lambda enclosure not separated from a zero of Q");
        if (sgn(min_dist) == 0 || dl < min_dist) min_dist = dl;
    }
    const Rational eps = min_dist / 2;
    DiskBounds db = disk_bounds(q, lambda, eps);
    Interval infq_pow = pow(Interval::point(db.inf_q), static_cast<long>(m - 1));
    Interval root_inf = nth_root(infq_pow, m, 192);
    Rational c_deriv = round_dyadic(db.sup_qprime / (Rational(m) * root_inf.lo), 64, true);
    return NeighborhoodSpec{eps, lambda, c_deriv};
}

namespace {

Rational round_up_small(const Rational& v, unsigned bits = 48) { return round_dyadic(v, bits, true); }
Rational round_down_small(const Rational& v, unsigned bits = 48) {
    return round_dyadic(v, bits, false);
}

struct KappaSetup {
    unsigned long level;
    Interval lambda;
    ComplexBox kappa;
};

KappaSetup kappa_for_root(const LiouvilleSeries& series, const IntPoly& q, unsigned long m,
                          const std::optional<ComplexBox>& branch, unsigned long level,
                          unsigned bits) {
    KappaSetup out;
    out.level = level;
    // outward-compress the enclosure once: all downstream arithmetic then
    // runs on endpoints of ~bits size instead of the raw series denominators
    out.lambda = round_outward(series.lambda_enclosure(level), bits);
    Interval qa = eval_interval(q, out.lambda);
    if (qa.contains_zero())
        throw Error("Q(lambda) enclosure touches zero; raise the lambda level");
    if (!branch) {
        if (sgn(qa.lo) > 0 || m % 2 == 1) {
            out.kappa = ComplexBox(nth_root(qa, m, bits), Interval::point(Rational(0)));
            return out;
        }
        throw Refusal("Q(lambda) < 0 with even m: declare a branch box for the m-th root");
    }
    std::vector<ComplexBox> boxes = binomial_root_boxes(qa, m, bits);
    std::optional<ComplexBox> chosen;
    int inside = 0;
    for (const ComplexBox& b : boxes) {
        if (branch->contains_box(b)) {
            ++inside;
            chosen = b;
        }
    }
    if (inside != 1)
        throw Refusal("declared branch box selects " + std::to_string(inside) +
                      " roots of X^m - Q(lambda); need exactly 1");
    out.kappa = *chosen;
    return out;
}

} // namespace

UmCertificate construct_um_root(const LiouvilleSeries& series, const IntPoly& q, unsigned long m,
                                const std::optional<ComplexBox>& branch, unsigned long n_min,
                                unsigned long n_max, const Budgets& budgets) {
    if (m < 2) throw Error("m must be >= 2 for the root construction");
    UmCertificate cert;
    cert.construction = UmCertificate::Construction::root;
    cert.m = m;
    cert.series = series;
    cert.n_min = n_min;
    cert.n_max = n_max;
    cert.poly = q;
    cert.n_deg = q.degree();
    cert.sparseness_required = true;

    cert.hypotheses = curves::verify_degm_hypotheses(m, q);
    if (!cert.hypotheses->verdict)
        throw Refusal("degree-m hypothesis verifier failed: some cover has genus < 2");

    LNumberCertificate lcert = certify_L(series, n_min, n_max, budgets);
    cert.a_constant = lcert.a_minimal;
    cert.b_claimed = Rational(8) * Rational(cert.n_deg) * Rational(cert.n_deg) * Rational(m) *
                     cert.a_constant;
    cert.branch_real_positive = !branch.has_value();
    cert.branch_box = branch;

    // lambda level and precision ladder; fall back one level when the
    // denominator budget cannot afford the wider enclosure
    unsigned long level = std::max<unsigned long>(n_max + 2, 2);
    if (series.bits_for_row(level) > static_cast<double>(budgets.denominator_bits))
        level = n_max + 1;
    double prec_d = series.bits_for_row(n_max) * 1.1 + 256;
    unsigned bits = std::max<unsigned>(budgets.precision_bits, static_cast<unsigned>(prec_d));

    for (int attempt = 0;; ++attempt) {
        check_budget(series, level, budgets, "lambda enclosure");
        ScopedEndpointBudget guard(bits + 1024);
        KappaSetup setup = kappa_for_root(series, q, m, branch, level, bits);
        cert.lambda_level = setup.level;
        cert.lambda_enclosure = setup.lambda;
        cert.kappa_enclosure = setup.kappa;

        // epsilon and the derivative bound
        try {
            cert.neighborhood = compute_neighborhood(q, setup.lambda, m);
        } catch (const Error&) {
            if (attempt >= budgets.refine_attempts)
                throw Error("lambda enclosure not separated from the zeros of Q "
                            "(stage: neighborhood)");
            if (series.bits_for_row(level + 1) <= static_cast<double>(budgets.denominator_bits))
                ++level;
            bits *= 2;
            continue;
        }
        const Rational eps = cert.neighborhood->epsilon;
        const Rational c_deriv = cert.neighborhood->deriv_bound;

        // rows
        bool too_wide = false;
        cert.rows.clear();
        for (unsigned long n = n_min; n <= n_max && !too_wide; ++n) {
            UmRow row;
            row.n = n;
            row.alpha = series.partial_sum(n);
            row.q_alpha = q.eval(row.alpha);
            if (sgn(row.q_alpha) == 0)
                throw Refusal("row " + std::to_string(n) + ": alpha_n is a zero of Q");
            auto verdict = polyring::binomial_irreducible(m, row.q_alpha);
            if (!verdict.irreducible)
                throw Refusal("row " + std::to_string(n) + ": X^" + std::to_string(m) +
                              " - Q(alpha_n) is reducible (" + verdict.reason +
                              "); certificate refused");
            std::vector<Int> mp(m + 1, Int(0));
            mp[0] = -num(row.q_alpha);
            mp[m] = den(row.q_alpha);
            row.beta.minpoly = IntPoly(std::move(mp));
            row.beta.irreducible_certified = true;
            row.beta.irreducibility_reason = verdict.reason;

            const unsigned row_bits =
                std::max<unsigned>(budgets.precision_bits,
                                   static_cast<unsigned>(series.bits_for_row(n) * 1.1) + 192);
            if (cert.branch_real_positive) {
                if (m % 2 == 0 && sgn(row.q_alpha) < 0)
                    throw Refusal("row " + std::to_string(n) +
                                  ": Q(alpha_n) < 0 has no real m-th root; declare a branch");
                Interval rb = nth_root(Interval::point(row.q_alpha), m, row_bits);
                row.beta.isolator = ComplexBox(rb, Interval::point(Rational(0)));
            } else {
                std::vector<ComplexBox> boxes =
                    binomial_root_boxes(Interval::point(row.q_alpha), m, row_bits);
                int inside = 0;
                for (const ComplexBox& bx : boxes) {
                    if (branch->contains_box(bx)) {
                        ++inside;
                        row.beta.isolator = bx;
                    }
                }
                if (inside != 1)
                    throw Refusal("row " + std::to_string(n) + ": declared branch selects " +
                                  std::to_string(inside) + " roots; need exactly 1");
            }
            row.height_exact = height_of_binomial_root(m, row.q_alpha, verdict);
            row.height_bounds = row.height_exact->enclose(192);

            Interval dist;
            if (cert.kappa_enclosure.is_real_line() && row.beta.is_real()) {
                dist = abs(cert.kappa_enclosure.re - row.beta.isolator.re);
            } else {
                dist = abs_box(cert.kappa_enclosure - row.beta.isolator, row_bits);
            }
            if (sgn(dist.lo) <= 0 || dist.hi > dist.lo * 2) {
                too_wide = true;
                break;
            }
            row.distance = dist;

            // w_n from the rigorous upper enclosure, rounded down
            if (dist.hi >= 1)
                throw Refusal("row " + std::to_string(n) +
                              ": |kappa - beta_n| upper bound is not below 1; no positive w");
            Interval neglog = (-LogExpr::log_abs(dist.hi)).enclose(192);
            Interval ratio = neglog / row.height_exact->enclose(192);
            row.w = round_down_small(ratio.lo);
            if (sgn(row.w) <= 0)
                throw Refusal("row " + std::to_string(n) + ": non-positive exponent w");
            // exact re-check: log(dist.hi) <= -w h(beta_n)
            if (LogExpr::compare_strict(LogExpr::log_abs(dist.hi),
                                        *row.height_exact * -row.w) > 0)
                throw Error("row " + std::to_string(n) + ": w rounding violated the distance bound");

            // epsilon-disk membership and the derivative-route cross-check
            Interval adist = abs(setup.lambda - row.alpha);
            row.in_eps_disk = adist.hi <= eps;
            if (row.in_eps_disk) {
                Rational route = c_deriv * series.tail_enclosure(n).hi;
                row.deriv_route_dist_hi = route;
                if (dist.lo > route)
                    throw Error("row " + std::to_string(n) +
                                ": derivative-route bound inconsistent with the direct enclosure");
            }

            // height sandwich
            LogExpr h_alpha = height_of_alpha(series, n);
            if (LogExpr::compare_strict(*row.height_exact, h_alpha * Rational(2 * cert.n_deg)) > 0)
                throw Error("row " + std::to_string(n) + ": h(beta) <= 2N h(alpha) failed");
            if (LogExpr::compare_strict(h_alpha, *row.height_exact * Rational(2 * m)) > 0)
                throw Error("row " + std::to_string(n) + ": h(alpha) <= 2m h(beta) failed");
            cert.rows.push_back(std::move(row));
        }
        if (!too_wide) break;
        if (attempt >= budgets.refine_attempts)
            throw Error("distance enclosure too wide at precision budget (stage: rows)");
        if (series.bits_for_row(level + 1) <= static_cast<double>(budgets.denominator_bits))
            ++level;
        bits *= 2;
    }

    // strictly increasing w
    for (size_t i = 1; i < cert.rows.size(); ++i)
        if (!(cert.rows[i - 1].w < cert.rows[i].w))
            throw Error("w_n not strictly increasing at row " + std::to_string(cert.rows[i].n));

    // empirical gap constant
    Rational b_emp(0);
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        Interval hi_next = cert.rows[i + 1].height_bounds;
        Interval hi_cur = cert.rows[i].height_bounds;
        Interval ratio = hi_next / (hi_cur * cert.rows[i].w);
        Rational cand = round_up_small(ratio.hi);
        if (cand > b_emp) b_emp = cand;
    }
    cert.b_empirical = b_emp;
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        LogExpr rhs = *cert.rows[i].height_exact * (cert.rows[i].w * cert.b_empirical);
        if (LogExpr::compare_strict(*cert.rows[i + 1].height_exact, rhs) > 0)
            throw Error("empirical gap constant fails its own inequality");
    }
    if (cert.rows.size() >= 2 && cert.b_empirical > cert.b_claimed)
        throw Error("B_empirical exceeds 8 N^2 m A");
    return cert;
}

WilmsCheck wilms_check(const IntPoly& f, unsigned long prime_budget) {
    if (f.degree() < 2) throw Error("wilms check needs degree >= 2");
    if (!polyring::is_squarefree(f)) throw Error("wilms check needs squarefree input");
    WilmsCheck out;
    out.poly = f;
    out.difference_poly = polyring::difference_polynomial(f);
    out.difference_squarefree = polyring::is_squarefree(out.difference_poly);
    out.group = galois::certify_symmetric(f, prime_budget);
    const long m = f.degree();
    out.degree_claim = m * (m - 1);
    const bool symmetric = out.group.verdict == galois::GroupVerdict::symmetric;
    out.certified = symmetric && out.difference_squarefree;
    if (!symmetric && !out.difference_squarefree)
        out.reason = "group certificate inconclusive and D not squarefree";
    else if (!symmetric)
        out.reason = "group certificate inconclusive";
    else if (!out.difference_squarefree)
        out.reason = "D not squarefree";
    return out;
}

ImSeparation im_separation_constant(const AlgebraicNumber& gamma, const WilmsCheck& wilms) {
    ImSeparation out;
    if (gamma.is_real() || gamma.isolator.im.contains_zero()) {
        out.certified = false;
        out.reason = "gamma must be certified non-real";
        return out;
    }
    if (!wilms.certified) {
        out.certified = false;
        out.reason = "wilms check refused: " + wilms.reason;
        return out;
    }
    if (!(wilms.poly == gamma.minpoly))
        throw Error("wilms certificate is for a different polynomial");
    const long m = gamma.minpoly.degree();
    // The degree bound for Im gamma uses the evenness of D: D(X) = E(X^2), so
    // Im gamma is a root of E(-4 X^2) of degree m(m-1).
    for (long i = 1; i <= wilms.difference_poly.degree(); i += 2)
        if (sgn(wilms.difference_poly[static_cast<size_t>(i)]) != 0)
            throw Error("difference polynomial unexpectedly has odd terms");
    out.deg_im_gamma_bound = m * (m - 1);
    out.deg_im_beta_bound = m * m;
    out.h_gamma = height_enclosure(gamma.minpoly, 192);
    out.log2_upper = LogExpr::log_of(Int(2)).enclose(128).hi;
    // |kappa - beta| >= |Im gamma - Im beta|
    //               >= exp(-D1 D2 (h(Im gamma) + h(Im beta) + log 2))
    // with h(Im gamma) <= 2 h(gamma) + 2 log 2, h(Im beta) <= 2 h(beta) + 2 log 2,
    // so the exponent is at most D1 D2 (2 h(beta) + 2 h(gamma) + 5 log 2)
    // and C = D1 D2 max(2, 2 h(gamma) + 5 log 2) works for every h(beta) >= 0.
    Rational scale = Rational(out.deg_im_gamma_bound) * Rational(out.deg_im_beta_bound);
    Rational inner = out.h_gamma.hi * 2 + out.log2_upper * 5;
    out.c_value = scale * std::max(Rational(2), inner);
    out.certified = true;
    return out;
}

UmCertificate construct_um_translate(const AlgebraicNumber& gamma, const LiouvilleSeries& series,
                                     unsigned long n_min, unsigned long n_max,
                                     const Budgets& budgets) {
    exactnum::validate(gamma);
    if (gamma.is_real() || gamma.isolator.im.contains_zero())
        throw Refusal("gamma must be non-real (isolator imaginary part excludes 0)");
    const IntPoly& f = gamma.minpoly;
    const unsigned long m = static_cast<unsigned long>(f.degree());

    UmCertificate cert;
    cert.construction = UmCertificate::Construction::translate;
    cert.m = m;
    cert.series = series;
    cert.n_min = n_min;
    cert.n_max = n_max;
    cert.poly = f;
    cert.n_deg = 0;
    cert.sparseness_required = false; // only Liouville-type rows are needed here
    cert.branch_real_positive = false;

    cert.wilms = wilms_check(f, budgets.prime_budget);
    cert.gamma_group = cert.wilms->group;
    if (cert.gamma_group->verdict != galois::GroupVerdict::symmetric)
        throw Refusal("Galois certificate inconclusive for gamma's minimal polynomial; "
                      "try a larger prime budget or a different gamma");
    cert.im_separation = im_separation_constant(gamma, *cert.wilms);
    if (!cert.im_separation->certified)
        throw Refusal("imaginary-part separation refused: " + cert.im_separation->reason);

    LNumberCertificate lcert = certify_L(series, n_min, n_max, budgets);
    cert.a_constant = lcert.a_minimal; // informational for this construction
    cert.b_claimed = Rational(0);

    unsigned long level = std::max<unsigned long>(n_max + 2, 2);
    if (series.bits_for_row(level) > static_cast<double>(budgets.denominator_bits))
        level = n_max + 1;
    check_budget(series, level, budgets, "lambda enclosure");
    const unsigned tr_bits = std::max<unsigned>(
        budgets.precision_bits, static_cast<unsigned>(series.bits_for_row(n_max) * 1.1) + 256);
    ScopedEndpointBudget guard(tr_bits + 1024);
    cert.lambda_level = level;
    cert.lambda_enclosure = round_outward(series.lambda_enclosure(level), tr_bits);

    AlgebraicNumber g = refine_isolator(gamma, Rational(1, pow_int(Int(2), 160)));
    cert.gamma = g;
    cert.kappa_enclosure =
        ComplexBox(g.isolator.re + cert.lambda_enclosure, g.isolator.im);

    // Root boxes of f, refined once; the Mahler measure of each shifted
    // minimal polynomial is enclosed from these plus the exact shift.
    std::vector<ComplexBox> froots;
    for (const ComplexBox& rb : isolate_roots(f)) {
        AlgebraicNumber rn{f, rb, false, ""};
        froots.push_back(refine_isolator(rn, Rational(1, pow_int(Int(2), 160))).isolator);
    }
    Interval h_gamma = height_enclosure(f, 192);
    const LogExpr log2 = LogExpr::log_of(Int(2));

    for (unsigned long n = n_min; n <= n_max; ++n) {
        UmRow row;
        row.n = n;
        row.alpha = series.partial_sum(n);
        row.beta.minpoly = polyring::translate_roots(f, row.alpha);
        row.beta.isolator = shift(g.isolator, row.alpha);
        row.beta.irreducible_certified = true;
        row.beta.irreducibility_reason =
            "translate of f, irreducible mod p = " +
            std::to_string(cert.gamma_group->transitive_prime.value_or(0));
        // kappa - beta_n = lambda - alpha_n exactly
        row.distance = series.tail_enclosure(n);
        row.w = series.v_lower(n) / 2;

        // certified enclosure of h(beta_n) via the Mahler measure of the
        // shifted minimal polynomial
        Interval mm = Interval::point(abs(Rational(row.beta.minpoly.lc())));
        for (const ComplexBox& rb : froots) {
            Interval mod = abs_box(shift(rb, row.alpha), 192);
            mm = mm * Interval(std::max(mod.lo, Rational(1)), std::max(mod.hi, Rational(1)));
        }
        Interval hb = log_interval(mm, 192) * Rational(1, m);
        row.height_bounds = hb;

        const LogExpr h_alpha = height_of_alpha(series, n);
        // row inequality: tail_hi <= e^{-w_n h(beta_n)}; smallest right side
        // at the upper height endpoint
        LogExpr rhs = LogExpr(-(row.w * hb.hi));
        if (LogExpr::compare_strict(LogExpr::log_abs(row.distance.hi), rhs) > 0)
            throw Refusal("row " + std::to_string(n) +
                          ": h(beta_n) <= 2 h(alpha_n) not yet in force; drop early rows");
        // h(beta_n) within h(alpha_n) +- (h(gamma) + log 2)
        if (LogExpr::compare_strict(LogExpr(hb.hi),
                                    h_alpha + log2 + LogExpr(h_gamma.hi)) > 0)
            throw Error("row " + std::to_string(n) + ": height upper bound violated");
        if (LogExpr::compare_strict(h_alpha - log2 - LogExpr(h_gamma.hi), LogExpr(hb.lo)) > 0)
            throw Error("row " + std::to_string(n) + ": height lower bound violated");
        // paper-form sandwich used by the w_n = v_n/2 chain
        if (LogExpr::compare_strict(LogExpr(hb.hi), h_alpha * Rational(2)) > 0)
            throw Refusal("row " + std::to_string(n) + ": h(beta_n) <= 2 h(alpha_n) failed");
        cert.rows.push_back(std::move(row));
    }

    for (size_t i = 1; i < cert.rows.size(); ++i)
        if (!(cert.rows[i - 1].w < cert.rows[i].w))
            throw Error("w_n not strictly increasing");

    Rational b_emp(0);
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        Interval ratio =
            cert.rows[i + 1].height_bounds / (cert.rows[i].height_bounds * cert.rows[i].w);
        Rational cand = round_up_small(ratio.hi);
        if (cand > b_emp) b_emp = cand;
    }
    cert.b_empirical = b_emp;
    return cert;
}

namespace {

struct Candidate {
    IntPoly minpoly;
    ComplexBox box;
    long degree;
    Interval height;     // enclosure (exact point for rationals)
    Interval distance;   // |kappa - gamma|
    Rational log_dist_lo;
};

} // namespace

GapReport gap_exclusion_scan(const UmCertificate& cert, long coeff_bound,
                             const std::optional<Rational>& height_bound, const Budgets& budgets) {
    if (coeff_bound < 1) throw Error("coefficient bound must be >= 1");
    const long m = static_cast<long>(cert.m);
    GapReport report;
    report.degree_bound = m;
    report.coeff_bound = coeff_bound;
    report.height_bound = height_bound;

    // enumeration size guard
    double total = 0;
    for (long d = 1; d <= m; ++d) total += std::pow(2.0 * coeff_bound + 1, d) * coeff_bound;
    if (total > 8e6) throw Error("scan bounds infeasible: too many candidate polynomials");

    const ComplexBox kappa(round_outward(cert.kappa_enclosure.re, 768),
                           round_outward(cert.kappa_enclosure.im, 768));
    const bool kappa_real = kappa.is_real_line();

    // eta grid: powers of two between 1 and 2 m (m+1) max-row-height
    Rational max_h(0);
    for (const UmRow& row : cert.rows)
        if (row.height_bounds.hi > max_h) max_h = row.height_bounds.hi;
    Rational grid_top = Rational(2 * m * (m + 1)) * max_h;
    std::vector<Rational> etas;
    for (Rational eta(1); eta <= grid_top; eta *= 2) etas.push_back(eta);
    if (etas.empty()) etas.push_back(Rational(1));

    struct Fit {
        bool seen = false;
        Rational min_val;
        Candidate worst;
    };
    std::vector<Fit> fits(etas.size());

    // per-row floor data
    struct RowFloor {
        long deg;
        Rational h_lo, h_hi;       // height bounds of beta_n
        Rational dist_hi;          // upper enclosure of |kappa - beta_n|
        Rational log_upper_lo;     // lower bound of log(dist_hi)
        IntPoly minpoly;
        ComplexBox box;
    };
    std::vector<RowFloor> row_floors;
    for (const UmRow& row : cert.rows) {
        RowFloor rf;
        rf.deg = row.beta.minpoly.degree();
        rf.h_lo = row.height_bounds.lo;
        rf.h_hi = row.height_bounds.hi;
        rf.dist_hi = row.distance.hi;
        rf.log_upper_lo = LogExpr::log_abs(row.distance.hi).enclose(160).lo;
        rf.minpoly = row.beta.minpoly;
        rf.box = row.beta.isolator;
        row_floors.push_back(std::move(rf));
    }
    const Interval log2_iv = LogExpr::log_of(Int(2)).enclose(128);

    bool floor_consistent = true;
    std::vector<std::pair<Rational, Rational>> floor_duty; // (h_lo of candidate, d*m*(h_lo+hb+log2) slope data)
    // candidates with rows where the Liouville floor may be positive, kept for
    // the fitted-above-floor check: (candidate h_lo, candidate degree, row index)
    struct FloorDuty {
        Rational h_lo, h_hi;
        long deg;
        size_t row;
    };
    std::vector<FloorDuty> duties;

    const Rational refine_w = Rational(1, pow_int(Int(2), 120));
    auto process_root = [&](const IntPoly& poly, const ComplexBox& rbox, const Interval& h,
                            int copies) {
        // member exclusion
        for (const RowFloor& rf : row_floors) {
            if (rf.minpoly == poly) {
                exactnum::AlgebraicNumber cand{poly, rbox, false, ""};
                exactnum::AlgebraicNumber member{rf.minpoly, rf.box, false, ""};
                if (exactnum::same_algebraic_number(cand, member)) {
                    report.members_excluded += copies;
                    return;
                }
            }
        }
        if (height_bound && h.lo > *height_bound) return; // outside the scanned height set
        report.candidates_scanned += copies;

        exactnum::AlgebraicNumber cand{poly, rbox, false, ""};
        ComplexBox tight = rbox.max_side() > refine_w
                               ? refine_isolator(cand, refine_w).isolator
                               : rbox;
        Interval dist = kappa_real && tight.is_real_line()
                            ? abs(kappa.re - tight.re)
                            : abs_box(kappa - tight, 192);
        if (sgn(dist.lo) <= 0) {
            report.exceptions.push_back("indeterminate distance for " + poly.str());
            return;
        }
        Candidate c{poly, tight, poly.degree(), h, dist,
                    LogExpr::log_abs(dist.lo).enclose(128).lo};
        for (size_t j = 0; j < etas.size(); ++j) {
            Rational val = c.log_dist_lo + etas[j] * h.lo;
            if (!fits[j].seen || val < fits[j].min_val) {
                fits[j].seen = true;
                fits[j].min_val = val;
                fits[j].worst = c;
            }
        }
        // Liouville floor bookkeeping:
        // floor_n = L(gamma, beta_n) - upper_n with
        // log L = -d_gamma d_beta (h(gamma) + h(beta_n) + log 2).
        for (size_t r = 0; r < row_floors.size(); ++r) {
            const RowFloor& rf = row_floors[r];
            Rational logL_lo =
                -Rational(c.degree * rf.deg) * (h.lo + rf.h_lo + log2_iv.lo); // >= log L
            // floor <= 0 certified when log L <= log upper_n
            Rational logL_hi = -Rational(c.degree * rf.deg) * (h.hi + rf.h_hi + log2_iv.hi);
            if (logL_hi <= rf.log_upper_lo) continue; // floor certainly <= 0
            duties.push_back({h.lo, h.hi, c.degree, r});
            // triangle consistency: L <= |kappa-gamma| + |kappa-beta_n| needs
            // log L <= log(dist_hi + upper_n); sufficient: logL_lo <= log_dist_lo
            if (!(logL_lo <= c.log_dist_lo)) floor_consistent = false;
        }
    };

    auto height_of_poly = [&](const IntPoly& poly,
                              const std::vector<ComplexBox>& roots) -> Interval {
        Interval mm = Interval::point(abs(Rational(poly.lc())));
        for (const ComplexBox& rb : roots) {
            Interval mod = abs_box(rb, 128);
            mm = mm * Interval(std::max(mod.lo, Rational(1)), std::max(mod.hi, Rational(1)));
        }
        return log_interval(mm, 128) * Rational(1, poly.degree());
    };

    // degree 1: rationals -c0/c1 with gcd(c0, c1) = 1, c1 >= 1
    for (long c1 = 1; c1 <= coeff_bound; ++c1) {
        for (long c0 = -coeff_bound; c0 <= coeff_bound; ++c0) {
            if (std::gcd(std::abs(c0), c1) != 1) continue;
            IntPoly poly({Int(c0), Int(c1)});
            Rational root = make_rational(Int(-c0), Int(c1));
            LogExpr h = height_rational(root);
            Interval hv = h.enclose(128);
            process_root(poly, ComplexBox::point(root, Rational(0)), hv, 1);
        }
    }
    // degrees 2..m
    std::vector<long> coeffs;
    std::function<void(long, size_t)> enumerate = [&](long d, size_t idx) {
        if (idx == static_cast<size_t>(d)) {
            for (long lead = 1; lead <= coeff_bound; ++lead) {
                std::vector<Int> v;
                v.reserve(static_cast<size_t>(d) + 1);
                Int content(0);
                for (long x : coeffs) v.push_back(Int(x));
                v.push_back(Int(lead));
                IntPoly poly(std::move(v));
                if (poly.content() != 1) continue; // roots covered by the primitive poly
                if (!polyring::is_squarefree(poly)) continue;
                std::vector<ComplexBox> roots = isolate_roots(poly);
                Interval h = height_of_poly(poly, roots);
                for (const ComplexBox& rb : roots) process_root(poly, rb, h, 1);
            }
            return;
        }
        for (long x = -coeff_bound; x <= coeff_bound; ++x) {
            coeffs[idx] = x;
            enumerate(d, idx + 1);
        }
    };
    for (long d = 2; d <= m; ++d) {
        coeffs.assign(static_cast<size_t>(d), 0);
        enumerate(d, 0);
    }

    // assemble the grid
    for (size_t j = 0; j < etas.size(); ++j) {
        if (!fits[j].seen) throw Error("gap scan found no candidates");
        GapReport::EtaPoint pt;
        pt.eta = etas[j];
        pt.log_c = round_down_small(fits[j].min_val, 64);
        pt.worst_minpoly = fits[j].worst.minpoly;
        pt.worst_box = fits[j].worst.box;
        pt.worst_height = fits[j].worst.height;
        pt.worst_distance = fits[j].worst.distance;
        report.grid.push_back(std::move(pt));
    }

    // fitted pair: the largest c among grid points that dominate the Liouville
    // floor on every flagged candidate/row pair.
    auto point_above_floor = [&](size_t j) {
        for (const FloorDuty& duty : duties) {
            const RowFloor& rf = row_floors[duty.row];
            // need log_c - eta h >= log L for every h in the enclosure; check
            // at the conservative ends.
            Rational lhs = report.grid[j].log_c - etas[j] * duty.h_hi;
            Rational rhs = -Rational(duty.deg * rf.deg) * (duty.h_lo + rf.h_lo + log2_iv.lo);
            if (!(lhs >= rhs)) return false;
        }
        return true;
    };
    bool any_above = false;
    size_t best = 0;
    for (size_t j = 0; j < etas.size(); ++j) {
        if (point_above_floor(j)) {
            any_above = true;
            if (report.grid[j].log_c >= report.grid[best].log_c || !point_above_floor(best))
                best = j;
        }
    }
    if (!any_above) {
        // fall back to the largest c overall and report the failure honestly
        for (size_t j = 1; j < etas.size(); ++j)
            if (report.grid[j].log_c > report.grid[best].log_c) best = j;
    }
    report.fitted_index = best;
    report.fitted_above_floor = any_above;
    report.floor_consistency = floor_consistent;
    (void)budgets;
    return report;
}

} // namespace umlab::certify
