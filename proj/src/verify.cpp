#include "umlab/verify.hpp"

#include <functional>

namespace umlab::verify {

using certify::LiouvilleSeries;
using umlab::LogExpr;
using exactnum::AlgebraicNumber;
using io::json;
using polyring::IntPoly;

namespace {

struct Checker {
    Report report;

    void require(bool ok, const std::string& name) {
        if (!ok) report.violations.push_back(name);
    }
    template <typename F>
    void guarded(const std::string& name, F&& f) {
        try {
            f();
        } catch (const Error& e) {
            report.violations.push_back(name + ": " + e.what());
        }
    }
};

LogExpr height_of_alpha(const LiouvilleSeries& s, unsigned long n) {
    return LogExpr::log_of(Int(s.base), Rational(s.exponent(n)));
}

void check_l_certificate(const json& doc, Checker& c) {
    certify::LNumberCertificate cert = io::l_certificate_from_json(doc);
    const LiouvilleSeries& s = cert.series;
    c.require(!cert.rows.empty(), "certificate has no rows");
    unsigned long expect = cert.n_min;
    for (const auto& row : cert.rows) {
        const std::string tag = "row " + std::to_string(row.n);
        c.require(row.n == expect++, tag + ": row numbering");
        c.guarded(tag, [&] {
            c.require(row.alpha == s.partial_sum(row.n), tag + ": alpha recomputation");
            c.require(row.height == exactnum::height_rational(row.alpha),
                      tag + ": height = log max(|p|, q)");
            c.require(row.height == height_of_alpha(s, row.n), tag + ": height = e_n log b");
            Interval tail = s.tail_enclosure(row.n);
            c.require(row.distance.lo == tail.lo && row.distance.hi == tail.hi,
                      tag + ": distance enclosure recomputation");
            c.require(row.log_bound == row.height * (-row.v),
                      tag + ": log bound = -v_n h(alpha_n)");
            c.require(LogExpr::compare_strict(LogExpr::log_abs(row.distance.hi), row.log_bound) <= 0,
                      tag + ": |lambda - alpha_n| <= e^{-v_n h(alpha_n)}");
        });
    }
    for (size_t i = 1; i < cert.rows.size(); ++i)
        c.require(cert.rows[i - 1].v < cert.rows[i].v, "v_n strictly increasing");
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        const auto& a = cert.rows[i];
        const auto& b = cert.rows[i + 1];
        c.guarded("sparseness", [&] {
            c.require(LogExpr::compare_strict(b.height, a.height * (a.v * cert.a_minimal)) <= 0,
                      "row " + std::to_string(a.n) +
                          ": h(alpha_{n+1}) <= A v_n h(alpha_n)");
        });
    }
}

void check_galois_payload(const json& g, Checker& c, const std::string& prefix) {
    galois::GaloisCertificate cert = io::galois_from_json(g);
    const long m = cert.poly.degree();
    c.guarded(prefix + "discriminant", [&] {
        auto ds = galois::discriminant_is_square(cert.poly);
        c.require(ds.disc == cert.discriminant, prefix + "discriminant recomputation");
        c.require(ds.is_square == cert.discriminant_square, prefix + "discriminant square flag");
    });
    bool m_cycle = false, m1_cycle = false, transposition = false, prime_cycle = false;
    for (const auto& w : cert.witnesses) {
        c.guarded(prefix + "witness p=" + std::to_string(w.prime), [&] {
            auto own = galois::factor_pattern_mod_p(cert.poly, w.prime);
            c.require(own.ramified == w.ramified && own.pattern == w.pattern,
                      prefix + "witness pattern mod " + std::to_string(w.prime));
        });
        if (galois::pattern_is_m_cycle(w.pattern, m)) m_cycle = true;
        if (galois::pattern_is_m_minus_1_cycle(w.pattern, m)) m1_cycle = true;
        if (galois::pattern_powers_to_transposition(w.pattern)) transposition = true;
        if (galois::pattern_powers_to_prime_cycle(w.pattern, m)) prime_cycle = true;
    }
    const bool two_transitive = m_cycle && (m == 2 || m1_cycle);
    if (cert.verdict == galois::GroupVerdict::symmetric)
        c.require(two_transitive && transposition,
                  prefix + "S_m verdict justified by witness patterns");
    if (cert.verdict == galois::GroupVerdict::contains_alternating)
        c.require(two_transitive && prime_cycle && cert.discriminant_square,
                  prefix + "A_m-containment verdict justified by witness patterns");
}

void check_genus_payload(const json& g, Checker& c) {
    curves::GenusReport stored = io::genus_from_json(g);
    c.guarded("genus recomputation", [&] {
        curves::GenusReport own = curves::verify_degm_hypotheses(stored.m, stored.poly);
        c.require(own.k_found == stored.k_found, "k_found recomputation");
        c.require(own.k_required == stored.k_required, "k_required per the smallest prime");
        c.require(own.verdict == stored.verdict, "verdict recomputation");
        c.require(own.entries.size() == stored.entries.size(), "per-prime entry count");
        for (size_t i = 0; i < own.entries.size() && i < stored.entries.size(); ++i) {
            c.require(own.entries[i].q == stored.entries[i].q &&
                          own.entries[i].genus == stored.entries[i].genus &&
                          own.entries[i].irreducible == stored.entries[i].irreducible,
                      "genus entry for q = " + std::to_string(stored.entries[i].q));
        }
        c.require(own.quartic.has_value() == stored.quartic.has_value(), "quartic companion");
        if (own.quartic && stored.quartic)
            c.require(own.quartic->genus == stored.quartic->genus, "quartic companion genus");
        c.require(!stored.disclaimer.empty(), "finiteness disclaimer present");
    });
}

void check_wilms_payload(const json& w, Checker& c) {
    certify::WilmsCheck stored = io::wilms_from_json(w);
    c.guarded("wilms recomputation", [&] {
        const long m = stored.poly.degree();
        IntPoly own_d = polyring::difference_polynomial(stored.poly);
        c.require(own_d == stored.difference_poly, "difference polynomial recomputation");
        c.require(polyring::is_squarefree(own_d) == stored.difference_squarefree,
                  "difference polynomial squarefree flag");
        c.require(stored.degree_claim == m * (m - 1), "degree claim m(m-1)");
        const bool symmetric = stored.group.verdict == galois::GroupVerdict::symmetric;
        c.require(stored.certified == (symmetric && stored.difference_squarefree),
                  "wilms verdict consistency");
    });
    check_galois_payload(w.at("group"), c, "wilms group: ");
}

// Rigorous own enclosure of h(beta) from the minimal polynomial, via the
// polynomial's own isolated roots (independent of how the certificate
// computed it).
Interval own_height_bounds(const IntPoly& minpoly) {
    return exactnum::height_enclosure(minpoly, 160);
}

void check_um_certificate(const json& doc, Checker& c) {
    certify::UmCertificate cert = io::um_certificate_from_json(doc);
    const LiouvilleSeries& s = cert.series;
    const bool root = cert.construction == certify::UmCertificate::Construction::root;
    c.require(!cert.rows.empty(), "certificate has no rows");

    const unsigned work_bits = std::max<unsigned>(
        512, static_cast<unsigned>(s.bits_for_row(cert.n_max) * 1.1) + 256);
    ScopedEndpointBudget guard(work_bits + 1024);
    Interval own_lambda_exact = s.lambda_enclosure(cert.lambda_level);
    // stored enclosure must contain the exact one (it was outward-rounded)
    c.require(cert.lambda_enclosure.lo <= own_lambda_exact.lo &&
                  own_lambda_exact.hi <= cert.lambda_enclosure.hi,
              "lambda enclosure recomputation");
    c.require(cert.lambda_enclosure.width() <=
                  own_lambda_exact.width() + pow_rational(Rational(1, 2), 256),
              "lambda enclosure not too wide");
    Interval own_lambda = round_outward(own_lambda_exact, work_bits);

    if (root) {
        c.require(cert.hypotheses.has_value(), "hypothesis report present");
        if (cert.hypotheses) {
            json g = io::genus_to_json(*cert.hypotheses);
            check_genus_payload(g, c);
            c.require(cert.hypotheses->verdict, "hypothesis verdict is true");
        }
        c.require(cert.n_deg == cert.poly.degree(), "N = deg Q");
        c.require(cert.b_claimed == Rational(8) * Rational(cert.n_deg) * Rational(cert.n_deg) *
                                        Rational(cert.m) * cert.a_constant,
                  "B_claimed = 8 N^2 m A");

        // own kappa
        c.guarded("kappa enclosure", [&] {
            Interval qa = exactnum::eval_interval(cert.poly, own_lambda);
            c.require(!qa.contains_zero(), "Q(lambda) separated from zero");
            ComplexBox own_kappa;
            if (cert.branch_real_positive) {
                c.require(sgn(qa.lo) > 0 || cert.m % 2 == 1,
                          "real branch requires Q(lambda) > 0 or odd m");
                own_kappa = ComplexBox(nth_root(qa, cert.m, 512), Interval::point(Rational(0)));
            } else {
                c.require(cert.branch_box.has_value(), "declared branch box present");
                int inside = 0;
                for (const ComplexBox& b : certify::binomial_root_boxes(qa, cert.m, 512)) {
                    if (cert.branch_box->contains_box(b)) {
                        ++inside;
                        own_kappa = b;
                    }
                }
                c.require(inside == 1, "declared branch selects exactly one root");
            }
            c.require(own_kappa.intersects(cert.kappa_enclosure),
                      "kappa enclosure consistent with recomputation");
        });

        // neighborhood
        c.require(cert.neighborhood.has_value(), "neighborhood spec present");
        if (cert.neighborhood) {
            c.guarded("neighborhood", [&] {
                certify::NeighborhoodSpec own =
                    certify::compute_neighborhood(cert.poly, own_lambda, cert.m);
                c.require(cert.neighborhood->epsilon <= own.epsilon * 2,
                          "epsilon <= half the distance to the zeros of Q");
                c.require(cert.neighborhood->deriv_bound >= own.deriv_bound,
                          "derivative bound not understated");
            });
        }
    } else {
        c.require(cert.gamma.has_value(), "gamma present");
        c.require(cert.gamma_group.has_value(), "gamma group certificate present");
        if (cert.gamma_group) {
            check_galois_payload(doc.at("gamma_group"), c, "gamma group: ");
            c.require(cert.gamma_group->verdict == galois::GroupVerdict::symmetric,
                      "gamma group certified S_m");
        }
        if (cert.gamma) {
            c.guarded("gamma", [&] {
                exactnum::validate(*cert.gamma);
                c.require(!cert.gamma->isolator.im.contains_zero(), "gamma non-real");
                c.require(cert.gamma->minpoly == cert.poly, "gamma minpoly matches certificate");
                ComplexBox own_kappa(cert.gamma->isolator.re + own_lambda,
                                     cert.gamma->isolator.im);
                c.require(own_kappa.intersects(cert.kappa_enclosure),
                          "kappa enclosure consistent with recomputation");
            });
        }
        c.require(cert.wilms.has_value(), "wilms check present");
        if (cert.wilms) check_wilms_payload(doc.at("wilms"), c);
        c.require(cert.im_separation.has_value(), "imaginary-part separation present");
        if (cert.im_separation && cert.wilms) {
            c.guarded("im separation", [&] {
                const auto& sep = *cert.im_separation;
                const long m = static_cast<long>(cert.m);
                c.require(sep.certified, "im separation certified");
                c.require(sep.deg_im_gamma_bound == m * (m - 1), "deg(Im gamma) <= m(m-1)");
                c.require(sep.deg_im_beta_bound == m * m, "deg(Im beta) <= m^2");
                for (long i = 1; i <= cert.wilms->difference_poly.degree(); i += 2)
                    c.require(sgn(cert.wilms->difference_poly[static_cast<size_t>(i)]) == 0,
                              "difference polynomial even (degree bound for Im gamma)");
                Interval own_h = exactnum::height_enclosure(cert.poly, 192);
                c.require(sep.h_gamma.hi >= own_h.lo && sep.h_gamma.lo <= own_h.hi,
                          "h(gamma) enclosure consistent");
                Rational log2_hi = LogExpr::log_of(Int(2)).enclose(128).hi;
                Rational needed = Rational(sep.deg_im_gamma_bound) *
                                  Rational(sep.deg_im_beta_bound) *
                                  std::max(Rational(2), Rational(own_h.lo * 2 + log2_hi * 5));
                c.require(sep.c_value >= needed, "C >= D1 D2 max(2, 2 h(gamma) + 5 log 2)");
            });
        }
    }

    // rows
    std::vector<ComplexBox> own_froots;
    if (!root) {
        for (const ComplexBox& rb : exactnum::isolate_roots(cert.poly)) {
            AlgebraicNumber rn{cert.poly, rb, false, ""};
            own_froots.push_back(
                exactnum::refine_isolator(rn, Rational(1, pow_int(Int(2), 160))).isolator);
        }
    }
    unsigned long expect = cert.n_min;
    for (const auto& row : cert.rows) {
        const std::string tag = "row " + std::to_string(row.n);
        c.require(row.n == expect++, tag + ": row numbering");
        c.guarded(tag, [&] {
            c.require(row.alpha == s.partial_sum(row.n), tag + ": alpha recomputation");
            const LogExpr h_alpha = height_of_alpha(s, row.n);
            if (root) {
                c.require(row.q_alpha == cert.poly.eval(row.alpha),
                          tag + ": Q(alpha_n) recomputation");
                auto verdict = polyring::binomial_irreducible(cert.m, row.q_alpha);
                c.require(verdict.irreducible, tag + ": binomial irreducibility");
                std::vector<Int> mp(cert.m + 1, Int(0));
                mp[0] = -num(row.q_alpha);
                mp[cert.m] = den(row.q_alpha);
                c.require(row.beta.minpoly == IntPoly(std::move(mp)),
                          tag + ": minpoly = den X^m - num of Q(alpha_n)");
                c.require(row.height_exact.has_value(), tag + ": exact height present");
                if (row.height_exact)
                    c.require(*row.height_exact ==
                                  exactnum::height_of_binomial_root(cert.m, row.q_alpha, verdict),
                              tag + ": h(beta_n) = (1/m) h(Q(alpha_n))");

                // own distance enclosure from scratch
                const unsigned row_bits =
                    static_cast<unsigned>(s.bits_for_row(row.n) * 1.1) + 256;
                Interval qa = exactnum::eval_interval(cert.poly, own_lambda);
                Interval own_dist;
                if (cert.branch_real_positive) {
                    c.require(row.beta.is_real(), tag + ": real-branch isolator on the real line");
                    Interval own_beta =
                        nth_root(Interval::point(row.q_alpha), cert.m, row_bits);
                    c.require(own_beta.intersects(row.beta.isolator.re),
                              tag + ": beta isolator consistent with recomputation");
                    Interval own_kappa = nth_root(qa, cert.m, row_bits);
                    own_dist = abs(own_kappa - own_beta);
                } else {
                    ComplexBox own_kappa, own_beta;
                    int ik = 0, ib = 0;
                    for (const ComplexBox& b :
                         certify::binomial_root_boxes(qa, cert.m, row_bits))
                        if (cert.branch_box->contains_box(b)) ++ik, own_kappa = b;
                    for (const ComplexBox& b : certify::binomial_root_boxes(
                             Interval::point(row.q_alpha), cert.m, row_bits))
                        if (cert.branch_box->contains_box(b)) ++ib, own_beta = b;
                    c.require(ik == 1 && ib == 1, tag + ": branch selects one root");
                    c.require(own_beta.intersects(row.beta.isolator),
                              tag + ": beta isolator consistent with recomputation");
                    own_dist = abs_box(own_kappa - own_beta, row_bits);
                }
                c.require(row.distance.hi >= own_dist.lo,
                          tag + ": stored distance upper not below the true distance");
                c.require(row.distance.lo <= own_dist.hi,
                          tag + ": stored distance lower not above the true distance");
                // the certified inequality, from stored exact data
                LogExpr bound = *row.height_exact * -row.w;
                if (sgn(cert.c_constant) != 0 && cert.c_constant != 1)
                    bound = bound + LogExpr::log_abs(cert.c_constant);
                c.require(LogExpr::compare_strict(LogExpr::log_abs(row.distance.hi), bound) <= 0,
                          tag + ": upper(|kappa - beta_n|) <= C e^{-w_n h(beta_n)}");
                c.require(LogExpr::compare_strict(*row.height_exact,
                                                  h_alpha * Rational(2 * cert.n_deg)) <= 0,
                          tag + ": h(beta_n) <= 2N h(alpha_n)");
                c.require(LogExpr::compare_strict(h_alpha,
                                                  *row.height_exact * Rational(2 * cert.m)) <= 0,
                          tag + ": h(alpha_n) <= 2m h(beta_n)");
                if (cert.neighborhood) {
                    Interval adist = abs(own_lambda - row.alpha);
                    bool inside = adist.hi <= cert.neighborhood->epsilon;
                    c.require(inside == row.in_eps_disk, tag + ": epsilon-disk flag");
                    if (row.deriv_route_dist_hi) {
                        Rational route =
                            cert.neighborhood->deriv_bound * s.tail_enclosure(row.n).hi;
                        c.require(*row.deriv_route_dist_hi == route,
                                  tag + ": derivative-route bound recomputation");
                        c.require(row.distance.lo <= route,
                                  tag + ": derivative-route bound consistent with enclosure");
                    }
                }
            } else {
                c.require(row.beta.minpoly == polyring::translate_roots(cert.poly, row.alpha),
                          tag + ": minpoly is the alpha_n-translate of f");
                Interval tail = s.tail_enclosure(row.n);
                c.require(row.distance.lo == tail.lo && row.distance.hi == tail.hi,
                          tag + ": distance enclosure equals the series tail exactly");
                c.require(row.w == s.v_lower(row.n) / 2, tag + ": w_n = v_n / 2");
                // own height bounds via the certificate's own root boxes of f
                Interval mm = Interval::point(abs(Rational(row.beta.minpoly.lc())));
                for (const ComplexBox& rb : own_froots) {
                    Interval mod = abs_box(shift(rb, row.alpha), 192);
                    mm = mm * Interval(std::max(mod.lo, Rational(1)),
                                       std::max(mod.hi, Rational(1)));
                }
                Interval own_h = log_interval(mm, 192) * Rational(1, cert.m);
                c.require(row.height_bounds.hi >= own_h.lo && row.height_bounds.lo <= own_h.hi,
                          tag + ": h(beta_n) enclosure consistent with recomputation");
                c.require(LogExpr::compare_strict(LogExpr::log_abs(row.distance.hi),
                                                  LogExpr(-(row.w * row.height_bounds.hi))) <= 0,
                          tag + ": upper(|kappa - beta_n|) <= e^{-w_n h(beta_n)}");
                const LogExpr log2 = LogExpr::log_of(Int(2));
                Interval h_gamma = exactnum::height_enclosure(cert.poly, 160);
                c.require(LogExpr::compare_strict(LogExpr(row.height_bounds.hi),
                                                  h_alpha + log2 + LogExpr(h_gamma.hi)) <= 0,
                          tag + ": h(beta_n) <= h(alpha_n) + h(gamma) + log 2");
                c.require(LogExpr::compare_strict(h_alpha - log2 - LogExpr(h_gamma.hi),
                                                  LogExpr(row.height_bounds.lo)) <= 0,
                          tag + ": h(beta_n) >= h(alpha_n) - h(gamma) - log 2");
                c.require(LogExpr::compare_strict(LogExpr(row.height_bounds.hi),
                                                  h_alpha * Rational(2)) <= 0,
                          tag + ": h(beta_n) <= 2 h(alpha_n)");
            }
        });
    }
    for (size_t i = 1; i < cert.rows.size(); ++i)
        c.require(cert.rows[i - 1].w < cert.rows[i].w, "w_n strictly increasing");
    for (size_t i = 0; i + 1 < cert.rows.size(); ++i) {
        const auto& a = cert.rows[i];
        const auto& b = cert.rows[i + 1];
        c.guarded("gap constant", [&] {
            if (root) {
                c.require(LogExpr::compare_strict(
                              *b.height_exact,
                              *a.height_exact * (a.w * cert.b_empirical)) <= 0,
                          "row " + std::to_string(a.n) +
                              ": h(beta_{n+1}) <= B_empirical w_n h(beta_n)");
            } else {
                c.require(b.height_bounds.lo <= cert.b_empirical * a.w * a.height_bounds.hi,
                          "row " + std::to_string(a.n) +
                              ": h(beta_{n+1}) <= B_empirical w_n h(beta_n)");
            }
        });
    }
    if (root && cert.rows.size() >= 2)
        c.require(cert.b_empirical <= cert.b_claimed, "B_empirical <= B_claimed = 8 N^2 m A");
}

void check_gap_report(const json& doc, Checker& c) {
    certify::GapReport r = io::gap_report_from_json(doc);
    ComplexBox kappa = io::box_from_json(doc.at("kappa"));
    c.require(r.exceptions.empty(), "exception list empty");
    c.require(r.floor_consistency, "Liouville floor consistency");
    c.require(r.fitted_above_floor, "fitted bound does not undercut the Liouville floor");
    c.require(r.fitted_index < r.grid.size(), "fitted index in range");
    for (const auto& pt : r.grid) {
        const std::string tag = "eta = " + to_string(pt.eta);
        c.guarded(tag, [&] {
            AlgebraicNumber worst{pt.worst_minpoly, pt.worst_box, false, ""};
            exactnum::validate(worst);
            Interval own_h = own_height_bounds(pt.worst_minpoly);
            c.require(pt.worst_height.hi >= own_h.lo && pt.worst_height.lo <= own_h.hi,
                      tag + ": worst-candidate height enclosure consistent");
            ComplexBox tight =
                exactnum::refine_isolator(worst, Rational(1, pow_int(Int(2), 140))).isolator;
            Interval own_dist = kappa.is_real_line() && tight.is_real_line()
                                    ? abs(kappa.re - tight.re)
                                    : abs_box(kappa - tight, 192);
            c.require(pt.worst_distance.hi >= own_dist.lo && pt.worst_distance.lo <= own_dist.hi,
                      tag + ": worst-candidate distance enclosure consistent");
            // log_c <= log(dist_lo) + eta h_lo for the worst candidate
            Rational log_dist_lo = LogExpr::log_abs(own_dist.lo).enclose(128).lo;
            c.require(pt.log_c <= log_dist_lo + pt.eta * own_h.hi,
                      tag + ": fitted c consistent with the worst candidate");
        });
    }
}

} // namespace

Report check_document(const json& document) {
    Checker c;
    try {
        c.report.kind = document.value("kind", "?");
        if (document.value("schema", "") != io::kSchemaVersion)
            c.report.violations.push_back("schema version is not umlab-cert/1");
        if (document.contains("canonical_hash") &&
            document.at("canonical_hash").get<std::string>() != io::canonical_hash(document))
            c.report.violations.push_back("canonical hash mismatch");

        const std::string kind = c.report.kind;
        if (kind == "l-certificate") {
            check_l_certificate(document, c);
        } else if (kind == "um-certificate") {
            check_um_certificate(document, c);
        } else if (kind == "galois-certificate") {
            check_galois_payload(document, c, "");
        } else if (kind == "genus-report") {
            check_genus_payload(document, c);
        } else if (kind == "wilms") {
            check_wilms_payload(document, c);
        } else if (kind == "gap-report") {
            check_gap_report(document, c);
        } else {
            c.report.violations.push_back("unknown certificate kind: " + kind);
        }
    } catch (const Error& e) {
        c.report.violations.push_back(std::string("checker error: ") + e.what());
    } catch (const io::json::exception& e) {
        c.report.violations.push_back(std::string("malformed document: ") + e.what());
    }
    c.report.ok = c.report.violations.empty();
    return c.report;
}

} // namespace umlab::verify
