// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include "umlab/certify.hpp"
#include "umlab/jsonio.hpp"
#include "umlab/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <sys/wait.h>

using namespace umlab;
using certify::LiouvilleSeries;
using io::json;
using polyring::IntPoly;
using polyring::parse_poly;

namespace {

struct Harness {
    int failures = 0;
    std::vector<json> emitted; // all certificates produced along the way

    void run(int id, const std::string& name, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            body();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "CRITERION " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) line << " — " << detail;
        line << " (" << secs << " s)";
        std::cout << line.str() << std::endl;
        if (!pass) ++failures;
    }
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

const IntPoly kBigQ = parse_poly("x^5-10x^4+35x^3-50x^2+24x"); // X(X-1)(X-2)(X-3)(X-4)

int run_cli(const std::string& args) {
    const std::string cmd = std::string(UMLAB_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main() {
    Harness h;
    certify::UmCertificate root_cert;   // criterion 2 result, reused by 8
    certify::UmCertificate trans_cert;  // criterion 7 result, reused by 9
    certify::GapReport gap_report;      // criterion 8 result

    // 1. L-certificate for b = 2, e_n = n!, rows 1..9
    h.run(1, "L-certificate rows 1..9", [&] {
        auto series = LiouvilleSeries::factorial(2);
        auto cert = certify::certify_L(series, 1, 9);
        require(cert.rows.size() == 9, "nine rows expected");
        require(cert.rows[1].v == Rational(5, 2), "v_2 = 5/2");
        require(cert.rows[2].v == Rational(23, 6), "v_3 = 23/6");
        for (const auto& row : cert.rows) {
            const unsigned long e_next = series.exponent(row.n + 1);
            require(row.v == make_rational(Int(e_next - 1), Int(series.exponent(row.n))),
                    "v_n matches the closed form from the tail bound");
        }
        require(cert.a_minimal <= Rational(2), "minimal A <= 2");
        json doc = io::wrap_document("l-certificate", io::l_certificate_to_json(cert));
        auto rep = verify::check_document(doc);
        require(rep.ok, rep.ok ? "" : "independent checker: " + rep.violations.front());
        h.emitted.push_back(doc);
    });

    // 2. Theorem-1.2-style pipeline, m = 2, rows 1..7
    h.run(2, "m-th root pipeline rows 1..7", [&] {
        auto series = LiouvilleSeries::factorial(2);
        root_cert = certify::construct_um_root(series, kBigQ, 2, std::nullopt, 1, 7);
        require(root_cert.hypotheses->verdict, "hypothesis verifier verdict");
        require(root_cert.hypotheses->k_found == 5 && root_cert.hypotheses->k_required == 5,
                "k_found = 5 = k_required");
        require(root_cert.hypotheses->entries.at(0).genus == 2, "genus 2 for q = 2");
        require(root_cert.rows.size() == 7, "seven certified rows");
        const auto& r1 = root_cert.rows[0];
        require(r1.beta.minpoly == parse_poly("[-105,0,32]"), "row 1 minpoly 32X^2 - 105");
        require(*r1.height_exact == LogExpr::log_of(Int(105), Rational(1, 2)),
                "row 1 height (1/2) log 105");
        for (const auto& row : root_cert.rows) {
            require(row.beta.irreducible_certified, "binomial irreducibility certified");
            require(*row.height_exact ==
                        exactnum::height_rational(row.q_alpha) * Rational(1, 2),
                    "h(beta_n) = (1/2) h(Q(alpha_n)) exactly");
        }
        require(root_cert.b_claimed == Rational(800), "8 N^2 m A = 800");
        require(root_cert.b_empirical <= Rational(800), "B_empirical <= 800");
        json doc = io::wrap_document("um-certificate", io::um_certificate_to_json(root_cert));
        auto rep = verify::check_document(doc);
        require(rep.ok, rep.ok ? "" : "independent checker: " + rep.violations.front());
        h.emitted.push_back(doc);
    });

    // 3. Genus suite
    h.run(3, "genus suite", [&] {
        oracles::Rng rng(60521);
        for (int trial = 0; trial < 100; ++trial) {
            const long d = rng.integer(3, 12);
            IntPoly q = rng.squarefree_poly(d, 9);
            auto curve = curves::SuperellipticCurve::make(2, Rational(1), q);
            require(curves::superelliptic_genus(curve) == (d - 1) / 2,
                    "hyperelliptic closed form");
        }
        auto genus_of = [](unsigned long n, const IntPoly& q) {
            return curves::superelliptic_genus(curves::SuperellipticCurve::make(n, Rational(1), q));
        };
        require(genus_of(2, kBigQ) == 2, "(q=2, k=5) -> 2");
        require(genus_of(2, parse_poly("x^4-x-1")) == 1, "(q=2, k=4) -> 1");
        require(genus_of(3, parse_poly("x^4-x-1")) == 3, "(q=3, k=4) -> 3");
        require(genus_of(5, parse_poly("x^2-3x+1")) == 2, "(q=5, k=2) -> 2");
        auto rep = curves::verify_degm_hypotheses(4, kBigQ);
        require(rep.quartic.has_value() && rep.quartic->genus >= 5,
                "quartic companion with 5 simple zeros has genus >= 5");
        json doc = io::wrap_document(
            "genus-report", io::genus_to_json(curves::verify_degm_hypotheses(2, kBigQ)));
        require(verify::check_document(doc).ok, "genus report verifies");
        h.emitted.push_back(doc);
    });

    // 4. Binomial criterion: exhaustive vs the factor-ansatz oracle
    h.run(4, "binomial criterion exhaustive m <= 4", [&] {
        for (unsigned long m = 1; m <= 4; ++m) {
            for (long p = -50; p <= 50; ++p) {
                if (p == 0) continue;
                for (long q = 1; q <= 50; ++q) {
                    if (std::gcd(std::abs(p), q) != 1) continue;
                    const Rational a(p, q);
                    const bool irr = polyring::binomial_irreducible(m, a).irreducible;
                    require(irr == !oracles::binomial_reducible_oracle(m, a),
                            "oracle disagreement at m=" + std::to_string(m) + ", a=" +
                                to_string(a));
                }
            }
        }
        for (long cn = -6; cn <= 6; ++cn) {
            if (cn == 0) continue;
            for (long cd = 1; cd <= 4; ++cd) {
                const Rational c(cn, cd);
                for (unsigned long m : {2ul, 3ul, 4ul, 6ul, 8ul, 9ul, 12ul}) {
                    for (unsigned long pp : {2ul, 3ul}) {
                        if (m % pp != 0) continue;
                        Rational a = pow_rational(c, static_cast<long>(pp));
                        require(!polyring::binomial_irreducible(m, a).irreducible,
                                "constructive family a = c^p flagged reducible");
                    }
                    if (m % 4 == 0) {
                        Rational a = Rational(-4) * pow_rational(c, 4);
                        require(!polyring::binomial_irreducible(m, a).irreducible,
                                "constructive family a = -4c^4 flagged reducible");
                    }
                }
            }
        }
    });

    // 5. Galois certificates
    h.run(5, "Galois certificates", [&] {
        auto s4 = galois::certify_symmetric(parse_poly("x^4-x-1"), 200);
        require(s4.verdict == galois::GroupVerdict::symmetric, "x^4 - x - 1 certified S_4");
        require(!s4.witnesses.empty(), "witness primes recorded");
        auto v4 = galois::certify_symmetric(parse_poly("x^4-2x^2+9"), 1000);
        require(v4.verdict == galois::GroupVerdict::inconclusive, "x^4-2x^2+9 inconclusive");
        auto c4 = galois::certify_symmetric(parse_poly("x^4+x^3+x^2+x+1"), 1000);
        require(c4.verdict == galois::GroupVerdict::inconclusive, "cyclotomic inconclusive");
        const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                        31, 37, 41, 43, 47};
        for (const char* text : {"x^4-x-1", "x^4-2x^2+9", "x^4+x^3+x^2+x+1"}) {
            IntPoly f = parse_poly(text);
            for (unsigned long p : primes) {
                auto sample = galois::factor_pattern_mod_p(f, p);
                if (sample.ramified) continue;
                require(sample.pattern == oracles::naive_mod_p_pattern(f, p),
                        std::string("pattern oracle agreement for ") + text + " mod " +
                            std::to_string(p));
            }
        }
        json doc = io::wrap_document("galois-certificate", io::galois_to_json(s4));
        require(verify::check_document(doc).ok, "galois certificate verifies");
        h.emitted.push_back(doc);
    });

    // 6. Wilms / distinct-differences certification
    h.run(6, "distinct root differences", [&] {
        auto ok = certify::wilms_check(parse_poly("x^4-x-1"), 1000);
        require(ok.certified && ok.degree_claim == 12, "x^4-x-1 certified with degree 12");
        auto roots = oracles::durand_kerner_roots(parse_poly("x^4-x-1"), 512);
        const Rational tol(1, pow_int(Int(10), 30));
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = 0; j < roots.size(); ++j)
                for (size_t k = 0; k < roots.size(); ++k)
                    for (size_t l = 0; l < roots.size(); ++l) {
                        if (i == j || k == l || (i == k && j == l)) continue;
                        Rational dre = roots[i].re - roots[j].re - roots[k].re + roots[l].re;
                        Rational dim = roots[i].im - roots[j].im - roots[k].im + roots[l].im;
                        require(abs(dre) >= tol || abs(dim) >= tol,
                                "differences distinct beyond 1e-30");
                    }
        auto refused = certify::wilms_check(parse_poly("x^4-2x^2+9"), 1000);
        require(!refused.certified, "sqrt(2)+i family refused");
        require(refused.reason.find("D not squarefree") != std::string::npos,
                "refusal names the squarefree failure");
        auto gauss = certify::wilms_check(parse_poly("x^2+1"), 1000);
        require(gauss.certified && gauss.degree_claim == 2, "x^2+1 certified with degree 2");
        json doc = io::wrap_document("wilms", io::wilms_to_json(ok));
        require(verify::check_document(doc).ok, "wilms certificate verifies");
        h.emitted.push_back(doc);
    });

    // 7. Translate pipeline with gamma a non-real root of x^4 - x - 1
    h.run(7, "translate pipeline rows 1..8", [&] {
        IntPoly f = parse_poly("x^4-x-1");
        exactnum::AlgebraicNumber gamma;
        gamma.minpoly = f;
        bool found = false;
        for (const auto& box : exactnum::isolate_roots(f)) {
            if (!box.is_real_line()) {
                gamma.isolator = box;
                found = true;
                break;
            }
        }
        require(found, "non-real root located");
        auto series = LiouvilleSeries::factorial(2);
        trans_cert = certify::construct_um_translate(gamma, series, 1, 8);
        require(trans_cert.rows.size() == 8, "eight certified rows");
        Interval h_gamma = exactnum::height_enclosure(f, 192);
        const Rational log2_hi = LogExpr::log_of(Int(2)).enclose(128).hi;
        for (const auto& row : trans_cert.rows) {
            Interval tail = series.tail_enclosure(row.n);
            require(row.distance.lo == tail.lo && row.distance.hi == tail.hi,
                    "row distance enclosure identical to the series tail");
            LogExpr h_alpha = LogExpr::log_of(Int(2), Rational(series.exponent(row.n)));
            Rational ha = h_alpha.enclose(160).hi;
            require(row.height_bounds.hi <= ha + h_gamma.hi + log2_hi,
                    "h(beta_n) <= h(alpha_n) + h(gamma) + log 2");
            require(row.height_bounds.lo >=
                        h_alpha.enclose(160).lo - h_gamma.hi - log2_hi,
                    "h(beta_n) >= h(alpha_n) - h(gamma) - log 2");
        }
        require(trans_cert.im_separation && trans_cert.im_separation->certified,
                "finite explicit C");
        // display-(6.2)-style spot check: |kappa - beta| >= e^{-C(h(beta)+1)}
        // for sample algebraic numbers of degree < 4
        const Rational C = trans_cert.im_separation->c_value;
        const ComplexBox& kappa = trans_cert.kappa_enclosure;
        struct Sample {
            Rational value;
            LogExpr height;
        };
        std::vector<Sample> samples = {{Rational(0), LogExpr::zero()},
                                       {Rational(1), LogExpr::zero()},
                                       {Rational(1, 2), LogExpr::log_of(Int(2))},
                                       {Rational(7, 5), LogExpr::log_of(Int(7))}};
        for (const auto& s : samples) {
            Interval dist = abs_box(kappa - ComplexBox::point(s.value, Rational(0)), 192);
            Rational h_hi = s.height.enclose(128).hi;
            Interval rhs =
                exp_interval(Interval::point(-(C * (h_hi + 1))), 192);
            require(dist.lo >= rhs.hi, "separation bound spot check");
        }
        json doc = io::wrap_document("um-certificate", io::um_certificate_to_json(trans_cert));
        auto rep = verify::check_document(doc);
        require(rep.ok, rep.ok ? "" : "independent checker: " + rep.violations.front());
        h.emitted.push_back(doc);
    });

    // 8. Gap exclusion scan over the criterion-2 certificate
    h.run(8, "gap exclusion scan", [&] {
        require(!root_cert.rows.empty(), "criterion 2 certificate available");
        gap_report = certify::gap_exclusion_scan(root_cert, 20, std::nullopt);
        require(gap_report.exceptions.empty(), "exception list empty");
        require(gap_report.floor_consistency, "no candidate violates the Liouville floor");
        require(gap_report.fitted_above_floor, "fitted bound does not undercut the floor");
        require(gap_report.candidates_scanned > 10000, "scan covered the candidate grid");
        json doc = io::wrap_document("gap-report",
                                     io::gap_report_to_json(gap_report, root_cert));
        auto rep = verify::check_document(doc);
        require(rep.ok, rep.ok ? "" : "independent checker: " + rep.violations.front());
        h.emitted.push_back(doc);
    });

    // 9. 100% verification plus 20 tampering probes
    h.run(9, "verifier independence and tamper detection", [&] {
        for (const auto& doc : h.emitted) {
            auto rep = verify::check_document(doc);
            require(rep.ok, "emitted certificate fails verification: " +
                                (rep.violations.empty() ? "?" : rep.violations.front()));
        }
        require(h.emitted.size() >= 6, "certificate corpus emitted");

        // CLI round trip on a fresh artifact
        require(run_cli("certify-l --base 2 --exponents factorial --range 1..5 --out "
                        "acceptance_l.json") == 0,
                "CLI certify-l exits 0");
        require(run_cli("verify acceptance_l.json") == 0, "CLI verify exits 0");

        // deterministic single-field tampers, each must fail with a named
        // violated inequality
        struct Tamper {
            size_t doc_index;
            std::string pointer;
            json value;
        };
        std::vector<Tamper> tampers;
        auto add = [&](size_t d, const std::string& ptr, json v) {
            tampers.push_back({d, ptr, std::move(v)});
        };
        // l-certificate (index 0)
        add(0, "/rows/2/v", "25/6");
        add(0, "/rows/1/alpha", "5/8");
        add(0, "/A", "1");
        add(0, "/rows/0/distance/hi", "2/3");
        add(0, "/rows/3/height/coeff", "23");
        // um root (index 1)
        add(1, "/rows/1/w", "1000");
        add(1, "/rows/0/height/terms/0/coeff", "1/3");
        add(1, "/B_claimed", "100000");
        add(1, "/rows/0/minpoly/coeffs/0", "-104");
        add(1, "/rows/2/q_alpha", "1/7");
        add(1, "/N", 6);
        add(1, "/rows/0/distance/hi", "1/100000000000");
        // genus (index 2)
        add(2, "/entries/0/genus", 1);
        add(2, "/k_found", 4);
        // galois (index 3)
        add(3, "/witnesses/0/pattern", json::array({1, 1, 1, 1}));
        add(3, "/disc", "-280");
        // wilms (index 4)
        add(4, "/difference_poly/coeffs/0", "7");
        add(4, "/degree_claim", 11);
        // translate (index 5)
        add(5, "/rows/0/w", "17");
        add(5, "/rows/1/distance/lo", "0");
        require(tampers.size() == 20, "twenty tampers configured");
        for (size_t i = 0; i < tampers.size(); ++i) {
            json doc = h.emitted.at(tampers[i].doc_index);
            doc[json::json_pointer(tampers[i].pointer)] = tampers[i].value;
            auto rep = verify::check_document(doc);
            require(!rep.ok, "tamper " + std::to_string(i) + " undetected");
            bool named = false;
            for (const auto& v : rep.violations)
                if (v != "canonical hash mismatch") named = true;
            require(named, "tamper " + std::to_string(i) + " lacks a named inequality");
        }
        std::remove("acceptance_l.json");
    });

    std::cout << (h.failures == 0 ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return h.failures == 0 ? 0 : 1;
}
