// umlab: certified approximation sequences, heights, genus and Galois
// certificates at desk scale. Exit codes: 0 certified/verified, 2 refused or
// inconclusive, 1 error.

#include "umlab/certify.hpp"
#include "umlab/config.hpp"
#include "umlab/jsonio.hpp"
#include "umlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace umlab;
using cli::RunConfig;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kRefused = 2;

certify::LiouvilleSeries series_from_config(const RunConfig& cfg) {
    if (cfg.exponents == "factorial") return certify::LiouvilleSeries::factorial(cfg.base);
    std::vector<unsigned long> exps;
    std::string item;
    std::istringstream ss(cfg.exponents);
    while (std::getline(ss, item, ',')) exps.push_back(std::stoul(item));
    return certify::LiouvilleSeries::from_list(cfg.base, std::move(exps));
}

certify::Budgets budgets_from_config(const RunConfig& cfg) {
    certify::Budgets b;
    b.denominator_bits = cfg.denominator_bits;
    b.precision_bits = cfg.precision_bits;
    b.prime_budget = cfg.prime_budget;
    return b;
}

void emit(const io::json& doc, const RunConfig& cfg) {
    if (cfg.out_path.empty()) return;
    io::write_document(doc, cfg.out_path);
    std::cout << "certificate written to " << cfg.out_path << "\n";
}

void emit_csv(const std::string& csv, const RunConfig& cfg) {
    if (cfg.csv_path.empty()) return;
    std::ofstream out(cfg.csv_path);
    if (!out) throw Error("cannot open csv path " + cfg.csv_path);
    out << csv;
    std::cout << "csv written to " << cfg.csv_path << "\n";
}

int run_certify_l(const RunConfig& cfg) {
    auto series = series_from_config(cfg);
    auto cert = certify::certify_L(series, cfg.range_min, cfg.range_max, budgets_from_config(cfg));
    std::cout << "L-certificate: " << series.describe() << ", rows " << cfg.range_min << ".."
              << cfg.range_max << "\n";
    std::cout << "  minimal A = " << to_string(cert.a_minimal) << "\n";
    for (const auto& row : cert.rows)
        std::cout << "  n=" << row.n << "  v_n=" << to_string(row.v)
                  << "  h(alpha_n)=" << row.height.decimal(12) << "\n";
    emit(io::wrap_document("l-certificate", io::l_certificate_to_json(cert)), cfg);
    emit_csv(io::certificate_csv(cert), cfg);
    return kOk;
}

int run_um_root(const RunConfig& cfg) {
    if (cfg.poly_text.empty()) throw Error("--poly is required");
    auto q = polyring::parse_poly(cfg.poly_text);
    auto series = series_from_config(cfg);
    auto cert = certify::construct_um_root(series, q, cfg.m, cfg.branch, cfg.range_min,
                                           cfg.range_max, budgets_from_config(cfg));
    std::cout << "U_m root construction certified: m = " << cfg.m << ", N = " << cert.n_deg
              << ", rows " << cfg.range_min << ".." << cfg.range_max << "\n";
    std::cout << "  A = " << to_string(cert.a_constant)
              << ", B_claimed = " << to_string(cert.b_claimed)
              << ", B_empirical = " << to_string(cert.b_empirical) << "\n";
    for (const auto& row : cert.rows)
        std::cout << "  n=" << row.n << "  w_n=" << decimal_string(row.w, 10)
                  << "  h(beta_n)=" << row.height_exact->decimal(12)
                  << (row.in_eps_disk ? "" : "  [outside eps-disk]") << "\n";
    emit(io::wrap_document("um-certificate", io::um_certificate_to_json(cert)), cfg);
    emit_csv(io::certificate_csv(cert), cfg);
    return kOk;
}

int run_um_translate(const RunConfig& cfg) {
    if (cfg.poly_text.empty()) throw Error("--poly is required (minimal polynomial of gamma)");
    auto f = polyring::parse_poly(cfg.poly_text);
    auto series = series_from_config(cfg);
    // pick gamma: the declared branch box, or the first non-real root
    exactnum::AlgebraicNumber gamma;
    gamma.minpoly = f.primitive_part();
    bool found = false;
    for (const ComplexBox& box : exactnum::isolate_roots(gamma.minpoly)) {
        if (box.is_real_line()) continue;
        if (cfg.branch && !cfg.branch->contains_box(box)) continue;
        gamma.isolator = box;
        found = true;
        break;
    }
    if (!found) throw Refusal("no non-real root of the given polynomial matches the branch");
    auto cert = certify::construct_um_translate(gamma, series, cfg.range_min, cfg.range_max,
                                                budgets_from_config(cfg));
    std::cout << "U_m translate construction certified: m = " << cert.m << ", rows "
              << cfg.range_min << ".." << cfg.range_max << "\n";
    std::cout << "  gamma isolator: " << cert.gamma->isolator.str() << "\n";
    std::cout << "  im-separation C = " << to_string(cert.im_separation->c_value) << "\n";
    emit(io::wrap_document("um-certificate", io::um_certificate_to_json(cert)), cfg);
    emit_csv(io::certificate_csv(cert), cfg);
    return kOk;
}

int run_genus(const RunConfig& cfg) {
    if (cfg.poly_text.empty()) throw Error("--poly is required");
    auto q = polyring::parse_poly(cfg.poly_text);
    if (cfg.cover_degree >= 2) {
        auto curve = curves::SuperellipticCurve::make(cfg.cover_degree, Rational(1), q);
        std::cout << "g = " << curves::superelliptic_genus(curve) << "\n";
        return kOk;
    }
    auto report = curves::verify_degm_hypotheses(cfg.m, q);
    std::cout << "hypothesis report for m = " << cfg.m << ":\n";
    std::cout << "  q | m    genus   branch points   irreducible\n";
    for (const auto& e : report.entries)
        std::cout << "  " << e.q << "        " << e.genus << "       " << e.branch_points
                  << "               " << (e.irreducible ? "yes" : "NO") << "\n";
    if (report.quartic)
        std::cout << "  quartic companion: genus " << report.quartic->genus << "\n";
    std::cout << "  simple zeros: found " << report.k_found << ", required "
              << report.k_required << (report.k_met ? " (met)" : " (NOT met)") << "\n";
    std::cout << "  verdict: " << (report.verdict ? "hypotheses met" : "hypotheses NOT met")
              << "\n";
    std::cout << "  note: " << report.disclaimer << "\n";
    emit(io::wrap_document("genus-report", io::genus_to_json(report)), cfg);
    return report.verdict ? kOk : kRefused;
}

int run_binomial(const RunConfig& cfg) {
    if (cfg.a_text.empty()) throw Error("--a is required");
    auto a = parse_rational(cfg.a_text);
    auto v = polyring::binomial_irreducible(cfg.m, a);
    if (v.irreducible) {
        std::cout << "irreducible: X^" << cfg.m << " - (" << to_string(a) << ") (" << v.reason
                  << ")\n";
        return kOk;
    }
    std::cout << "reducible: " << v.reason << "\n";
    return kRefused;
}

int run_galois(const RunConfig& cfg) {
    if (cfg.poly_text.empty()) throw Error("--poly is required");
    auto f = polyring::parse_poly(cfg.poly_text);
    auto cert = galois::certify_symmetric(f, cfg.prime_budget);
    std::cout << "verdict: " << galois::verdict_name(cert.verdict) << " (m = " << f.degree()
              << ")\n";
    for (const auto& w : cert.witnesses) {
        std::cout << "  p=" << w.prime << " pattern [";
        for (size_t i = 0; i < w.pattern.size(); ++i)
            std::cout << (i ? "," : "") << w.pattern[i];
        std::cout << "]\n";
    }
    std::cout << "  disc = " << cert.discriminant.get_str()
              << (cert.discriminant_square ? " (square)" : " (not a square)") << "\n";
    emit(io::wrap_document("galois-certificate", io::galois_to_json(cert)), cfg);
    return cert.verdict == galois::GroupVerdict::inconclusive ? kRefused : kOk;
}

int run_wilms(const RunConfig& cfg) {
    if (cfg.poly_text.empty()) throw Error("--poly is required");
    auto f = polyring::parse_poly(cfg.poly_text);
    auto w = certify::wilms_check(f, cfg.prime_budget);
    if (w.certified) {
        std::cout << "certified: pairwise root differences have degree exactly "
                  << w.degree_claim << "\n";
    } else {
        std::cout << "refused: " << w.reason << "\n";
    }
    emit(io::wrap_document("wilms", io::wilms_to_json(w)), cfg);
    return w.certified ? kOk : kRefused;
}

int run_gap_scan(const RunConfig& cfg, const std::string& cert_path) {
    io::json doc = io::read_document(cert_path);
    if (doc.value("kind", "") != "um-certificate")
        throw Error("gap-scan needs a um-certificate document");
    auto cert = io::um_certificate_from_json(doc);
    auto report =
        certify::gap_exclusion_scan(cert, cfg.coeff_bound, cfg.height_bound, budgets_from_config(cfg));
    const auto& fitted = report.grid[report.fitted_index];
    std::cout << "gap scan: " << report.candidates_scanned << " candidates, "
              << report.members_excluded << " members excluded, " << report.exceptions.size()
              << " exceptions\n";
    std::cout << "  fitted eta = " << to_string(fitted.eta)
              << ", c = " << io::decimal_string_of_exp(fitted.log_c) << "\n";
    std::cout << "  floor consistency: " << (report.floor_consistency ? "ok" : "VIOLATED")
              << ", fitted above floor: " << (report.fitted_above_floor ? "yes" : "NO") << "\n";
    emit(io::wrap_document("gap-report", io::gap_report_to_json(report, cert)), cfg);
    return report.exceptions.empty() && report.floor_consistency && report.fitted_above_floor
               ? kOk
               : kRefused;
}

int run_verify(const std::string& path) {
    io::json doc = io::read_document(path);
    auto report = verify::check_document(doc);
    if (report.ok) {
        std::cout << "verified: " << report.kind << " (" << path << ")\n";
        return kOk;
    }
    std::cout << "verification FAILED for " << report.kind << " (" << path << "):\n";
    for (const auto& v : report.violations) std::cout << "  violated: " << v << "\n";
    return kRefused;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"umlab: certified U_m approximation sequences and related certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, cert_path, verify_path;
    std::string range_text, branch_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key = value config file");
        sub->add_option("--prec", cfg.precision_bits, "working precision in bits");
        sub->add_option("--endpoint-bits", cfg.endpoint_bits, "interval endpoint bit budget");
        sub->add_option("--denominator-bits", cfg.denominator_bits,
                        "cap on series denominator bit size");
        sub->add_option("--primes", cfg.prime_budget, "prime sampling budget");
        sub->add_option("--range", range_text, "row range a..b");
        sub->add_option("--coeff-bound", cfg.coeff_bound, "candidate coefficient bound");
        sub->add_option("--out", cfg.out_path, "certificate output path");
        sub->add_option("--csv", cfg.csv_path, "CSV output path");
        sub->add_option("--branch", branch_text, "branch box re_lo,re_hi,im_lo,im_hi");
        sub->add_option("--base", cfg.base, "series base b >= 2");
        sub->add_option("--exponents", cfg.exponents, "factorial | comma-separated list");
        sub->add_option("--poly", cfg.poly_text, "polynomial ([c0,c1,...] or \"x^2 - 2\")");
        sub->add_option("--a", cfg.a_text, "rational a as p/q");
        sub->add_option("--m", cfg.m, "degree m");
        sub->add_option("--n", cfg.cover_degree, "cover degree for genus");
    };

    CLI::App* c_l = app.add_subcommand("certify-l", "certify an L-number series prefix");
    CLI::App* c_root = app.add_subcommand("construct-um-root",
                                          "m-th-root construction certificate");
    CLI::App* c_tr = app.add_subcommand("construct-um-translate",
                                        "translate-by-gamma construction certificate");
    CLI::App* c_genus = app.add_subcommand("genus", "superelliptic genus / hypothesis report");
    CLI::App* c_binom = app.add_subcommand("binomial", "binomial irreducibility criterion");
    CLI::App* c_galois = app.add_subcommand("galois-cert", "symmetric-group certification");
    CLI::App* c_wilms = app.add_subcommand("wilms", "distinct root-difference certification");
    CLI::App* c_gap = app.add_subcommand("gap-scan", "gap-principle exclusion scan");
    CLI::App* c_verify = app.add_subcommand("verify", "re-check an emitted certificate");
    for (CLI::App* sub : {c_l, c_root, c_tr, c_genus, c_binom, c_galois, c_wilms, c_gap})
        add_common(sub);
    c_gap->add_option("cert", cert_path, "um-certificate JSON file")->required();
    c_verify->add_option("file", verify_path, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            RunConfig file_cfg = RunConfig::from_file(config_path);
            // flags override file values: reparse flags on top of the file config
            RunConfig merged = file_cfg;
            for (CLI::App* sub : {c_l, c_root, c_tr, c_genus, c_binom, c_galois, c_wilms, c_gap}) {
                if (!sub->parsed()) continue;
                auto override_if = [&](const std::string& name, auto member) {
                    if (sub->count(name) > 0) merged.*member = cfg.*member;
                };
                override_if("--prec", &RunConfig::precision_bits);
                override_if("--endpoint-bits", &RunConfig::endpoint_bits);
                override_if("--denominator-bits", &RunConfig::denominator_bits);
                override_if("--primes", &RunConfig::prime_budget);
                override_if("--coeff-bound", &RunConfig::coeff_bound);
                override_if("--out", &RunConfig::out_path);
                override_if("--csv", &RunConfig::csv_path);
                override_if("--base", &RunConfig::base);
                override_if("--exponents", &RunConfig::exponents);
                override_if("--poly", &RunConfig::poly_text);
                override_if("--a", &RunConfig::a_text);
                override_if("--m", &RunConfig::m);
                override_if("--n", &RunConfig::cover_degree);
            }
            cfg = merged;
        }
        if (!range_text.empty()) {
            const size_t dots = range_text.find("..");
            if (dots == std::string::npos) throw Error("range must be a..b");
            cfg.range_min = std::stoul(range_text.substr(0, dots));
            cfg.range_max = std::stoul(range_text.substr(dots + 2));
        }
        if (!branch_text.empty()) cfg.branch = cli::parse_branch(branch_text);
        cfg.validate();
        set_endpoint_bit_budget(cfg.endpoint_bits);

        if (c_l->parsed()) return run_certify_l(cfg);
        if (c_root->parsed()) return run_um_root(cfg);
        if (c_tr->parsed()) return run_um_translate(cfg);
        if (c_genus->parsed()) return run_genus(cfg);
        if (c_binom->parsed()) return run_binomial(cfg);
        if (c_galois->parsed()) return run_galois(cfg);
        if (c_wilms->parsed()) return run_wilms(cfg);
        if (c_gap->parsed()) return run_gap_scan(cfg, cert_path);
        if (c_verify->parsed()) return run_verify(verify_path);
        throw Error("no subcommand");
    } catch (const Refusal& r) {
        std::cout << "refused: " << r.what() << "\n";
        return kRefused;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
