#include "umlab/jsonio.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

namespace umlab::io {

json rational_to_json(const Rational& q) { return to_string(q); }
Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json interval_to_json(const Interval& v) {
    return json{{"lo", to_string(v.lo)}, {"hi", to_string(v.hi)}};
}
Interval interval_from_json(const json& j) {
    return Interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

json box_to_json(const ComplexBox& b) {
    return json{{"re", interval_to_json(b.re)}, {"im", interval_to_json(b.im)}};
}
ComplexBox box_from_json(const json& j) {
    return ComplexBox(interval_from_json(j.at("re")), interval_from_json(j.at("im")));
}

json logexpr_to_json(const LogExpr& e) {
    // single pure-log terms use the flat height schema
    if (sgn(e.constant()) == 0 && e.terms().size() == 1) {
        return json{{"coeff", to_string(e.terms()[0].coeff)},
                    {"log_of", to_string(e.terms()[0].base)},
                    {"float", e.decimal()}};
    }
    json terms = json::array();
    for (const auto& t : e.terms())
        terms.push_back(json{{"coeff", to_string(t.coeff)}, {"log_of", to_string(t.base)}});
    return json{{"constant", to_string(e.constant())}, {"terms", terms}, {"float", e.decimal()}};
}

LogExpr logexpr_from_json(const json& j) {
    if (j.contains("coeff")) {
        return LogExpr::log_of(Int(j.at("log_of").get<std::string>(), 10),
                               parse_rational(j.at("coeff").get<std::string>()));
    }
    LogExpr out(parse_rational(j.at("constant").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        out = out + LogExpr::log_of(Int(t.at("log_of").get<std::string>(), 10),
                                    parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
}

json poly_to_json(const polyring::IntPoly& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}};
}

polyring::IntPoly poly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>(), 10);
    return polyring::IntPoly(std::move(coeffs));
}

json algebraic_to_json(const exactnum::AlgebraicNumber& a) {
    return json{{"minpoly", poly_to_json(a.minpoly)},
                {"isolator", box_to_json(a.isolator)},
                {"irreducible_certified", a.irreducible_certified},
                {"irreducibility_reason", a.irreducibility_reason}};
}

exactnum::AlgebraicNumber algebraic_from_json(const json& j) {
    exactnum::AlgebraicNumber a;
    a.minpoly = poly_from_json(j.at("minpoly"));
    a.isolator = box_from_json(j.at("isolator"));
    a.irreducible_certified = j.at("irreducible_certified").get<bool>();
    a.irreducibility_reason = j.value("irreducibility_reason", "");
    return a;
}

json series_to_json(const certify::LiouvilleSeries& s) {
    json out{{"base", std::to_string(s.base)}};
    if (s.kind == certify::LiouvilleSeries::Kind::factorial) {
        out["exponents"] = "factorial";
    } else {
        json list = json::array();
        for (unsigned long e : s.exponents) list.push_back(std::to_string(e));
        out["exponents"] = list;
    }
    return out;
}

certify::LiouvilleSeries series_from_json(const json& j) {
    const unsigned long base = std::stoul(j.at("base").get<std::string>());
    if (j.at("exponents").is_string()) {
        if (j.at("exponents").get<std::string>() != "factorial")
            throw Error("unknown exponent kind in series");
        return certify::LiouvilleSeries::factorial(base);
    }
    std::vector<unsigned long> exps;
    for (const auto& e : j.at("exponents")) exps.push_back(std::stoul(e.get<std::string>()));
    return certify::LiouvilleSeries::from_list(base, std::move(exps));
}

json galois_to_json(const galois::GaloisCertificate& c) {
    json witnesses = json::array();
    for (const auto& w : c.witnesses) {
        json pattern = json::array();
        for (unsigned d : w.pattern) pattern.push_back(d);
        witnesses.push_back(json{{"p", w.prime}, {"pattern", pattern}, {"ramified", w.ramified}});
    }
    json out{{"poly", poly_to_json(c.poly)},
             {"verdict", galois::verdict_name(c.verdict)},
             {"witnesses", witnesses},
             {"disc", c.discriminant.get_str()},
             {"disc_square", c.discriminant_square},
             {"prime_budget", c.prime_budget},
             {"note", c.note}};
    if (c.transitive_prime) out["transitive_prime"] = *c.transitive_prime;
    return out;
}

galois::GaloisCertificate galois_from_json(const json& j) {
    galois::GaloisCertificate c;
    c.poly = poly_from_json(j.at("poly"));
    const std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "S_m"            ? galois::GroupVerdict::symmetric
                : v == "contains_A_m" ? galois::GroupVerdict::contains_alternating
                                      : galois::GroupVerdict::inconclusive;
    for (const auto& w : j.at("witnesses")) {
        galois::CycleTypeSample s;
        s.prime = w.at("p").get<unsigned long>();
        for (const auto& d : w.at("pattern")) s.pattern.push_back(d.get<unsigned>());
        s.ramified = w.at("ramified").get<bool>();
        c.witnesses.push_back(std::move(s));
    }
    c.discriminant = Int(j.at("disc").get<std::string>(), 10);
    c.discriminant_square = j.at("disc_square").get<bool>();
    c.prime_budget = j.at("prime_budget").get<unsigned long>();
    c.note = j.value("note", "");
    if (j.contains("transitive_prime"))
        c.transitive_prime = j.at("transitive_prime").get<unsigned long>();
    return c;
}

namespace {

json genus_entry_to_json(const curves::GenusReport::Entry& e) {
    return json{{"q", e.q},
                {"genus", e.genus},
                {"branch_points", e.branch_points},
                {"irreducible", e.irreducible}};
}

curves::GenusReport::Entry genus_entry_from_json(const json& j) {
    return {j.at("q").get<unsigned long>(), j.at("genus").get<long>(),
            j.at("branch_points").get<long>(), j.at("irreducible").get<bool>()};
}

} // namespace

json genus_to_json(const curves::GenusReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) entries.push_back(genus_entry_to_json(e));
    json out{{"m", r.m},
             {"poly", poly_to_json(r.poly)},
             {"entries", entries},
             {"k_required", r.k_required},
             {"k_found", r.k_found},
             {"k_met", r.k_met},
             {"verdict", r.verdict},
             {"disclaimer", r.disclaimer}};
    if (r.quartic) out["quartic"] = genus_entry_to_json(*r.quartic);
    return out;
}

curves::GenusReport genus_from_json(const json& j) {
    curves::GenusReport r;
    r.m = j.at("m").get<unsigned long>();
    r.poly = poly_from_json(j.at("poly"));
    for (const auto& e : j.at("entries")) r.entries.push_back(genus_entry_from_json(e));
    if (j.contains("quartic")) r.quartic = genus_entry_from_json(j.at("quartic"));
    r.k_required = j.at("k_required").get<long>();
    r.k_found = j.at("k_found").get<long>();
    r.k_met = j.at("k_met").get<bool>();
    r.verdict = j.at("verdict").get<bool>();
    r.disclaimer = j.at("disclaimer").get<std::string>();
    return r;
}

json wilms_to_json(const certify::WilmsCheck& w) {
    return json{{"poly", poly_to_json(w.poly)},
                {"certified", w.certified},
                {"reason", w.reason},
                {"difference_poly", poly_to_json(w.difference_poly)},
                {"difference_squarefree", w.difference_squarefree},
                {"group", galois_to_json(w.group)},
                {"degree_claim", w.degree_claim}};
}

certify::WilmsCheck wilms_from_json(const json& j) {
    certify::WilmsCheck w;
    w.poly = poly_from_json(j.at("poly"));
    w.certified = j.at("certified").get<bool>();
    w.reason = j.value("reason", "");
    w.difference_poly = poly_from_json(j.at("difference_poly"));
    w.difference_squarefree = j.at("difference_squarefree").get<bool>();
    w.group = galois_from_json(j.at("group"));
    w.degree_claim = j.at("degree_claim").get<long>();
    return w;
}

json l_certificate_to_json(const certify::LNumberCertificate& c) {
    json rows = json::array();
    for (const auto& row : c.rows) {
        rows.push_back(json{{"n", row.n},
                            {"alpha", rational_to_json(row.alpha)},
                            {"height", logexpr_to_json(row.height)},
                            {"v", rational_to_json(row.v)},
                            {"distance", interval_to_json(row.distance)},
                            {"log_bound", logexpr_to_json(row.log_bound)}});
    }
    return json{{"series", series_to_json(c.series)},
                {"range", json::array({c.n_min, c.n_max})},
                {"A", rational_to_json(c.a_minimal)},
                {"rows", rows}};
}

certify::LNumberCertificate l_certificate_from_json(const json& j) {
    certify::LNumberCertificate c;
    c.series = series_from_json(j.at("series"));
    c.n_min = j.at("range")[0].get<unsigned long>();
    c.n_max = j.at("range")[1].get<unsigned long>();
    c.a_minimal = rational_from_json(j.at("A"));
    for (const auto& r : j.at("rows")) {
        certify::LRow row;
        row.n = r.at("n").get<unsigned long>();
        row.alpha = rational_from_json(r.at("alpha"));
        row.height = logexpr_from_json(r.at("height"));
        row.v = rational_from_json(r.at("v"));
        row.distance = interval_from_json(r.at("distance"));
        row.log_bound = logexpr_from_json(r.at("log_bound"));
        c.rows.push_back(std::move(row));
    }
    return c;
}

json um_certificate_to_json(const certify::UmCertificate& c) {
    json rows = json::array();
    const bool root = c.construction == certify::UmCertificate::Construction::root;
    for (const auto& row : c.rows) {
        json r{{"n", row.n},
               {"alpha", rational_to_json(row.alpha)},
               {"minpoly", poly_to_json(row.beta.minpoly)},
               {"isolator", box_to_json(row.beta.isolator)},
               {"irreducibility_reason", row.beta.irreducibility_reason},
               {"height_bounds", interval_to_json(row.height_bounds)},
               {"w", rational_to_json(row.w)},
               {"distance", interval_to_json(row.distance)},
               {"in_eps_disk", row.in_eps_disk}};
        if (root) {
            r["q_alpha"] = rational_to_json(row.q_alpha);
            r["height"] = logexpr_to_json(*row.height_exact);
        }
        if (row.deriv_route_dist_hi)
            r["deriv_route_dist_hi"] = rational_to_json(*row.deriv_route_dist_hi);
        rows.push_back(std::move(r));
    }
    json out{{"construction", root ? "root" : "translate"},
             {"m", c.m},
             {"series", series_to_json(c.series)},
             {"range", json::array({c.n_min, c.n_max})},
             {"poly", poly_to_json(c.poly)},
             {"N", c.n_deg},
             {"A", rational_to_json(c.a_constant)},
             {"B_claimed", rational_to_json(c.b_claimed)},
             {"B_empirical", rational_to_json(c.b_empirical)},
             {"C", rational_to_json(c.c_constant)},
             {"sparseness_required", c.sparseness_required},
             {"lambda_level", c.lambda_level},
             {"lambda", interval_to_json(c.lambda_enclosure)},
             {"kappa", box_to_json(c.kappa_enclosure)},
             {"rows", rows}};
    out["branch"] = c.branch_real_positive
                        ? json{{"kind", "real"}}
                        : (c.branch_box ? json{{"kind", "box"}, {"box", box_to_json(*c.branch_box)}}
                                        : json{{"kind", "translate"}});
    if (c.hypotheses) out["hypotheses"] = genus_to_json(*c.hypotheses);
    if (c.neighborhood) {
        out["neighborhood"] = json{{"epsilon", rational_to_json(c.neighborhood->epsilon)},
                                   {"lambda", interval_to_json(c.neighborhood->lambda_enclosure)},
                                   {"deriv_bound", rational_to_json(c.neighborhood->deriv_bound)}};
    }
    if (c.gamma) out["gamma"] = algebraic_to_json(*c.gamma);
    if (c.gamma_group) out["gamma_group"] = galois_to_json(*c.gamma_group);
    if (c.wilms) out["wilms"] = wilms_to_json(*c.wilms);
    if (c.im_separation) {
        const auto& s = *c.im_separation;
        out["im_separation"] = json{{"certified", s.certified},
                                    {"reason", s.reason},
                                    {"deg_im_gamma_bound", s.deg_im_gamma_bound},
                                    {"deg_im_beta_bound", s.deg_im_beta_bound},
                                    {"h_gamma", interval_to_json(s.h_gamma)},
                                    {"log2_upper", rational_to_json(s.log2_upper)},
                                    {"C", rational_to_json(s.c_value)}};
    }
    return out;
}

certify::UmCertificate um_certificate_from_json(const json& j) {
    certify::UmCertificate c;
    const bool root = j.at("construction").get<std::string>() == "root";
    c.construction = root ? certify::UmCertificate::Construction::root
                          : certify::UmCertificate::Construction::translate;
    c.m = j.at("m").get<unsigned long>();
    c.series = series_from_json(j.at("series"));
    c.n_min = j.at("range")[0].get<unsigned long>();
    c.n_max = j.at("range")[1].get<unsigned long>();
    c.poly = poly_from_json(j.at("poly"));
    c.n_deg = j.at("N").get<long>();
    c.a_constant = rational_from_json(j.at("A"));
    c.b_claimed = rational_from_json(j.at("B_claimed"));
    c.b_empirical = rational_from_json(j.at("B_empirical"));
    c.c_constant = rational_from_json(j.at("C"));
    c.sparseness_required = j.at("sparseness_required").get<bool>();
    c.lambda_level = j.at("lambda_level").get<unsigned long>();
    c.lambda_enclosure = interval_from_json(j.at("lambda"));
    c.kappa_enclosure = box_from_json(j.at("kappa"));
    const json& branch = j.at("branch");
    c.branch_real_positive = branch.at("kind").get<std::string>() == "real";
    if (branch.contains("box")) c.branch_box = box_from_json(branch.at("box"));
    if (j.contains("hypotheses")) c.hypotheses = genus_from_json(j.at("hypotheses"));
    if (j.contains("neighborhood")) {
        const json& nb = j.at("neighborhood");
        c.neighborhood =
            certify::NeighborhoodSpec{rational_from_json(nb.at("epsilon")),
                                      interval_from_json(nb.at("lambda")),
                                      rational_from_json(nb.at("deriv_bound"))};
    }
    if (j.contains("gamma")) c.gamma = algebraic_from_json(j.at("gamma"));
    if (j.contains("gamma_group")) c.gamma_group = galois_from_json(j.at("gamma_group"));
    if (j.contains("wilms")) c.wilms = wilms_from_json(j.at("wilms"));
    if (j.contains("im_separation")) {
        const json& s = j.at("im_separation");
        certify::ImSeparation sep;
        sep.certified = s.at("certified").get<bool>();
        sep.reason = s.value("reason", "");
        sep.deg_im_gamma_bound = s.at("deg_im_gamma_bound").get<long>();
        sep.deg_im_beta_bound = s.at("deg_im_beta_bound").get<long>();
        sep.h_gamma = interval_from_json(s.at("h_gamma"));
        sep.log2_upper = rational_from_json(s.at("log2_upper"));
        sep.c_value = rational_from_json(s.at("C"));
        c.im_separation = sep;
    }
    for (const auto& r : j.at("rows")) {
        certify::UmRow row;
        row.n = r.at("n").get<unsigned long>();
        row.alpha = rational_from_json(r.at("alpha"));
        row.beta.minpoly = poly_from_json(r.at("minpoly"));
        row.beta.isolator = box_from_json(r.at("isolator"));
        row.beta.irreducible_certified = true;
        row.beta.irreducibility_reason = r.value("irreducibility_reason", "");
        if (r.contains("q_alpha")) row.q_alpha = rational_from_json(r.at("q_alpha"));
        if (r.contains("height")) row.height_exact = logexpr_from_json(r.at("height"));
        row.height_bounds = interval_from_json(r.at("height_bounds"));
        row.w = rational_from_json(r.at("w"));
        row.distance = interval_from_json(r.at("distance"));
        row.in_eps_disk = r.at("in_eps_disk").get<bool>();
        if (r.contains("deriv_route_dist_hi"))
            row.deriv_route_dist_hi = rational_from_json(r.at("deriv_route_dist_hi"));
        c.rows.push_back(std::move(row));
    }
    return c;
}

json gap_report_to_json(const certify::GapReport& r, const certify::UmCertificate& source) {
    json grid = json::array();
    for (const auto& pt : r.grid) {
        grid.push_back(json{{"eta", rational_to_json(pt.eta)},
                            {"log_c", rational_to_json(pt.log_c)},
                            {"c_float", decimal_string_of_exp(pt.log_c)},
                            {"worst",
                             json{{"minpoly", poly_to_json(pt.worst_minpoly)},
                                  {"box", box_to_json(pt.worst_box)},
                                  {"height", interval_to_json(pt.worst_height)},
                                  {"distance", interval_to_json(pt.worst_distance)}}}});
    }
    json out{{"degree_bound", r.degree_bound},
             {"coeff_bound", r.coeff_bound},
             {"candidates_scanned", r.candidates_scanned},
             {"members_excluded", r.members_excluded},
             {"grid", grid},
             {"fitted_index", r.fitted_index},
             {"exceptions", r.exceptions},
             {"floor_consistency", r.floor_consistency},
             {"fitted_above_floor", r.fitted_above_floor},
             {"kappa", box_to_json(source.kappa_enclosure)},
             {"source",
              json{{"construction",
                    source.construction == certify::UmCertificate::Construction::root
                        ? "root"
                        : "translate"},
                   {"m", source.m},
                   {"poly", poly_to_json(source.poly)},
                   {"members", [&] {
                        json ms = json::array();
                        for (const auto& row : source.rows)
                            ms.push_back(poly_to_json(row.beta.minpoly));
                        return ms;
                    }()}}}};
    if (r.height_bound) out["height_bound"] = rational_to_json(*r.height_bound);
    return out;
}

certify::GapReport gap_report_from_json(const json& j) {
    certify::GapReport r;
    r.degree_bound = j.at("degree_bound").get<long>();
    r.coeff_bound = j.at("coeff_bound").get<long>();
    if (j.contains("height_bound")) r.height_bound = rational_from_json(j.at("height_bound"));
    r.candidates_scanned = j.at("candidates_scanned").get<unsigned long>();
    r.members_excluded = j.at("members_excluded").get<unsigned long>();
    for (const auto& pt : j.at("grid")) {
        certify::GapReport::EtaPoint p;
        p.eta = rational_from_json(pt.at("eta"));
        p.log_c = rational_from_json(pt.at("log_c"));
        p.worst_minpoly = poly_from_json(pt.at("worst").at("minpoly"));
        p.worst_box = box_from_json(pt.at("worst").at("box"));
        p.worst_height = interval_from_json(pt.at("worst").at("height"));
        p.worst_distance = interval_from_json(pt.at("worst").at("distance"));
        r.grid.push_back(std::move(p));
    }
    r.fitted_index = j.at("fitted_index").get<size_t>();
    for (const auto& e : j.at("exceptions")) r.exceptions.push_back(e.get<std::string>());
    r.floor_consistency = j.at("floor_consistency").get<bool>();
    r.fitted_above_floor = j.at("fitted_above_floor").get<bool>();
    return r;
}

std::string decimal_string_of_exp(const Rational& log_value) {
    Interval e = exp_interval(Interval::point(log_value), 160);
    return decimal_string(e.mid(), 20);
}

std::string canonical_hash(const json& document) {
    json canon = document;
    canon.erase("created_utc");
    canon.erase("canonical_hash");
    const std::string bytes = canon.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

json wrap_document(const std::string& kind, json payload) {
    payload["schema"] = kSchemaVersion;
    payload["kind"] = kind;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    payload["created_utc"] = buf;
    payload["canonical_hash"] = canonical_hash(payload);
    return payload;
}

void write_document(const json& document, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot open output file " + tmp.string());
        out << document.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open certificate file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

namespace {

std::string csv_header() { return "# umlab-csv/1\nn,h_alpha,v_n,h_beta,w_n\n"; }

} // namespace

std::string certificate_csv(const certify::LNumberCertificate& c) {
    std::string out = csv_header();
    for (const auto& row : c.rows) {
        out += std::to_string(row.n) + "," + row.height.decimal(20) + "," +
               decimal_string(row.v, 20) + ",,\n";
    }
    return out;
}

std::string certificate_csv(const certify::UmCertificate& c) {
    std::string out = csv_header();
    for (const auto& row : c.rows) {
        LogExpr h_alpha = LogExpr::log_of(Int(c.series.base),
                                          Rational(c.series.exponent(row.n)));
        const std::string h_beta = row.height_exact
                                       ? row.height_exact->decimal(20)
                                       : decimal_string(row.height_bounds.mid(), 20);
        out += std::to_string(row.n) + "," + h_alpha.decimal(20) + "," +
               decimal_string(c.series.v_lower(row.n), 20) + "," + h_beta + "," +
               decimal_string(row.w, 20) + "\n";
    }
    return out;
}

} // namespace umlab::io
