#include "umlab/config.hpp"

#include <fstream>
#include <sstream>

namespace umlab::cli {

ComplexBox parse_branch(const std::string& text) {
    std::vector<Rational> parts;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
    if (parts.size() != 4)
        throw Error("branch must be re_lo,re_hi,im_lo,im_hi (got " +
                    std::to_string(parts.size()) + " fields)");
    return ComplexBox(Interval(parts[0], parts[1]), Interval(parts[2], parts[3]));
}

std::string branch_to_text(const ComplexBox& box) {
    return to_string(box.re.lo) + "," + to_string(box.re.hi) + "," + to_string(box.im.lo) + "," +
           to_string(box.im.hi);
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    std::istringstream ss(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw Error("config parse error at line " + std::to_string(lineno) +
                            ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            const size_t b = s.find_first_not_of(" \t\r");
            const size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "precision_bits") cfg.precision_bits = std::stoul(value);
            else if (key == "endpoint_bits") cfg.endpoint_bits = std::stoul(value);
            else if (key == "denominator_bits") cfg.denominator_bits = std::stoul(value);
            else if (key == "prime_budget") cfg.prime_budget = std::stoul(value);
            else if (key == "range") {
                const size_t dots = value.find("..");
                if (dots == std::string::npos) throw Error("range must be a..b");
                cfg.range_min = std::stoul(value.substr(0, dots));
                cfg.range_max = std::stoul(value.substr(dots + 2));
            } else if (key == "coeff_bound") cfg.coeff_bound = std::stol(value);
            else if (key == "height_bound") cfg.height_bound = parse_rational(value);
            else if (key == "out") cfg.out_path = value;
            else if (key == "csv") cfg.csv_path = value;
            else if (key == "branch") cfg.branch = parse_branch(value);
            else if (key == "base") cfg.base = std::stoul(value);
            else if (key == "exponents") cfg.exponents = value;
            else if (key == "poly") cfg.poly_text = value;
            else if (key == "a") cfg.a_text = value;
            else if (key == "m") cfg.m = std::stoul(value);
            else if (key == "cover") cfg.cover_degree = std::stoul(value);
            else throw Error("unknown key '" + key + "'");
        } catch (const std::exception& e) {
            throw Error("config parse error at line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

std::string RunConfig::to_text() const {
    std::ostringstream out;
    out << "precision_bits = " << precision_bits << "\n";
    out << "endpoint_bits = " << endpoint_bits << "\n";
    out << "denominator_bits = " << denominator_bits << "\n";
    out << "prime_budget = " << prime_budget << "\n";
    out << "range = " << range_min << ".." << range_max << "\n";
    out << "coeff_bound = " << coeff_bound << "\n";
    if (height_bound) out << "height_bound = " << to_string(*height_bound) << "\n";
    if (!out_path.empty()) out << "out = " << out_path << "\n";
    if (!csv_path.empty()) out << "csv = " << csv_path << "\n";
    if (branch) out << "branch = " << branch_to_text(*branch) << "\n";
    out << "base = " << base << "\n";
    out << "exponents = " << exponents << "\n";
    if (!poly_text.empty()) out << "poly = " << poly_text << "\n";
    if (!a_text.empty()) out << "a = " << a_text << "\n";
    out << "m = " << m << "\n";
    if (cover_degree) out << "cover = " << cover_degree << "\n";
    return out.str();
}

void RunConfig::validate() const {
    if (precision_bits == 0 || endpoint_bits == 0 || denominator_bits == 0 || prime_budget == 0)
        throw Error("all budgets must be positive");
    if (range_min < 1 || range_max < range_min) throw Error("range must satisfy 1 <= a <= b");
    if (coeff_bound < 1) throw Error("coeff_bound must be >= 1");
    if (base < 2) throw Error("base must be >= 2");
}

} // namespace umlab::cli
