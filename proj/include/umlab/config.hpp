#ifndef UMLAB_CONFIG_HPP
#define UMLAB_CONFIG_HPP

#include "umlab/interval.hpp"

#include <optional>
#include <string>

namespace umlab::cli {

// Run configuration: a flat key = value text file; command-line flags
// override file values. Round-trips losslessly through to_text/parse.
struct RunConfig {
    unsigned precision_bits = 256;
    unsigned endpoint_bits = 4096;
    unsigned long denominator_bits = 10'000'000;
    unsigned long prime_budget = 1000;
    unsigned long range_min = 1;
    unsigned long range_max = 5;
    long coeff_bound = 10;
    std::optional<Rational> height_bound;
    std::string out_path;
    std::string csv_path;
    std::optional<ComplexBox> branch;
    unsigned long base = 2;
    std::string exponents = "factorial"; // "factorial" or comma-separated list
    std::string poly_text;
    std::string a_text;
    unsigned long m = 2;
    unsigned long cover_degree = 0;

    static RunConfig from_file(const std::string& path);
    static RunConfig parse(const std::string& text);
    std::string to_text() const;
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

// "re_lo,re_hi,im_lo,im_hi" with rational entries.
ComplexBox parse_branch(const std::string& text);
std::string branch_to_text(const ComplexBox& box);

} // namespace umlab::cli

#endif
