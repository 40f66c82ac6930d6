#ifndef UMLAB_JSONIO_HPP
#define UMLAB_JSONIO_HPP

#include "umlab/certify.hpp"

#include <json.hpp>

#include <string>

namespace umlab::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "umlab-cert/1";

// All numeric fields are strings: exact rationals as "p/q", floats as
// decimal renderings. JSON numbers appear only for small structural integers.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json interval_to_json(const Interval& v);
Interval interval_from_json(const json& j);

json box_to_json(const ComplexBox& b);
ComplexBox box_from_json(const json& j);

json logexpr_to_json(const LogExpr& e);
LogExpr logexpr_from_json(const json& j);

json poly_to_json(const polyring::IntPoly& f);
polyring::IntPoly poly_from_json(const json& j);

json algebraic_to_json(const exactnum::AlgebraicNumber& a);
exactnum::AlgebraicNumber algebraic_from_json(const json& j);

json series_to_json(const certify::LiouvilleSeries& s);
certify::LiouvilleSeries series_from_json(const json& j);

json galois_to_json(const galois::GaloisCertificate& c);
galois::GaloisCertificate galois_from_json(const json& j);

json genus_to_json(const curves::GenusReport& r);
curves::GenusReport genus_from_json(const json& j);

json wilms_to_json(const certify::WilmsCheck& w);
certify::WilmsCheck wilms_from_json(const json& j);

json l_certificate_to_json(const certify::LNumberCertificate& c);
certify::LNumberCertificate l_certificate_from_json(const json& j);

json um_certificate_to_json(const certify::UmCertificate& c);
certify::UmCertificate um_certificate_from_json(const json& j);

json gap_report_to_json(const certify::GapReport& r, const certify::UmCertificate& source);
certify::GapReport gap_report_from_json(const json& j);

// Float rendering of e^{log_value} for report display.
std::string decimal_string_of_exp(const Rational& log_value);

// Envelope: schema/kind/created_utc/canonical_hash around a payload document.
json wrap_document(const std::string& kind, json payload);
// FNV-1a 64 over the canonical dump (document minus created_utc and
// canonical_hash, compact, sorted keys).
std::string canonical_hash(const json& document);

// Atomic write: temp file in the target directory, then rename.
void write_document(const json& document, const std::string& path);
json read_document(const std::string& path);

// Fixed, versioned CSV of per-row data: columns n, h_alpha, v_n, h_beta, w_n.
std::string certificate_csv(const certify::LNumberCertificate& c);
std::string certificate_csv(const certify::UmCertificate& c);

} // namespace umlab::io

#endif
