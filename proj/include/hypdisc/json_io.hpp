#pragma once

// JSON encodings of elements, groups and results. Every top-level document carries
// "schema": "hypdisc/1".

#include <string>

#include <json.hpp>

#include "hypdisc/certificate.hpp"
#include "hypdisc/lorentz.hpp"
#include "hypdisc/probe.hpp"
#include "hypdisc/sp.hpp"

namespace hypdisc::json_io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hypdisc/1";

/// Parse failures throw InputError.
json parse(const std::string& text);
json read_file(const std::string& path);

/// 17 significant digits, "C" formatting, non-finite numbers as null.
std::string dump(const json& j, int indent = 2);

json to_json(const CliffordNumber& x);
CliffordNumber clifford_number_from_json(const json& j, int n);

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const BoundaryPoint& p);
BoundaryPoint boundary_point_from_json(const json& j, int n);

json to_json(const CliffordMatrix& t);
json to_json(const SpMatrix& a, Algebra algebra = Algebra::sp);
json to_json(const Element& e);
/// Accepts a bare matrix object or {"matrix": {...}}. Does not validate group membership.
Element element_from_json(const json& j);

json to_json(const GroupPresentation& g);
GroupPresentation group_from_json(const json& j);

json to_json(const IsometryInvariants& inv, const std::vector<BoundaryPoint>& fixed);
json to_json(const SpInvariants& inv);
json to_json(const Certificate& c);
json to_json(const TestMapCheck& t);
json to_json(const ZariskiEvidence& z);
/// Certificates are listed only for violations unless all_certificates is set.
json to_json(const ProbeReport& r, bool all_certificates = false);

json error_object(const std::string& type, const std::string& message);

/// Adds the schema field in front.
json document(json body);

}  // namespace hypdisc::json_io
