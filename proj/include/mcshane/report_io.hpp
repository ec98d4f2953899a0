#pragma once

#include "mcshane/deadzone.hpp"
#include "mcshane/identity.hpp"
#include "mcshane/mobius.hpp"
#include "mcshane/return_point.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace mcshane::io {

inline constexpr int kSchema = 1;

/// Sets j[key] to v rounded to 9 significant digits and j[key + "_full"] to
/// the round-trip decimal string of v.
void put_number(nlohmann::json& j, const std::string& key, double v);
/// Exact text of an exact point plus its rounded and full binary64 values.
nlohmann::json point_json(const BoundaryPoint& p);
nlohmann::json map_json(const MobiusMap& m);

nlohmann::json classification_json(const MobiusMap& m);
nlohmann::json identity_json(const IdentityReport& r, const std::string& surface);
nlohmann::json deadzone_json(const Deadzone& dz, const EndpointCheck* endpoints);
nlohmann::json return_point_json(const ReturnPoint& rp, const BoundaryPoint& center,
                                 const Deadzone* center_deadzone);
nlohmann::json coverage_json(const CoverageReport& r, bool with_deadzones);
nlohmann::json scan_json(const std::vector<ScanPoint>& points, const ScanCounts& counts, const Scalar& step,
                         int radius);

/// Scan grid as CSV: x,verdict,witness_length,deadzone_id.
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points);

}  // namespace mcshane::io
