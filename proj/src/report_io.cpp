#include "mcshane/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mcshane::io {

using nlohmann::json;

namespace {

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

double round9(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format("%.9g", v).c_str(), nullptr);
}

json number_value(double v) {
  if (std::isfinite(v)) return round9(v);
  return format("%g", v);
}

}  // namespace

void put_number(json& j, const std::string& key, double v) {
  j[key] = number_value(v);
  j[key + "_full"] = format("%.17g", v);
}

json point_json(const BoundaryPoint& p) {
  json j;
  j["exact"] = p.is_exact() ? json(p.to_string()) : json(nullptr);
  if (p.is_infinite()) {
    j["value"] = "inf";
    return j;
  }
  put_number(j, "value", p.to_double());
  return j;
}

json map_json(const MobiusMap& m) {
  return json::array({m.a().to_string(), m.b().to_string(), m.c().to_string(), m.d().to_string()});
}

json classification_json(const MobiusMap& m) {
  const Classification c = m.classify();
  json j{{"schema", kSchema}, {"kind", to_string(c.kind)}, {"matrix", map_json(m)}};
  j["trace_exact"] = c.trace.to_string();
  put_number(j, "trace", c.trace.to_double());
  if (c.kind == IsometryClass::Parabolic || c.kind == IsometryClass::Hyperbolic) {
    const FixedPoints fp = m.fixed_points();
    j["fixed_points"] = json::array({point_json(fp.attracting)});
    if (fp.repelling) j["fixed_points"].push_back(point_json(*fp.repelling));
  }
  if (c.kind == IsometryClass::Hyperbolic) put_number(j, "translation_length", m.translation_length());
  return j;
}

json identity_json(const IdentityReport& r, const std::string& surface) {
  json j{{"schema", kSchema}, {"surface", surface}, {"terms", r.terms}, {"depth", r.depth}};
  put_number(j, "sum", r.sum);
  put_number(j, "residual", r.residual);
  put_number(j, "largest_pruned", r.largest_pruned);
  j["eps"] = r.eps ? json(*r.eps) : json(nullptr);
  j["depth_bound"] = r.depth_bound ? json(*r.depth_bound) : json(nullptr);
  return j;
}

json deadzone_json(const Deadzone& dz, const EndpointCheck* endpoints) {
  json j{{"schema", kSchema}, {"ball", dz.radius}};
  j["center"] = point_json(dz.center);
  j["l"] = point_json(dz.left);
  j["r"] = point_json(dz.right);
  put_number(j, "width", dz.width);
  put_number(j, "left_offset", dz.left_offset);
  put_number(j, "right_offset", dz.right_offset);
  j["trace_exact"] = dz.trace().to_string();
  put_number(j, "trace", dz.trace().to_double());
  j["traces"] = json::array({abs(dz.left_map.trace()).to_string(), abs(dz.right_map.trace()).to_string()});
  put_number(j, "length", dz.length());
  put_number(j, "gap_residual", dz.gap_residual());
  j["right_map"] = map_json(dz.right_map);
  j["left_map"] = map_json(dz.left_map);
  if (endpoints) {
    j["endpoints"] = {{"left_simple", !endpoints->left_verdict.non_simple()},
                      {"right_simple", !endpoints->right_verdict.non_simple()},
                      {"left_cusp_lift", endpoints->left_is_cusp},
                      {"right_cusp_lift", endpoints->right_is_cusp}};
  }
  return j;
}

json return_point_json(const ReturnPoint& rp, const BoundaryPoint& center, const Deadzone* dz) {
  json j{{"schema", kSchema}, {"ball", rp.radius}, {"word", rp.word.to_string()}, {"stable", rp.stable}};
  j["map"] = map_json(rp.map);
  j["re"] = point_json(BoundaryPoint(rp.point.re));
  j["im_sq_exact"] = rp.point.im_sq.to_string();
  put_number(j, "im", rp.point.im());
  j["center"] = point_json(center);
  if (dz) {
    j["center_deadzone"] = {{"l", point_json(dz->left)}, {"r", point_json(dz->right)}};
    j["x_in_center_deadzone"] = dz->contains(BoundaryPoint(rp.point.re));
  }
  return j;
}

json coverage_json(const CoverageReport& r, bool with_deadzones) {
  json j{{"schema", kSchema}, {"depth", r.depth}, {"ball", r.radius}, {"deadzones", r.deadzones.size()},
         {"overlaps", r.overlaps}};
  put_number(j, "total_width", r.total_width);
  put_number(j, "identity_twice", r.identity_twice);
  put_number(j, "difference", r.total_width - r.identity_twice);
  if (r.scan) {
    j["scan"] = {{"nonsimple", r.scan->non_simple},
                 {"no_crossing", r.scan->no_crossing},
                 {"cusp_center", r.scan->cusp_center}};
  }
  if (with_deadzones) {
    json list = json::array();
    for (const CoverageEntry& e : r.deadzones) {
      json d{{"slope", e.slope.to_string()}, {"orientation", e.orientation}};
      d["center"] = point_json(e.center);
      d["l"] = point_json(e.left);
      d["r"] = point_json(e.right);
      put_number(d, "width", e.deadzone.width);
      list.push_back(std::move(d));
    }
    j["intervals"] = std::move(list);
  }
  return j;
}

json scan_json(const std::vector<ScanPoint>& points, const ScanCounts& counts, const Scalar& step, int radius) {
  json j{{"schema", kSchema}, {"ball", radius}, {"points", points.size()}, {"resolution", step.to_string()}};
  j["counts"] = {{"nonsimple", counts.non_simple},
                 {"no_crossing", counts.no_crossing},
                 {"cusp_center", counts.cusp_center}};
  const double n = static_cast<double>(points.size());
  put_number(j, "nonsimple_fraction", n > 0 ? static_cast<double>(counts.non_simple) / n : 0.0);
  json rows = json::array();
  for (const ScanPoint& p : points)
    rows.push_back({{"x", p.x.to_string()},
                    {"verdict", to_string(p.verdict)},
                    {"witness_length", p.witness_length},
                    {"deadzone_id", p.deadzone_id}});
  j["grid"] = std::move(rows);
  return j;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
  out << "x,verdict,witness_length,deadzone_id\n";
  for (const ScanPoint& p : points)
    out << p.x.to_string() << ',' << to_string(p.verdict) << ',' << p.witness_length << ',' << p.deadzone_id
        << '\n';
}

}  // namespace mcshane::io
