#include "hqgeo/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"

namespace hqgeo::io {

std::string format_number(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::Internal, "refusing to serialize a non-finite number");
  if (v == 0.0) v = 0.0;
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string curve_to_csv(const SampledCurve& c) {
  std::string out = kCurveCsvHeader;
  out += '\n';
  for (const auto& seg : c.segments()) {
    for (const auto& s : seg) {
      if (!s.velocity) fail(ErrorKind::Input, "curve has no velocities");
      const Vec7 x = s.point.coords();
      const Vec3 th = theta_eval(s.point, *s.velocity);
      out += format_number(s.lambda);
      for (int k = 0; k < 7; ++k) out += ',' + format_number(x[k]);
      for (int a = 0; a < 3; ++a) out += ',' + format_number(th[a]);
      out += ',' + format_number(th.norm());
      out += '\n';
    }
  }
  return out;
}

Json point_to_json(const HeisPoint& p) {
  return Json::array({p.q.w, p.q.x, p.q.y, p.q.z, p.t.x, p.t.y, p.t.z});
}

Json curve_to_json(const SampledCurve& c) {
  Json rows = Json::array();
  for (const auto& seg : c.segments()) {
    for (const auto& s : seg) {
      if (!s.velocity) fail(ErrorKind::Input, "curve has no velocities");
      const Vec3 th = theta_eval(s.point, *s.velocity);
      rows.push_back(Json{{"lambda", s.lambda},
                          {"point", point_to_json(s.point)},
                          {"theta", Json::array({th[0], th[1], th[2]})},
                          {"res_horizontality", th.norm()}});
    }
  }
  return rows;
}

Json curvature_report_to_json(const CurvatureReport& rep) {
  Json sectional = Json::array();
  for (const auto& e : rep.sectional) {
    Json row{{"u", frame_label(e.u)}, {"v", frame_label(e.v)}, {"value", e.value}};
    if (e.has_published) row["published"] = e.published;
    sectional.push_back(row);
  }
  Json ricci_trace = Json::object(), ricci_mean = Json::object(), ricci_pub = Json::object();
  Json mean_match = Json::object(), trace_match = Json::object();
  for (int u = 0; u < 7; ++u) {
    const std::string k = frame_label(u);
    ricci_trace[k] = rep.ricci_trace[u];
    ricci_mean[k] = rep.ricci_mean[u];
    ricci_pub[k] = rep.ricci_published[u];
    mean_match[k] = rep.ricci_mean_match[u];
    trace_match[k] = rep.ricci_trace_match[u];
  }
  return Json{{"L", Json::array({rep.L[0], rep.L[1], rep.L[2]})},
              {"sectional", sectional},
              {"ricci_trace", ricci_trace},
              {"ricci_mean", ricci_mean},
              {"ricci_published", ricci_pub},
              {"scalar_trace", rep.scalar_trace},
              {"scalar_paper_convention", rep.scalar_paper_convention},
              {"scalar_published", rep.scalar_published},
              {"paper_match_flags",
               Json{{"sectional", rep.sectional_match},
                    {"ricci_mean", mean_match},
                    {"ricci_trace", trace_match},
                    {"scalar", rep.scalar_match},
                    {"ricci_vertical_mismatch", rep.ricci_vertical_mismatch_flag}}}};
}

Json document(const std::string& kind, Json body) {
  Json doc{{"schema", kSchema}, {"kind", kind}};
  for (auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

namespace {

void check_finite(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>()))
    fail(ErrorKind::Internal, "non-finite number in JSON output");
  if (j.is_structured())
    for (const auto& child : j) check_finite(child);
}

}  // namespace

std::string dump(const Json& j) {
  check_finite(j);
  return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Input, "cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out.flush()) fail(ErrorKind::Input, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    fail(ErrorKind::Input, "cannot move output into place: " + ec.message());
  }
}

}  // namespace hqgeo::io
