#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hqgeo/cc_metric.hpp"
#include "hqgeo/curve.hpp"
#include "hqgeo/hypersurface.hpp"
#include "hqgeo/riemannian.hpp"

namespace hqgeo::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hqgeo/1";
inline constexpr const char* kCurveCsvHeader = "lambda,x1,x2,x3,x4,t1,t2,t3,theta1,theta2,theta3,res_horizontality";

/// Shortest round-trip decimal form of a finite double; throws Internal for NaN/Inf.
std::string format_number(double v);

/// One row per sample (segment boundaries repeated), theta columns evaluated on the stored velocity.
std::string curve_to_csv(const SampledCurve& c);
Json curve_to_json(const SampledCurve& c);

Json point_to_json(const HeisPoint& p);
Json curvature_report_to_json(const CurvatureReport& rep);

/// Top-level document: {"schema": "hqgeo/1", "kind": kind, ...body}.
Json document(const std::string& kind, Json body);

/// Serializes after checking that every number is finite (throws Internal otherwise).
std::string dump(const Json& j);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace hqgeo::io
