#include "hqgeo.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <sstream>
#include <string>

#include "hqgeo/cc_metric.hpp"
#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"
#include "hqgeo/horizontal_paths.hpp"
#include "hqgeo/hypersurface.hpp"
#include "hqgeo/io.hpp"
#include "hqgeo/riemannian.hpp"
#include "hqgeo/verify.hpp"

struct hqgeo_curve {
  hqgeo::SampledCurve curve;
  std::vector<hqgeo::CurveSample> flat;
};

struct hqgeo_pointset {
  std::string metric;
  double radius = 0.0;
  std::vector<hqgeo::HeisPoint> points;
};

struct hqgeo_surface {
  hqgeo::CatalogSurface surface;
  hqgeo::Convention conv = hqgeo::Convention::Corrected;
};

namespace {

thread_local std::string last_error;

hqgeo_status status_of(hqgeo::ErrorKind k) {
  switch (k) {
    case hqgeo::ErrorKind::Domain: return HQGEO_ERR_DOMAIN;
    case hqgeo::ErrorKind::Parameter: return HQGEO_ERR_PARAMETER;
    case hqgeo::ErrorKind::Input: return HQGEO_ERR_INPUT;
    case hqgeo::ErrorKind::OutOfRange: return HQGEO_ERR_OUT_OF_RANGE;
    case hqgeo::ErrorKind::Evaluation: return HQGEO_ERR_EVALUATION;
    case hqgeo::ErrorKind::Internal: return HQGEO_ERR_INTERNAL;
  }
  return HQGEO_ERR_INTERNAL;
}

template <class F>
hqgeo_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HQGEO_OK;
  } catch (const hqgeo::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return HQGEO_ERR_INTERNAL;
}

hqgeo_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HQGEO_ERR_NULL_ARG;
}

hqgeo::HeisPoint from_c(const hqgeo_point& p) {
  for (double v : p.x)
    if (!std::isfinite(v)) hqgeo::fail(hqgeo::ErrorKind::Input, "point has a non-finite coordinate");
  for (double v : p.t)
    if (!std::isfinite(v)) hqgeo::fail(hqgeo::ErrorKind::Input, "point has a non-finite coordinate");
  return {{p.x[0], p.x[1], p.x[2], p.x[3]}, {p.t[0], p.t[1], p.t[2]}};
}

hqgeo_point to_c(const hqgeo::HeisPoint& p) {
  return {{p.q.w, p.q.x, p.q.y, p.q.z}, {p.t.x, p.t.y, p.t.z}};
}

hqgeo::Convention conv_of(hqgeo_convention c) {
  if (c == HQGEO_CORRECTED) return hqgeo::Convention::Corrected;
  if (c == HQGEO_AS_PUBLISHED) return hqgeo::Convention::AsPublished;
  hqgeo::fail(hqgeo::ErrorKind::Parameter, "unknown convention");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hqgeo_curve* wrap(hqgeo::SampledCurve c) {
  auto* h = new hqgeo_curve{std::move(c), {}};
  h->flat = h->curve.samples();
  return h;
}

std::map<std::string, double> parse_params(const char* text) {
  std::map<std::string, double> out;
  if (!text) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) hqgeo::fail(hqgeo::ErrorKind::Parameter, "bad surface parameter '" + item + "'");
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || !std::isfinite(v))
      hqgeo::fail(hqgeo::ErrorKind::Parameter, "bad surface parameter value '" + value + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

}  // namespace

extern "C" {

const char* hqgeo_version(void) { return "0.1.0"; }

const char* hqgeo_last_error(void) { return last_error.c_str(); }

const char* hqgeo_status_name(hqgeo_status s) {
  switch (s) {
    case HQGEO_OK: return "ok";
    case HQGEO_ERR_DOMAIN: return "domain error";
    case HQGEO_ERR_PARAMETER: return "parameter error";
    case HQGEO_ERR_INPUT: return "input error";
    case HQGEO_ERR_OUT_OF_RANGE: return "out of range";
    case HQGEO_ERR_EVALUATION: return "evaluation error";
    case HQGEO_ERR_INTERNAL: return "internal error";
    case HQGEO_ERR_NULL_ARG: return "null argument";
  }
  return "unknown status";
}

void hqgeo_string_free(char* s) { std::free(s); }

hqgeo_status hqgeo_compose(const hqgeo_point* a, const hqgeo_point* b, hqgeo_point* out) {
  if (!a || !b || !out) return null_arg("compose");
  return guarded([&] { *out = to_c(hqgeo::compose(from_c(*a), from_c(*b))); });
}

hqgeo_status hqgeo_invert(const hqgeo_point* p, hqgeo_point* out) {
  if (!p || !out) return null_arg("invert");
  return guarded([&] { *out = to_c(hqgeo::invert(from_c(*p))); });
}

hqgeo_status hqgeo_koranyi_gauge(const hqgeo_point* p, double* out) {
  if (!p || !out) return null_arg("koranyi_gauge");
  return guarded([&] { *out = hqgeo::koranyi_gauge(from_c(*p)); });
}

hqgeo_status hqgeo_koranyi_distance(const hqgeo_point* a, const hqgeo_point* b, double* out) {
  if (!a || !b || !out) return null_arg("koranyi_distance");
  return guarded([&] { *out = hqgeo::koranyi_distance(from_c(*a), from_c(*b)); });
}

hqgeo_status hqgeo_cc_distance(const hqgeo_point* a, const hqgeo_point* b, hqgeo_convention conv, double* out) {
  if (!a || !b || !out) return null_arg("cc_distance");
  return guarded([&] { *out = hqgeo::cc_distance(from_c(*a), from_c(*b), conv_of(conv)); });
}

hqgeo_status hqgeo_comparison_ratio(const hqgeo_point* p, hqgeo_convention conv, double* out) {
  if (!p || !out) return null_arg("comparison_ratio");
  return guarded([&] { *out = hqgeo::comparison_ratio(from_c(*p), conv_of(conv)); });
}

hqgeo_status hqgeo_x0_solve(double ratio, hqgeo_convention conv, double* out) {
  if (!out) return null_arg("x0_solve");
  return guarded([&] { *out = hqgeo::x0_solve(ratio, conv_of(conv)); });
}

hqgeo_status hqgeo_path_connect(const hqgeo_point* from, const hqgeo_point* to, int intervals, hqgeo_curve** out) {
  if (!from || !to || !out) return null_arg("path_connect");
  return guarded([&] {
    if (intervals < 2 || intervals % 2) hqgeo::fail(hqgeo::ErrorKind::Parameter, "intervals must be even and >= 2");
    *out = wrap(hqgeo::connect(from_c(*from), from_c(*to), intervals));
  });
}

hqgeo_status hqgeo_cc_geodesic(const hqgeo_point* target, int intervals, hqgeo_convention conv, hqgeo_curve** out) {
  if (!target || !out) return null_arg("cc_geodesic");
  return guarded([&] {
    const auto c = conv_of(conv);
    *out = wrap(hqgeo::cc_geodesic_sample(hqgeo::solve_cc_geodesic(from_c(*target), c), intervals, c));
  });
}

hqgeo_status hqgeo_gl_geodesic(const hqgeo_point* target, double L, int intervals, hqgeo_convention conv,
                               hqgeo_curve** out) {
  if (!target || !out) return null_arg("gl_geodesic");
  return guarded([&] {
    const auto c = conv_of(conv);
    const auto g = hqgeo::solve_gl_bvp(from_c(*target), hqgeo::MetricParams::symmetric(L), c);
    *out = wrap(hqgeo::gl_geodesic_sample(g, intervals, c));
  });
}

size_t hqgeo_curve_sample_count(const hqgeo_curve* c) { return c ? c->flat.size() : 0; }

hqgeo_status hqgeo_curve_sample(const hqgeo_curve* c, size_t index, double* lambda, hqgeo_point* point) {
  if (!c) return null_arg("curve");
  return guarded([&] {
    if (index >= c->flat.size()) hqgeo::fail(hqgeo::ErrorKind::OutOfRange, "sample index out of range");
    if (lambda) *lambda = c->flat[index].lambda;
    if (point) *point = to_c(c->flat[index].point);
  });
}

hqgeo_status hqgeo_curve_length_cc(const hqgeo_curve* c, double* out) {
  if (!c || !out) return null_arg("curve_length_cc");
  return guarded([&] { *out = hqgeo::length_cc(c->curve); });
}

hqgeo_status hqgeo_curve_residual(const hqgeo_curve* c, double* out) {
  if (!c || !out) return null_arg("curve_residual");
  return guarded([&] { *out = hqgeo::horizontality_residual(c->curve); });
}

hqgeo_status hqgeo_curve_serialize(const hqgeo_curve* c, hqgeo_format fmt, char** out) {
  if (!c || !out) return null_arg("curve_serialize");
  return guarded([&] {
    if (fmt == HQGEO_FORMAT_JSON) {
      *out = copy_string(hqgeo::io::dump(hqgeo::io::document(
          "curve", {{"length_cc", hqgeo::length_cc(c->curve)},
                    {"max_residual", hqgeo::horizontality_residual(c->curve)},
                    {"samples", hqgeo::io::curve_to_json(c->curve)}})));
    } else {
      *out = copy_string(hqgeo::io::curve_to_csv(c->curve));
    }
  });
}

void hqgeo_curve_free(hqgeo_curve* c) { delete c; }

hqgeo_status hqgeo_sphere_sample(const char* metric, double radius, size_t n, uint64_t seed, hqgeo_convention conv,
                                 hqgeo_pointset** out) {
  if (!metric || !out) return null_arg("sphere_sample");
  return guarded([&] {
    if (!(radius > 0.0) || !std::isfinite(radius)) hqgeo::fail(hqgeo::ErrorKind::Parameter, "radius must be positive");
    if (n == 0) hqgeo::fail(hqgeo::ErrorKind::Parameter, "need at least one sample");
    const std::string m = metric;
    std::vector<hqgeo::HeisPoint> pts;
    if (m == "cc")
      pts = hqgeo::cc_sphere_sample(radius, n, seed, conv_of(conv));
    else if (m == "koranyi")
      pts = hqgeo::koranyi_sphere_sample(radius, n, seed);
    else
      hqgeo::fail(hqgeo::ErrorKind::Parameter, "unknown metric '" + m + "'");
    *out = new hqgeo_pointset{m, radius, std::move(pts)};
  });
}

size_t hqgeo_pointset_size(const hqgeo_pointset* s) { return s ? s->points.size() : 0; }

hqgeo_status hqgeo_pointset_get(const hqgeo_pointset* s, size_t index, hqgeo_point* out) {
  if (!s || !out) return null_arg("pointset_get");
  return guarded([&] {
    if (index >= s->points.size()) hqgeo::fail(hqgeo::ErrorKind::OutOfRange, "point index out of range");
    *out = to_c(s->points[index]);
  });
}

hqgeo_status hqgeo_pointset_serialize(const hqgeo_pointset* s, hqgeo_format fmt, char** out) {
  if (!s || !out) return null_arg("pointset_serialize");
  return guarded([&] {
    namespace io = hqgeo::io;
    if (fmt == HQGEO_FORMAT_JSON) {
      io::Json pts = io::Json::array();
      for (const auto& p : s->points) pts.push_back(io::point_to_json(p));
      *out = copy_string(io::dump(io::document("sphere", {{"metric", s->metric}, {"radius", s->radius}, {"points", pts}})));
    } else {
      std::string csv = "x1,x2,x3,x4,t1,t2,t3\n";
      for (const auto& p : s->points) {
        const hqgeo::Vec7 c = p.coords();
        for (int k = 0; k < 7; ++k) csv += (k ? "," : "") + io::format_number(c[k]);
        csv += '\n';
      }
      *out = copy_string(csv);
    }
  });
}

void hqgeo_pointset_free(hqgeo_pointset* s) { delete s; }

hqgeo_status hqgeo_curvature_report_json(double l1, double l2, double l3, char** out) {
  if (!out) return null_arg("curvature_report_json");
  return guarded([&] {
    namespace io = hqgeo::io;
    const auto rep = hqgeo::curvature_report(hqgeo::MetricParams(l1, l2, l3));
    *out = copy_string(io::dump(io::document("curvature", io::curvature_report_to_json(rep))));
  });
}

hqgeo_status hqgeo_surface_create(const char* name, const char* params, hqgeo_convention conv, hqgeo_surface** out) {
  if (!name || !out) return null_arg("surface_create");
  return guarded([&] {
    const auto c = conv_of(conv);
    *out = new hqgeo_surface{hqgeo::make_catalog_surface(name, parse_params(params), c), c};
  });
}

hqgeo_status hqgeo_surface_hmc_at_radius(const hqgeo_surface* s, double r, double* out) {
  if (!s || !out) return null_arg("surface_hmc_at_radius");
  return guarded([&] { *out = hqgeo::hmc(s->surface.surface, s->surface.point_at(r)); });
}

hqgeo_status hqgeo_surface_hmc_at_point(const hqgeo_surface* s, const hqgeo_point* p, double* out) {
  if (!s || !p || !out) return null_arg("surface_hmc_at_point");
  return guarded([&] { *out = hqgeo::hmc(s->surface.surface, from_c(*p)); });
}

hqgeo_status hqgeo_surface_is_characteristic(const hqgeo_surface* s, const hqgeo_point* p, int* out) {
  if (!s || !p || !out) return null_arg("surface_is_characteristic");
  return guarded([&] { *out = hqgeo::is_characteristic(s->surface.surface, from_c(*p)) ? 1 : 0; });
}

hqgeo_status hqgeo_surface_hmc_grid(const hqgeo_surface* s, const double* r, size_t n, hqgeo_format fmt, char** out) {
  if (!s || !out || (n > 0 && !r)) return null_arg("surface_hmc_grid");
  return guarded([&] {
    namespace io = hqgeo::io;
    const auto& cs = s->surface;
    const bool euclid = cs.name == "euclidean-sphere";
    io::Json rows = io::Json::array();
    std::string csv = "r,h0,reference,profile_formula";
    csv += euclid ? ",printed_display\n" : "\n";
    for (size_t k = 0; k < n; ++k) {
      const double h0 = hqgeo::hmc(cs.surface, cs.point_at(r[k]));
      io::Json row{{"r", r[k]}, {"h0", h0}};
      std::string line = io::format_number(r[k]) + "," + io::format_number(h0) + ",";
      if (const auto ref = cs.reference ? cs.reference(r[k]) : std::nullopt) {
        row["reference"] = *ref;
        line += io::format_number(*ref);
      }
      line += ",";
      if (cs.profile) {
        const double pf = hqgeo::hmc_profile(*cs.profile, r[k]);
        row["profile_formula"] = pf;
        line += io::format_number(pf);
      }
      if (euclid) {
        const double disp = hqgeo::euclidean_sphere_printed_display(cs.radius, r[k]);
        row["printed_display"] = disp;
        line += "," + io::format_number(disp);
      }
      rows.push_back(row);
      csv += line + "\n";
    }
    if (fmt == HQGEO_FORMAT_JSON)
      *out = copy_string(io::dump(io::document(
          "hmc", {{"surface", cs.name}, {"R", cs.radius}, {"reference_label", cs.reference_label}, {"values", rows}})));
    else
      *out = copy_string(csv);
  });
}

void hqgeo_surface_free(hqgeo_surface* s) { delete s; }

hqgeo_status hqgeo_verify(const char* suite, uint64_t seed, hqgeo_format fmt, char** out, int* failures) {
  if (!suite || !out) return null_arg("verify");
  return guarded([&] {
    const auto rep = hqgeo::run_verify(suite, seed);
    if (failures) *failures = rep.failures();
    if (fmt == HQGEO_FORMAT_JSON)
      *out = copy_string(hqgeo::io::dump(hqgeo::verify_json(rep)));
    else
      *out = copy_string(hqgeo::verify_table(rep));
  });
}

}  // extern "C"
