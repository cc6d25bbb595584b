// hqgeo command-line front end. Talks to the library only through hqgeo.h.
#include <hqgeo.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(hqgeo_status s) {
  if (s == HQGEO_OK) return;
  std::string msg = std::string(hqgeo_status_name(s)) + ": " + hqgeo_last_error();
  if (s == HQGEO_ERR_PARAMETER) throw UsageError(msg);
  throw LibraryError(msg);
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { hqgeo_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

double parse_real(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && *b == ' ') ++b;
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e || !std::isfinite(v)) throw UsageError("not a finite real: '" + s + "'");
  return v;
}

std::vector<double> split_reals(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(parse_real(item));
  if (!s.empty() && s.back() == sep) throw UsageError("trailing separator in '" + s + "'");
  return out;
}

hqgeo_point parse_point(const std::string& s) {
  const auto v = split_reals(s, ',');
  if (v.size() != 7) throw UsageError("a point needs 7 comma-separated reals x1,x2,x3,x4,t1,t2,t3; got '" + s + "'");
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6]}};
}

/// "r=0.5", "r=0.1,0.2,0.3" or "r=lo:hi:n".
std::vector<double> parse_grid(const std::string& s) {
  if (s.rfind("r=", 0) != 0) throw UsageError("grid must look like r=0.5, r=0.1,0.2 or r=lo:hi:n");
  const std::string body = s.substr(2);
  if (body.find(':') != std::string::npos) {
    const auto v = split_reals(body, ':');
    if (v.size() != 3 || v[2] < 1 || v[2] != std::floor(v[2])) throw UsageError("range grid needs lo:hi:n with integer n >= 1");
    const int n = static_cast<int>(v[2]);
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(n == 1 ? v[0] : v[0] + (v[1] - v[0]) * k / (n - 1));
    return out;
  }
  return split_reals(body, ',');
}

struct Output {
  std::string path;

  void write(const std::string& content) const {
    if (path.empty() || path == "-") {
      std::cout << content;
      std::cout.flush();
      return;
    }
    namespace fs = std::filesystem;
    fs::path target(path);
    if (const char* dir = std::getenv("HQGEO_OUTPUT_DIR"); dir && *dir && target.is_relative()) target = fs::path(dir) / target;
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw LibraryError("cannot open '" + tmp.string() + "' for writing");
      out << content;
      if (!out.flush()) throw LibraryError("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      throw LibraryError("cannot move output into place: " + target.string());
    }
  }
};

std::string dump(const Json& j) {
  // Finite-only: the JSON writer would turn NaN/Inf into null.
  std::function<void(const Json&)> guard = [&](const Json& x) {
    if (x.is_number_float() && !std::isfinite(x.get<double>())) throw LibraryError("non-finite value in output");
    if (x.is_structured())
      for (const auto& c : x) guard(c);
  };
  guard(j);
  return j.dump(2) + "\n";
}

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json point_json(const hqgeo_point& p) { return Json::array({p.x[0], p.x[1], p.x[2], p.x[3], p.t[0], p.t[1], p.t[2]}); }

hqgeo_format format_of(const std::string& f) {
  if (f == "csv") return HQGEO_FORMAT_CSV;
  if (f == "json") return HQGEO_FORMAT_JSON;
  if (f == "table") return HQGEO_FORMAT_TABLE;
  throw UsageError("unknown format '" + f + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of the quaternionic Heisenberg group"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hqgeo_version());

  std::string format;
  std::string output;
  std::uint64_t seed = 42;
  bool as_published = false;
  auto common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", output, "Write to this file instead of standard output");
    sub->add_flag("--as-published", as_published, "Use the printed constants instead of the corrected ones");
  };

  std::string from = "0,0,0,0,0,0,0", to, target, metric, L_text, grid = "r=0.5", surface, params, suite = "all";
  double radius = 1.0;
  std::size_t samples = 0;

  auto* dist = app.add_subcommand("dist", "Distances between two points");
  dist->add_option("--from", from, "Start point x1,..,t3")->capture_default_str();
  dist->add_option("--to", to, "End point x1,..,t3")->required();
  dist->add_option("--metric", metric, "cc, koranyi or both")->check(CLI::IsMember({"cc", "koranyi", "both"}));
  common(dist, {"json", "csv"});

  auto* geo = app.add_subcommand("geodesic", "Sampled geodesic from the origin (CC, or g_L with --L)");
  geo->add_option("--target", target, "Target point x1,..,t3")->required();
  geo->add_option("--L", L_text, "Symmetric Riemannian scale L > 0");
  geo->add_option("--samples", samples, "Number of intervals (default 256)");
  common(geo, {"csv", "json"});

  auto* sph = app.add_subcommand("sphere", "Samples of a sphere about the origin");
  sph->add_option("--radius", radius, "Radius R > 0")->required();
  sph->add_option("--samples", samples, "Number of points")->required();
  sph->add_option("--metric", metric, "cc or koranyi")->check(CLI::IsMember({"cc", "koranyi"}));
  sph->add_option("--seed", seed, "Generator seed")->capture_default_str();
  common(sph, {"csv", "json"});

  auto* curv = app.add_subcommand("curvature", "Curvature report of g_L");
  curv->add_option("--L", L_text, "L1,L2,L3")->required();
  common(curv, {"json"});

  auto* hm = app.add_subcommand("hmc", "Horizontal mean curvature over a grid of radii");
  hm->add_option("--surface", surface, "hyperplane-x1, paraboloid-sqrt43, euclidean-sphere, koranyi-sphere, cc-sphere")
      ->required();
  hm->add_option("--params", params, "Surface parameters, e.g. R=1");
  hm->add_option("--grid", grid, "r=0.5, r=0.1,0.2 or r=lo:hi:n")->capture_default_str();
  common(hm, {"csv", "json"});

  auto* path = app.add_subcommand("path", "Horizontal path between two points");
  path->add_option("--from", from, "Start point x1,..,t3")->capture_default_str();
  path->add_option("--to", to, "End point x1,..,t3")->required();
  path->add_option("--samples", samples, "Intervals per smooth piece (even, default 256)");
  common(path, {"csv", "json"});

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--suite", suite, "all, algebra, geodesics, curvature or hmc")
      ->check(CLI::IsMember({"all", "algebra", "geodesics", "curvature", "hmc"}))
      ->capture_default_str();
  ver->add_option("--seed", seed, "Generator seed")->capture_default_str();
  ver->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  ver->add_option("--output,-o", output, "Write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const hqgeo_convention conv = as_published ? HQGEO_AS_PUBLISHED : HQGEO_CORRECTED;
  const Output out{output};

  try {
    if (dist->parsed()) {
      if (format.empty()) format = "json";
      if (metric.empty()) metric = "both";
      const hqgeo_point a = parse_point(from), b = parse_point(to);
      std::optional<double> dcc, dk, ratio;
      if (metric != "koranyi") {
        double v = 0;
        check(hqgeo_cc_distance(&a, &b, conv, &v));
        dcc = v;
      }
      if (metric != "cc") {
        double v = 0;
        check(hqgeo_koranyi_distance(&a, &b, &v));
        dk = v;
      }
      if (dcc && dk && *dk > 0.0) ratio = *dcc / *dk;
      if (format == "json") {
        Json body{{"schema", "hqgeo/1"}, {"kind", "dist"}, {"from", point_json(a)}, {"to", point_json(b)}};
        if (dcc) body["d_cc"] = *dcc;
        if (dk) body["d_K"] = *dk;
        if (ratio) body["ratio"] = *ratio;
        out.write(dump(body));
      } else {
        std::string head, row;
        auto col = [&](const char* name, const std::optional<double>& v) {
          if (!v) return;
          head += (head.empty() ? "" : ",") + std::string(name);
          row += (row.empty() ? "" : ",") + fmt(*v);
        };
        col("d_cc", dcc);
        col("d_K", dk);
        col("ratio", ratio);
        out.write(head + "\n" + row + "\n");
      }
    } else if (geo->parsed()) {
      if (format.empty()) format = "csv";
      const hqgeo_point t = parse_point(target);
      const int n = samples ? static_cast<int>(samples) : 256;
      hqgeo_curve* c = nullptr;
      if (L_text.empty())
        check(hqgeo_cc_geodesic(&t, n, conv, &c));
      else
        check(hqgeo_gl_geodesic(&t, parse_real(L_text), n, conv, &c));
      std::unique_ptr<hqgeo_curve, decltype(&hqgeo_curve_free)> guard(c, hqgeo_curve_free);
      StringOut s;
      check(hqgeo_curve_serialize(c, format_of(format), &s.p));
      out.write(s.str());
    } else if (sph->parsed()) {
      if (format.empty()) format = "csv";
      if (metric.empty()) metric = "cc";
      hqgeo_pointset* ps = nullptr;
      check(hqgeo_sphere_sample(metric.c_str(), radius, samples, seed, conv, &ps));
      std::unique_ptr<hqgeo_pointset, decltype(&hqgeo_pointset_free)> guard(ps, hqgeo_pointset_free);
      StringOut s;
      check(hqgeo_pointset_serialize(ps, format_of(format), &s.p));
      out.write(s.str());
    } else if (curv->parsed()) {
      const auto l = split_reals(L_text, ',');
      if (l.size() != 3) throw UsageError("--L needs three comma-separated reals");
      StringOut s;
      check(hqgeo_curvature_report_json(l[0], l[1], l[2], &s.p));
      out.write(s.str());
    } else if (hm->parsed()) {
      if (format.empty()) format = "csv";
      const auto r = parse_grid(grid);
      hqgeo_surface* sf = nullptr;
      check(hqgeo_surface_create(surface.c_str(), params.c_str(), conv, &sf));
      std::unique_ptr<hqgeo_surface, decltype(&hqgeo_surface_free)> guard(sf, hqgeo_surface_free);
      StringOut s;
      check(hqgeo_surface_hmc_grid(sf, r.data(), r.size(), format_of(format), &s.p));
      out.write(s.str());
    } else if (path->parsed()) {
      if (format.empty()) format = "csv";
      const hqgeo_point a = parse_point(from), b = parse_point(to);
      const int n = samples ? static_cast<int>(samples) : 256;
      hqgeo_curve* c = nullptr;
      check(hqgeo_path_connect(&a, &b, n, &c));
      std::unique_ptr<hqgeo_curve, decltype(&hqgeo_curve_free)> guard(c, hqgeo_curve_free);
      StringOut s;
      check(hqgeo_curve_serialize(c, format_of(format), &s.p));
      out.write(s.str());
    } else if (ver->parsed()) {
      if (format.empty()) format = "table";
      int failures = 0;
      StringOut s;
      check(hqgeo_verify(suite.c_str(), seed, format_of(format), &s.p, &failures));
      out.write(s.str());
      if (failures > 0) {
        std::cerr << "verify: " << failures << " failing check(s)\n";
        return kExitDomain;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "hqgeo: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "hqgeo: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
