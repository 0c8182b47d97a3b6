#include "plqi/io.hpp"

#include <fstream>

namespace plqi {

namespace {

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw Error(std::string(what) + ": expected a non-empty array of reals");
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw Error(std::string(what) + ": expected a real number");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

const Json& require_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw Error(std::string("missing required field '") + name + "'");
  return *it;
}

void require_version(const Json& j) {
  const Json& v = require_field(j, "format_version");
  if (!v.is_number_integer() || v.get<int>() != 1)
    throw Error("unsupported format_version (expected 1)");
}

}  // namespace

Json complex_to_json(const Complex& c) {
  Json j;
  j["format_version"] = 1;
  j["ambient_dim"] = c.ambient_dim();
  Json vertices = Json::array();
  for (const Vec& v : c.vertices()) vertices.push_back(vec_to_json(v));
  j["vertices"] = std::move(vertices);
  j["maximal_simplices"] = c.maximal_simplices();
  return j;
}

Complex complex_from_json(const Json& j) {
  require_version(j);
  const int n = require_field(j, "ambient_dim").get<int>();
  std::vector<Vec> vertices;
  for (const Json& v : require_field(j, "vertices"))
    vertices.push_back(vec_from_json(v, "vertices"));
  std::vector<std::vector<int>> simplices;
  for (const Json& s : require_field(j, "maximal_simplices")) {
    if (!s.is_array()) throw Error("maximal_simplices: expected arrays");
    simplices.push_back(s.get<std::vector<int>>());
  }
  return Complex(n, std::move(vertices), std::move(simplices));
}

void save_complex(const std::filesystem::path& path, const Complex& c) {
  save_json_file(path, complex_to_json(c));
}

Complex load_complex(const std::filesystem::path& path) {
  return complex_from_json(load_json_file(path));
}

Json map_to_json(const std::string& source_path,
                 const std::string& target_path,
                 const std::vector<int>& vertex_images) {
  Json j;
  j["format_version"] = 1;
  j["source"] = source_path;
  j["target"] = target_path;
  j["vertex_images"] = vertex_images;
  return j;
}

void save_map(const std::filesystem::path& path,
              const std::string& source_path, const std::string& target_path,
              const std::vector<int>& vertex_images) {
  save_json_file(path, map_to_json(source_path, target_path, vertex_images));
}

SimplicialMap load_map(const std::filesystem::path& path) {
  const Json j = load_json_file(path);
  require_version(j);
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path q(p);
    return q.is_absolute() ? q : base / q;
  };
  Complex source = load_complex(resolve(require_field(j, "source")));
  Complex target = load_complex(resolve(require_field(j, "target")));
  const auto images = require_field(j, "vertex_images").get<std::vector<int>>();
  return SimplicialMap(std::move(source), std::move(target), images);
}

Json analytic_to_json(const AnalyticMap& m) {
  Json params;
  switch (m.kind()) {
    case AnalyticMap::Kind::Identity:
    case AnalyticMap::Kind::Negate:
      params["dim"] = m.dim();
      break;
    case AnalyticMap::Kind::Scale:
      params["dim"] = m.dim();
      params["factor"] = m.factor();
      break;
    case AnalyticMap::Kind::Translate:
      params["offset"] = vec_to_json(m.offset());
      break;
    case AnalyticMap::Kind::Cone:
      params["axis"] = vec_to_json(m.axis());
      params["inner_slope"] = m.inner_slope();
      params["outer_slope"] = m.outer_slope();
      break;
    case AnalyticMap::Kind::Case1: {
      Json discs = Json::array();
      for (const Disc& d : m.discs()) {
        Json disc;
        disc["center"] = vec_to_json(d.center);
        disc["radius"] = d.radius;
        discs.push_back(std::move(disc));
      }
      params["discs"] = std::move(discs);
      break;
    }
    case AnalyticMap::Kind::Compose: {
      Json children = Json::array();
      for (const AnalyticMap& c : m.children())
        children.push_back(analytic_to_json(c));
      params["children"] = std::move(children);
      break;
    }
  }
  Json j;
  j["kind"] = m.kind_name();
  j["params"] = std::move(params);
  return j;
}

AnalyticMap analytic_from_json(const Json& j) {
  const std::string kind = require_field(j, "kind").get<std::string>();
  const Json& params = require_field(j, "params");
  if (kind == "identity")
    return AnalyticMap::identity(require_field(params, "dim").get<int>());
  if (kind == "scale")
    return AnalyticMap::scale(require_field(params, "dim").get<int>(),
                              require_field(params, "factor").get<double>());
  if (kind == "translate")
    return AnalyticMap::translate(
        vec_from_json(require_field(params, "offset"), "offset"));
  if (kind == "negate")
    return AnalyticMap::negate(require_field(params, "dim").get<int>());
  if (kind == "cone") {
    const Vec axis = vec_from_json(require_field(params, "axis"), "axis");
    const double inner = params.value("inner_slope", 0.25);
    const double outer = params.value("outer_slope", 0.5);
    return AnalyticMap::cone(axis, inner, outer);
  }
  if (kind == "case1") {
    DiscSequence discs;
    for (const Json& d : require_field(params, "discs")) {
      Disc disc;
      disc.center = vec_from_json(require_field(d, "center"), "disc center");
      disc.radius = require_field(d, "radius").get<double>();
      discs.push_back(std::move(disc));
    }
    return AnalyticMap::case1(std::move(discs));
  }
  if (kind == "compose") {
    std::vector<AnalyticMap> children;
    for (const Json& c : require_field(params, "children"))
      children.push_back(analytic_from_json(c));
    return AnalyticMap::compose(std::move(children));
  }
  throw Error("unknown analytic map kind '" + kind + "'");
}

void save_analytic(const std::filesystem::path& path, const AnalyticMap& m) {
  save_json_file(path, analytic_to_json(m));
}

AnalyticMap load_analytic(const std::filesystem::path& path) {
  return analytic_from_json(load_json_file(path));
}

Json certificate_to_json(const PLDeltaCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["M_obs"] = cert.m_obs;
  j["M"] = cert.m_bound;
  j["theta"] = cert.theta ? Json(*cert.theta) : Json(nullptr);
  j["N1"] = cert.n1 ? Json(*cert.n1) : Json(nullptr);
  j["N"] = cert.big_n ? Json(*cert.big_n) : Json(nullptr);
  j["k_simplex"] = cert.k_simplex;
  j["k_global"] = cert.k_global ? Json(*cert.k_global) : Json(nullptr);
  j["convex_carrier"] = cert.convex_carrier;
  return j;
}

PLDeltaCertificate certificate_from_json(const Json& j) {
  PLDeltaCertificate cert;
  cert.n = require_field(j, "n").get<int>();
  cert.m_obs = require_field(j, "M_obs").get<double>();
  cert.m_bound = require_field(j, "M").get<double>();
  if (!require_field(j, "theta").is_null())
    cert.theta = j["theta"].get<double>();
  if (!require_field(j, "N1").is_null()) cert.n1 = j["N1"].get<double>();
  if (!require_field(j, "N").is_null()) cert.big_n = j["N"].get<double>();
  cert.k_simplex = require_field(j, "k_simplex").get<double>();
  if (!require_field(j, "k_global").is_null())
    cert.k_global = j["k_global"].get<double>();
  cert.convex_carrier = require_field(j, "convex_carrier").get<bool>();
  return cert;
}

Json distortion_report_to_json(const DistortionReport& report) {
  auto witness = [](const WitnessPair& w) {
    Json j;
    j["x"] = vec_to_json(w.x);
    j["y"] = vec_to_json(w.y);
    j["ratio"] = w.ratio;
    return j;
  };
  Json j;
  j["seed"] = report.seed;
  j["pair_count"] = report.pair_count;
  j["min_ratio"] = report.min_ratio;
  j["max_ratio"] = report.max_ratio;
  Json witnesses;
  witnesses["min"] = witness(report.argmin);
  witnesses["max"] = witness(report.argmax);
  j["witnesses"] = std::move(witnesses);
  j["verdicts"] = Json::object();
  return j;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    Json j;
    switch (issue.kind) {
      case ValidationIssue::Kind::DegenerateSimplex:
        j["kind"] = "degenerate_simplex";
        break;
      case ValidationIssue::Kind::DuplicateVertices:
        j["kind"] = "duplicate_vertices";
        break;
      case ValidationIssue::Kind::ImproperIntersection:
        j["kind"] = "improper_intersection";
        break;
    }
    j["message"] = issue.message;
    issues.push_back(std::move(j));
  }
  Json j;
  j["valid"] = report.valid();
  j["issues"] = std::move(issues);
  return j;
}

Json points_to_json(const std::vector<Vec>& points) {
  Json j;
  j["format_version"] = 1;
  Json arr = Json::array();
  for (const Vec& p : points) arr.push_back(vec_to_json(p));
  j["points"] = std::move(arr);
  return j;
}

std::vector<Vec> points_from_json(const Json& j) {
  require_version(j);
  std::vector<Vec> points;
  for (const Json& p : require_field(j, "points"))
    points.push_back(vec_from_json(p, "points"));
  return points;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void save_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace plqi
