// plqi command-line front end: validate complexes, certify simplicial
// homeomorphisms, sample distortion, emit the explicit constructions, and
// run commutator experiments. All output is JSON with a stable field
// order; exit codes: 0 success/pass, 1 check failed, 2 invalid input.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "plqi/certify.hpp"
#include "plqi/constructions.hpp"
#include "plqi/distortion.hpp"
#include "plqi/io.hpp"

using namespace plqi;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out_path, j);
}

Vec parse_csv_vector(const std::string& csv) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) values.push_back(std::stod(token));
  if (values.empty()) throw Error("expected comma-separated coordinates");
  Vec v(static_cast<int>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return v;
}

int cmd_validate(const std::string& path, const std::string& out) {
  const Complex c = load_complex(path);
  const auto report = c.validate();
  Json j = validation_report_to_json(report);
  j["input"] = path;
  emit(j, out);
  return report.valid() ? kExitPass : kExitCheckFailed;
}

int cmd_certify(const std::string& path, const std::string& convexity,
                std::uint64_t seed, const std::string& out) {
  const SimplicialMap m = load_map(path);
  ConvexityHint hint = ConvexityHint::Auto;
  if (convexity == "assume") hint = ConvexityHint::Assume;
  if (convexity == "none") hint = ConvexityHint::None;
  PLDeltaCertificate cert;
  try {
    cert = certify(m, hint, seed);
  } catch (const Error& e) {
    std::cerr << "certification rejected: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  Json j = certificate_to_json(cert);
  j["seed"] = seed;
  j["input"] = path;
  emit(j, out);
  return kExitPass;
}

int cmd_distort(const std::string& path, int pairs, std::uint64_t seed,
                double radius, const std::string& center_csv,
                const std::string& check_against, double tolerance,
                const std::string& out) {
  const Json spec = load_json_file(path);
  std::optional<MapUnderTest> map;
  if (spec.contains("vertex_images")) {
    map = MapUnderTest::pl(load_map(path));
  } else if (spec.contains("kind")) {
    const AnalyticMap f = analytic_from_json(spec);
    Vec center = center_csv.empty() ? Vec(Vec::Zero(f.dim()))
                                    : parse_csv_vector(center_csv);
    map = MapUnderTest::analytic(f, {center, radius});
  } else {
    throw Error("input is neither a map file nor an analytic spec");
  }

  SamplePlan plan;
  plan.seed = seed;
  plan.pair_count = pairs;
  const auto report = sample_distortion(*map, plan);
  Json j = distortion_report_to_json(report);
  j["input"] = path;

  int exit_code = kExitPass;
  if (!check_against.empty()) {
    const auto cert = certificate_from_json(load_json_file(check_against));
    const auto check = bound_check(report, cert.k_simplex, tolerance);
    Json verdict;
    verdict["k"] = cert.k_simplex;
    verdict["pass"] = check.pass;
    verdict["margin"] = check.margin;
    j["verdicts"]["bound_check"] = std::move(verdict);
    exit_code = check.pass ? kExitPass : kExitCheckFailed;
  }
  emit(j, out);
  return exit_code;
}

int cmd_construct(const std::string& kind, int n, const std::string& out_dir,
                  const std::string& f_spec_path, int terms,
                  std::uint64_t seed, const std::string& axis_csv) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  if (kind == "disc-swap") {
    auto [k, kprime] = disc_swap_complexes(n);
    save_complex(dir / "K.json", k);
    save_complex(dir / "Kprime.json", kprime);
    const auto h = disc_swap_vertex_map(n);
    save_map(dir / "hprime.json", "K.json", "Kprime.json", h.vertex_images());
    std::cout << "wrote K.json, Kprime.json, hprime.json to " << out_dir
              << "\n";
    return kExitPass;
  }

  if (kind == "cone") {
    Vec axis;
    if (axis_csv.empty()) {
      axis = Vec::Zero(n);
      axis[n - 1] = 1.0;
    } else {
      axis = parse_csv_vector(axis_csv);
    }
    save_analytic(dir / "cone.json", AnalyticMap::cone(axis));
    std::cout << "wrote cone.json to " << out_dir << "\n";
    return kExitPass;
  }

  if (kind == "case1") {
    AnalyticMap f = f_spec_path.empty()
                        ? AnalyticMap::scale(n, 2.0)
                        : load_analytic(f_spec_path);
    SearchBudget budget;
    budget.terms = terms;
    const auto w = witness_discs(f, budget, seed);
    if (!w.has_value()) {
      std::cerr << "no divergent sequence within budget: the map appears "
                   "equivalent to the identity at the explored scale\n";
      return kExitCheckFailed;
    }
    save_analytic(dir / "f.json", f);
    save_analytic(dir / "g_case1.json", AnalyticMap::case1(w->discs));
    save_json_file(dir / "witness_points.json", points_to_json(w->points));
    std::cout << "wrote f.json, g_case1.json, witness_points.json to "
              << out_dir << "\n";
    return kExitPass;
  }

  std::cerr << "unknown construction kind '" << kind
            << "' (expected disc-swap, cone, or case1)\n";
  return kExitInvalidInput;
}

int cmd_commutator(const std::string& f_path, const std::string& g_path,
                   const std::string& points_path, int ray_terms,
                   const std::string& axis_csv, const std::string& out) {
  const AnalyticMap f = load_analytic(f_path);
  const AnalyticMap g = load_analytic(g_path);

  std::vector<Vec> points;
  if (!points_path.empty()) {
    points = points_from_json(load_json_file(points_path));
  } else {
    Vec axis;
    if (!axis_csv.empty()) {
      axis = parse_csv_vector(axis_csv);
    } else if (g.kind() == AnalyticMap::Kind::Cone) {
      axis = g.axis();
    } else {
      axis = Vec::Zero(f.dim());
      axis[f.dim() - 1] = 1.0;
    }
    for (int m = 1; m <= ray_terms; ++m) points.push_back(m * axis);
  }

  const auto gaps = commutator_series(f, g, points);
  Json series = Json::array();
  for (size_t i = 0; i < gaps.size(); ++i) {
    Json entry;
    entry["point"] = Json::array();
    for (int d = 0; d < points[i].size(); ++d)
      entry["point"].push_back(points[i][d]);
    entry["gap"] = gaps[i];
    series.push_back(std::move(entry));
  }
  Json j;
  j["f"] = f_path;
  j["g"] = g_path;
  j["series"] = std::move(series);
  emit(j, out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify piecewise-linear homeomorphisms as bi-Lipschitz "
               "quasi-isometries and run the explicit commutator experiments"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int pairs = 10000;
  std::string out;
  double tolerance = kCheckSlack;
  app.add_option("--seed", seed, "seed for all randomized procedures");
  app.add_option("--pairs", pairs, "sampled point pairs");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--tolerance", tolerance, "slack used by pass/fail checks");

  auto* validate = app.add_subcommand("validate", "validate a complex file");
  std::string validate_path;
  validate->add_option("complex", validate_path, "complex JSON file")
      ->required();

  auto* certify_cmd =
      app.add_subcommand("certify", "certify a simplicial map file");
  std::string certify_path, convexity = "auto";
  certify_cmd->add_option("map", certify_path, "map JSON file")->required();
  certify_cmd->add_option("--convexity", convexity, "auto|assume|none")
      ->check(CLI::IsMember({"auto", "assume", "none"}));

  auto* distort =
      app.add_subcommand("distort", "sample distortion of a map or spec");
  std::string distort_path, center_csv, check_against;
  double radius = 1.0;
  distort->add_option("map", distort_path, "map file or analytic spec")
      ->required();
  distort->add_option("--radius", radius, "ball radius for analytic specs");
  distort->add_option("--center", center_csv, "ball center (comma-separated)");
  distort->add_option("--check-against", check_against,
                      "certificate file to check the report against");

  auto* construct =
      app.add_subcommand("construct", "emit the explicit constructions");
  std::string construct_kind, out_dir = ".", f_spec_path, axis_csv;
  int n = 2, terms = 20;
  construct->add_option("kind", construct_kind, "disc-swap|cone|case1")
      ->required();
  construct->add_option("--n", n, "ambient dimension");
  construct->add_option("--out-dir", out_dir, "output directory");
  construct->add_option("--f", f_spec_path,
                        "analytic spec for the case1 witness search");
  construct->add_option("--terms", terms, "witness sequence length");
  construct->add_option("--axis", axis_csv, "cone axis (comma-separated)");

  auto* commutator =
      app.add_subcommand("commutator", "measure d(fg(x), gf(x)) on points");
  std::string f_path, g_path, points_path;
  int ray_terms = 20;
  commutator->add_option("--f", f_path, "analytic spec for f")->required();
  commutator->add_option("--g", g_path, "analytic spec for g")->required();
  commutator->add_option("--points", points_path, "points JSON file");
  commutator->add_option("--ray", ray_terms,
                         "evaluate at m * axis for m = 1..ray");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_path, out);
    if (certify_cmd->parsed())
      return cmd_certify(certify_path, convexity, seed, out);
    if (distort->parsed())
      return cmd_distort(distort_path, pairs, seed, radius, center_csv,
                         check_against, tolerance, out);
    if (construct->parsed())
      return cmd_construct(construct_kind, n, out_dir, f_spec_path, terms,
                           seed, axis_csv);
    if (commutator->parsed())
      return cmd_commutator(f_path, g_path, points_path, ray_terms, axis_csv,
                            out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
