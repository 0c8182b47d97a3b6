#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "plqi/analytic.hpp"
#include "plqi/certify.hpp"
#include "plqi/complex.hpp"
#include "plqi/distortion.hpp"
#include "plqi/pl_map.hpp"

namespace plqi {

using Json = nlohmann::ordered_json;

// Complex files: format_version (= 1), ambient_dim, vertices,
// maximal_simplices. Map files: format_version (= 1), source, target
// (paths resolved relative to the map file), vertex_images. Analytic map
// specs: kind + params. All loaders throw plqi::Error on malformed input.

Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);
void save_complex(const std::filesystem::path& path, const Complex& c);
Complex load_complex(const std::filesystem::path& path);

Json map_to_json(const std::string& source_path,
                 const std::string& target_path,
                 const std::vector<int>& vertex_images);
void save_map(const std::filesystem::path& path,
              const std::string& source_path, const std::string& target_path,
              const std::vector<int>& vertex_images);
SimplicialMap load_map(const std::filesystem::path& path);

Json analytic_to_json(const AnalyticMap& m);
AnalyticMap analytic_from_json(const Json& j);
void save_analytic(const std::filesystem::path& path, const AnalyticMap& m);
AnalyticMap load_analytic(const std::filesystem::path& path);

Json certificate_to_json(const PLDeltaCertificate& cert);
PLDeltaCertificate certificate_from_json(const Json& j);

Json distortion_report_to_json(const DistortionReport& report);

Json validation_report_to_json(const ValidationReport& report);

Json points_to_json(const std::vector<Vec>& points);
std::vector<Vec> points_from_json(const Json& j);

Json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace plqi
