#include "plqi/pl_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace plqi {

SimplicialMap::SimplicialMap(Complex source, Complex target,
                             std::vector<int> vertex_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_images_(std::move(vertex_images)) {
  if (static_cast<int>(vertex_images_.size()) != source_.vertex_count())
    throw Error("vertex_images length must equal source vertex count");
  for (int img : vertex_images_)
    if (img < 0 || img >= target_.vertex_count())
      throw Error("vertex image index out of range");
}

MapReport SimplicialMap::validate() const {
  MapReport report;
  report.simplicial = true;

  // Target face lookup: a vertex-index set spans a simplex of the target
  // iff it is a subset of some maximal simplex.
  auto spans_target_face = [&](const std::set<int>& image) {
    for (const auto& t : target_.maximal_simplices()) {
      if (std::includes(t.begin(), t.end(), image.begin(), image.end()))
        return true;
    }
    return false;
  };

  std::map<std::vector<int>, int> image_simplex_count;
  bool images_full_dim = true;
  for (int id = 0; id < source_.simplex_count(); ++id) {
    const auto& ix = source_.simplex(id);
    std::set<int> image;
    for (int v : ix) image.insert(vertex_images_[static_cast<size_t>(v)]);
    if (!spans_target_face(image)) {
      report.simplicial = false;
      std::ostringstream os;
      os << "image of simplex " << id
         << " does not span a face of the target complex";
      report.issues.push_back(os.str());
      continue;
    }
    if (image.size() != ix.size()) images_full_dim = false;
    image_simplex_count[std::vector<int>(image.begin(), image.end())] += 1;
  }

  // Homeomorphism mode: vertex bijection plus a bijection between maximal
  // simplices.
  bool vertex_bijection = source_.vertex_count() == target_.vertex_count();
  if (vertex_bijection) {
    std::vector<int> seen(static_cast<size_t>(target_.vertex_count()), 0);
    for (int img : vertex_images_) seen[static_cast<size_t>(img)] += 1;
    vertex_bijection =
        std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  }
  if (!vertex_bijection)
    report.issues.push_back("vertex_images is not a bijection");

  bool simplex_bijection =
      report.simplicial && images_full_dim &&
      source_.simplex_count() == target_.simplex_count();
  if (simplex_bijection) {
    std::set<std::vector<int>> target_set(target_.maximal_simplices().begin(),
                                          target_.maximal_simplices().end());
    for (const auto& [image, count] : image_simplex_count) {
      if (count != 1 || !target_set.count(image)) {
        simplex_bijection = false;
        break;
      }
    }
    if (simplex_bijection &&
        image_simplex_count.size() !=
            static_cast<size_t>(target_.simplex_count()))
      simplex_bijection = false;
  }
  if (report.simplicial && !simplex_bijection)
    report.issues.push_back(
        "induced map on maximal simplices is not a bijection");

  report.homeomorphism =
      report.simplicial && vertex_bijection && simplex_bijection;
  return report;
}

void SimplicialMap::require_simplicial() const {
  const MapReport r = validate();
  if (!r.simplicial) {
    std::string msg = "map is not simplicial";
    if (!r.issues.empty()) msg += ": " + r.issues.front();
    throw NotSimplicial(msg);
  }
}

void SimplicialMap::require_homeomorphism() const {
  const MapReport r = validate();
  if (!r.simplicial) {
    std::string msg = "map is not simplicial";
    if (!r.issues.empty()) msg += ": " + r.issues.front();
    throw NotSimplicial(msg);
  }
  if (!r.homeomorphism) {
    std::string msg = "map is not a simplicial homeomorphism";
    if (!r.issues.empty()) msg += ": " + r.issues.front();
    throw NotBijective(msg);
  }
}

Vec SimplicialMap::evaluate(const Vec& p) const {
  const auto loc = source_.locate(p);
  if (!loc.has_value()) throw NotInCarrier("point is outside the source carrier");
  const auto& ix = source_.simplex(loc->simplex_id);
  Vec out = Vec::Zero(target_.ambient_dim());
  for (size_t l = 0; l < ix.size(); ++l) {
    const int img = vertex_images_[static_cast<size_t>(ix[l])];
    out += loc->coords.weights[static_cast<int>(l)] * target_.vertex(img);
  }
  return out;
}

SimplicialMap SimplicialMap::inverse() const {
  require_homeomorphism();
  std::vector<int> inv(static_cast<size_t>(target_.vertex_count()), -1);
  for (int v = 0; v < source_.vertex_count(); ++v)
    inv[static_cast<size_t>(vertex_images_[static_cast<size_t>(v)])] = v;
  return SimplicialMap(target_, source_, std::move(inv));
}

SimplicialMap compose(const SimplicialMap& m1, const SimplicialMap& m2) {
  if (!structurally_identical(m1.target(), m2.source()))
    throw IncompatibleComplexes(
        "compose: target of the first map differs from source of the second");
  std::vector<int> images;
  images.reserve(m1.vertex_images().size());
  for (int img : m1.vertex_images())
    images.push_back(m2.vertex_images()[static_cast<size_t>(img)]);
  return SimplicialMap(m1.source(), m2.target(), std::move(images));
}

SimplicialMap identity_map(const Complex& c) {
  std::vector<int> ids(static_cast<size_t>(c.vertex_count()));
  std::iota(ids.begin(), ids.end(), 0);
  return SimplicialMap(c, c, std::move(ids));
}

}  // namespace plqi
