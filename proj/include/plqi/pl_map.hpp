#pragma once

#include <string>
#include <vector>

#include "plqi/complex.hpp"

namespace plqi {

struct MapReport {
  bool simplicial = false;      // every simplex image spans a target face
  bool homeomorphism = false;   // vertex bijection + simplex bijection
  std::vector<std::string> issues;
};

// A simplicial map between two embedded complexes, given by vertex images
// and evaluated piecewise-linearly on the source carrier.
class SimplicialMap {
 public:
  SimplicialMap(Complex source, Complex target, std::vector<int> vertex_images);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  const std::vector<int>& vertex_images() const { return vertex_images_; }

  // Checks the simplex-image property and homeomorphism eligibility.
  MapReport validate() const;

  // Throws NotSimplicial / NotBijective when the map fails the
  // corresponding mode.
  void require_simplicial() const;
  void require_homeomorphism() const;

  // PL evaluation: locate p, push its barycentric weights through the
  // vertex images. Throws NotInCarrier.
  Vec evaluate(const Vec& p) const;

  // Inverse in homeomorphism mode. Throws NotBijective.
  SimplicialMap inverse() const;

 private:
  Complex source_;
  Complex target_;
  std::vector<int> vertex_images_;
};

// Composition m2 after m1; requires target(m1) structurally identical to
// source(m2). Throws IncompatibleComplexes.
SimplicialMap compose(const SimplicialMap& m1, const SimplicialMap& m2);

SimplicialMap identity_map(const Complex& c);

}  // namespace plqi
