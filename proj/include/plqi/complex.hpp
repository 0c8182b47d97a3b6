#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plqi/geometry.hpp"
#include "plqi/types.hpp"

namespace plqi {

struct CarrierLocation {
  int simplex_id = -1;
  BarycentricCoords coords;
};

struct ValidationIssue {
  enum class Kind {
    DegenerateSimplex,
    DuplicateVertices,
    ImproperIntersection,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Angle margin of Theorem-style condition (ii): min over facet pairs of
// min(angle, pi - angle). Vacuous when no simplex has dimension >= 2
// (for 1-dimensional complexes the condition is redundant).
struct AngleMargin {
  std::optional<double> theta;
  bool vacuous() const { return !theta.has_value(); }
};

// A finite geometric simplicial complex embedded in R^n, stored as vertex
// coordinates plus maximal simplices (faces are implicit). Immutable after
// construction; all queries are pure.
class Complex {
 public:
  Complex(int ambient_dim, std::vector<Vec> vertices,
          std::vector<std::vector<int>> maximal_simplices);

  int ambient_dim() const { return ambient_dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int simplex_count() const { return static_cast<int>(simplices_.size()); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Vec& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
  const std::vector<std::vector<int>>& maximal_simplices() const {
    return simplices_;
  }
  const std::vector<int>& simplex(int id) const {
    return simplices_[static_cast<size_t>(id)];
  }

  // Geometric realization of maximal simplex `id` (precomputed).
  const Simplex& realize(int id) const {
    return realized_[static_cast<size_t>(id)];
  }

  double diameter() const;

  // Full geometric validation: degenerate simplices, duplicate vertices,
  // pairwise intersections that are not common faces.
  ValidationReport validate() const;

  // Lowest-indexed maximal simplex containing p at tolerance, with its
  // barycentric coordinates; nullopt when p is outside the carrier.
  std::optional<CarrierLocation> locate(const Vec& p) const;

  AngleMargin facet_angle_margin() const;

 private:
  int ambient_dim_;
  std::vector<Vec> vertices_;
  std::vector<std::vector<int>> simplices_;
  std::vector<Simplex> realized_;
};

// Structural identity at kStructuralIdentityTol: same ambient dimension,
// same vertex coordinates, identical maximal simplex index tuples.
bool structurally_identical(const Complex& a, const Complex& b,
                            double tol = kStructuralIdentityTol);

}  // namespace plqi
