#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "plqi/types.hpp"

namespace plqi {

// Affine (barycentric) coordinates of a point with respect to a simplex,
// together with the distance from the point to the simplex's affine hull.
// The weights always describe the orthogonal projection onto the hull.
struct BarycentricCoords {
  Vec weights;
  double residual = 0.0;

  // Membership test at library tolerance: all weights >= -1e-9 and the
  // residual at most 1e-9 times the simplex diameter (passed by caller).
  bool inside(double diameter) const;
};

// A geometric k-simplex embedded in R^n (k <= n), given by k+1 ordered
// vertices. Construction precomputes the edge-matrix factorization so that
// barycentric solves are cheap and the object stays immutable.
class Simplex {
 public:
  explicit Simplex(std::vector<Vec> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  int ambient_dim() const { return static_cast<int>(vertices_[0].size()); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Vec& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }

  // Longest edge; for a simplex this is also the diameter of its hull.
  double diameter() const { return diameter_; }
  Vec centroid() const;

  // Axis-aligned bounding box of the vertex set.
  const Vec& bbox_min() const { return bbox_min_; }
  const Vec& bbox_max() const { return bbox_max_; }

  const Mat& edge_matrix() const { return edges_; }
  const Eigen::ColPivHouseholderQR<Mat>& edge_qr() const { return qr_; }

 private:
  std::vector<Vec> vertices_;
  Mat edges_;  // columns v_i - v_0, i = 1..k
  Eigen::ColPivHouseholderQR<Mat> qr_;
  double diameter_ = 0.0;
  Vec bbox_min_, bbox_max_;
};

// k-volume normalized by diameter^k; 0 iff the vertices are affinely
// dependent, 1 for a single edge. A simplex is treated as nondegenerate
// iff this is >= kDegeneracyTol.
double degeneracy_measure(const Simplex& s);

bool is_degenerate(const Simplex& s);

// Affine coordinates of p: the weights reconstruct the orthogonal
// projection of p onto aff(s); the residual is |p - projection|.
// Throws DegenerateSimplex.
BarycentricCoords barycentric_coordinates(const Vec& p, const Simplex& s);

// Sum of w_i * v_i. Throws WeightSumViolation unless the weights sum to 1
// within kWeightSumTol.
Vec point_from_barycentric(const BarycentricCoords& b, const Simplex& s);

// Tolerance-based membership of p in the realization of s.
bool simplex_contains(const Simplex& s, const Vec& p);

// Dihedral angle between the facets opposite vertices i and j, measured
// along their shared ridge inside the simplex's affine hull. For a
// 2-simplex this is the interior angle at the vertex the two edges share.
// Throws DimensionTooLow for dim < 2 and DegenerateSimplex.
double dihedral_angle(const Simplex& s, int i, int j);

// The sub-interval of [0,1] along the segment a -> b whose points lie in s
// (convex clipping at tolerance), or nullopt when the segment misses s.
std::optional<std::array<double, 2>> clip_segment(const Simplex& s,
                                                  const Vec& a, const Vec& b);

}  // namespace plqi
