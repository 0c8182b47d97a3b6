#include "plqi/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace plqi {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

bool BarycentricCoords::inside(double diameter) const {
  if (weights.minCoeff() < -kMembershipWeightTol) return false;
  return residual <= kResidualRelTol * diameter;
}

Simplex::Simplex(std::vector<Vec> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error("simplex needs at least one vertex");
  const int n = static_cast<int>(vertices_[0].size());
  const int k = dim();
  if (k > n)
    throw Error("simplex has more vertices than ambient dimension allows");
  for (const Vec& v : vertices_) {
    if (static_cast<int>(v.size()) != n)
      throw Error("simplex vertices have mismatched dimensions");
    if (!v.allFinite()) throw Error("simplex vertex has non-finite coordinates");
  }

  edges_.resize(n, k);
  for (int i = 1; i <= k; ++i) edges_.col(i - 1) = vertices_[i] - vertices_[0];
  if (k > 0) qr_.compute(edges_);

  bbox_min_ = vertices_[0];
  bbox_max_ = vertices_[0];
  for (const Vec& v : vertices_) {
    bbox_min_ = bbox_min_.cwiseMin(v);
    bbox_max_ = bbox_max_.cwiseMax(v);
  }
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j)
      diameter_ = std::max(diameter_, (vertices_[i] - vertices_[j]).norm());
}

Vec Simplex::centroid() const {
  Vec c = Vec::Zero(ambient_dim());
  for (const Vec& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double degeneracy_measure(const Simplex& s) {
  const int k = s.dim();
  if (k == 0) return 1.0;
  if (s.diameter() <= 0.0) return 0.0;
  // |det R| of the QR of the edge matrix equals the k-volume times k!.
  double vol = 1.0;
  const auto& r = s.edge_qr().matrixR();
  for (int i = 0; i < k; ++i) vol *= std::abs(r(i, i));
  vol /= factorial(k);
  return vol / std::pow(s.diameter(), k);
}

bool is_degenerate(const Simplex& s) {
  return degeneracy_measure(s) < kDegeneracyTol;
}

BarycentricCoords barycentric_coordinates(const Vec& p, const Simplex& s) {
  if (is_degenerate(s))
    throw DegenerateSimplex("barycentric_coordinates: degenerate simplex");
  const int k = s.dim();
  BarycentricCoords out;
  out.weights = Vec(k + 1);
  if (k == 0) {
    out.weights[0] = 1.0;
    out.residual = (p - s.vertex(0)).norm();
    return out;
  }
  const Vec rhs = p - s.vertex(0);
  const Vec t = s.edge_qr().solve(rhs);  // least-squares: projection coords
  out.weights[0] = 1.0 - t.sum();
  for (int i = 0; i < k; ++i) out.weights[i + 1] = t[i];
  out.residual = (s.edge_matrix() * t - rhs).norm();
  return out;
}

Vec point_from_barycentric(const BarycentricCoords& b, const Simplex& s) {
  if (b.weights.size() != s.dim() + 1)
    throw WeightSumViolation("weight vector length does not match simplex");
  if (std::abs(b.weights.sum() - 1.0) > kWeightSumTol)
    throw WeightSumViolation("barycentric weights do not sum to 1");
  Vec p = Vec::Zero(s.ambient_dim());
  for (int i = 0; i <= s.dim(); ++i) p += b.weights[i] * s.vertex(i);
  return p;
}

bool simplex_contains(const Simplex& s, const Vec& p) {
  return barycentric_coordinates(p, s).inside(s.diameter());
}

double dihedral_angle(const Simplex& s, int i, int j) {
  const int k = s.dim();
  if (k < 2) throw DimensionTooLow("dihedral_angle needs a simplex of dim >= 2");
  if (i == j || i < 0 || j < 0 || i > k || j > k)
    throw Error("dihedral_angle: invalid facet pair");
  if (is_degenerate(s)) throw DegenerateSimplex("dihedral_angle: degenerate simplex");

  // Ridge shared by the facets opposite v_i and v_j: all vertices but those.
  std::vector<Vec> ridge;
  for (int l = 0; l <= k; ++l)
    if (l != i && l != j) ridge.push_back(s.vertex(l));
  Vec ridge_centroid = Vec::Zero(s.ambient_dim());
  for (const Vec& v : ridge) ridge_centroid += v;
  ridge_centroid /= static_cast<double>(ridge.size());

  // Orthonormal basis of the ridge's direction space (empty for triangles).
  Mat basis(s.ambient_dim(), static_cast<int>(ridge.size()) - 1);
  for (size_t l = 1; l < ridge.size(); ++l)
    basis.col(static_cast<int>(l) - 1) = ridge[l] - ridge[0];
  Eigen::HouseholderQR<Mat> qr;
  Mat q;
  if (basis.cols() > 0) {
    qr.compute(basis);
    q = qr.householderQ() * Mat::Identity(s.ambient_dim(), basis.cols());
  }

  auto ridge_orthogonal_unit = [&](const Vec& toward) -> Vec {
    Vec d = toward - ridge_centroid;
    if (basis.cols() > 0) d -= q * (q.transpose() * d);
    const double norm = d.norm();
    if (norm < kDegeneracyTol * std::max(1.0, s.diameter()))
      throw DegenerateSimplex("dihedral_angle: vertex lies in the ridge hull");
    return d / norm;
  };

  // The facet opposite v_i contains v_j; the in-facet direction off the
  // ridge points toward v_j (and symmetrically).
  const Vec u_i = ridge_orthogonal_unit(s.vertex(j));
  const Vec u_j = ridge_orthogonal_unit(s.vertex(i));
  return std::acos(std::clamp(u_i.dot(u_j), -1.0, 1.0));
}

std::optional<std::array<double, 2>> clip_segment(const Simplex& s,
                                                  const Vec& a, const Vec& b) {
  if (is_degenerate(s)) throw DegenerateSimplex("clip_segment: degenerate simplex");
  const BarycentricCoords ba = barycentric_coordinates(a, s);
  const BarycentricCoords bb = barycentric_coordinates(b, s);

  double lo = 0.0, hi = 1.0;

  // Each barycentric weight is affine in the segment parameter.
  for (int i = 0; i <= s.dim(); ++i) {
    const double w0 = ba.weights[i];
    const double dw = bb.weights[i] - ba.weights[i];
    // Require w0 + t*dw >= -tol.
    if (std::abs(dw) < 1e-15) {
      if (w0 < -kMembershipWeightTol) return std::nullopt;
      continue;
    }
    const double crossing = (-kMembershipWeightTol - w0) / dw;
    if (dw > 0)
      lo = std::max(lo, crossing);
    else
      hi = std::min(hi, crossing);
  }

  // Distance to the affine hull is the norm of an affine vector function of
  // t, so the feasible set of |rho(t)| <= eps is a single interval.
  if (s.dim() < s.ambient_dim()) {
    const Vec pa = point_from_barycentric(ba, s);
    const Vec pb = point_from_barycentric(bb, s);
    const Vec rho0 = a - pa;
    const Vec drho = (b - pb) - rho0;
    const double eps = kResidualRelTol * std::max(s.diameter(), 1e-300);
    const double A = drho.squaredNorm();
    const double B = 2.0 * rho0.dot(drho);
    const double C = rho0.squaredNorm() - eps * eps;
    if (A < 1e-30) {
      if (C > 0) return std::nullopt;
    } else {
      const double disc = B * B - 4 * A * C;
      if (disc < 0) return std::nullopt;
      const double sq = std::sqrt(disc);
      lo = std::max(lo, (-B - sq) / (2 * A));
      hi = std::min(hi, (-B + sq) / (2 * A));
    }
  }

  if (lo > hi) return std::nullopt;
  return std::array<double, 2>{lo, hi};
}

}  // namespace plqi
