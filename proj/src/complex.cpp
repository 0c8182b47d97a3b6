#include "plqi/complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "plqi/lp.hpp"

namespace plqi {

namespace {

std::string join_indices(const std::vector<int>& ix) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ix.size(); ++i) os << (i ? "," : "") << ix[i];
  os << "}";
  return os.str();
}

bool bboxes_overlap(const Simplex& a, const Simplex& b, double tol) {
  for (int d = 0; d < a.ambient_dim(); ++d) {
    if (a.bbox_max()[d] < b.bbox_min()[d] - tol) return false;
    if (b.bbox_max()[d] < a.bbox_min()[d] - tol) return false;
  }
  return true;
}

// Maximum total barycentric mass on non-shared vertices over the
// intersection polytope of two simplices; negative when the intersection
// is empty. The intersection equals the common face exactly when all mass
// sits on the shared vertices.
std::optional<double> max_noncommon_mass(const Complex& c, int si, int sj) {
  const auto& ixi = c.simplex(si);
  const auto& ixj = c.simplex(sj);
  const Simplex& a = c.realize(si);
  const Simplex& b = c.realize(sj);
  const int n = c.ambient_dim();
  const int ka = a.dim() + 1;
  const int kb = b.dim() + 1;

  const double scale = std::max({1.0, a.diameter(), b.diameter()});

  // Variables z = (w, u): barycentric coordinates in each simplex.
  // Constraints: sum w = 1, sum u = 1, V_a w - V_b u = 0 (scaled).
  Mat A = Mat::Zero(n + 2, ka + kb);
  Vec rhs = Vec::Zero(n + 2);
  for (int l = 0; l < ka; ++l) A.block(0, l, n, 1) = a.vertex(l) / scale;
  for (int l = 0; l < kb; ++l) A.block(0, ka + l, n, 1) = -b.vertex(l) / scale;
  A.block(n, 0, 1, ka).setOnes();
  A.block(n + 1, ka, 1, kb).setOnes();
  rhs[n] = 1.0;
  rhs[n + 1] = 1.0;

  std::set<int> shared;
  std::set_intersection(ixi.begin(), ixi.end(), ixj.begin(), ixj.end(),
                        std::inserter(shared, shared.begin()));
  Vec obj = Vec::Zero(ka + kb);
  for (int l = 0; l < ka; ++l)
    if (!shared.count(ixi[static_cast<size_t>(l)])) obj[l] = 1.0;
  for (int l = 0; l < kb; ++l)
    if (!shared.count(ixj[static_cast<size_t>(l)])) obj[ka + l] = 1.0;

  const LpResult res = solve_lp(A, rhs, obj);
  if (res.status == LpResult::Status::Infeasible) return std::nullopt;
  if (res.status != LpResult::Status::Optimal)
    throw Error("intersection LP did not converge");
  return res.objective;
}

}  // namespace

Complex::Complex(int ambient_dim, std::vector<Vec> vertices,
                 std::vector<std::vector<int>> maximal_simplices)
    : ambient_dim_(ambient_dim),
      vertices_(std::move(vertices)),
      simplices_(std::move(maximal_simplices)) {
  if (ambient_dim_ < 1) throw Error("ambient dimension must be positive");
  for (const Vec& v : vertices_) {
    if (static_cast<int>(v.size()) != ambient_dim_)
      throw Error("vertex dimension does not match ambient_dim");
    if (!v.allFinite()) throw Error("vertex has non-finite coordinates");
  }
  if (simplices_.empty()) throw Error("complex has no maximal simplices");
  for (auto& ix : simplices_) {
    if (ix.empty() || static_cast<int>(ix.size()) > ambient_dim_ + 1)
      throw Error("maximal simplex has invalid vertex count");
    std::sort(ix.begin(), ix.end());
    if (std::adjacent_find(ix.begin(), ix.end()) != ix.end())
      throw Error("maximal simplex repeats a vertex index");
    for (int v : ix)
      if (v < 0 || v >= vertex_count())
        throw Error("maximal simplex references a missing vertex");
  }
  realized_.reserve(simplices_.size());
  for (const auto& ix : simplices_) {
    std::vector<Vec> pts;
    pts.reserve(ix.size());
    for (int v : ix) pts.push_back(vertices_[static_cast<size_t>(v)]);
    realized_.emplace_back(std::move(pts));
  }
}

double Complex::diameter() const {
  double d = 0.0;
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j)
      d = std::max(d, (vertices_[i] - vertices_[j]).norm());
  return d;
}

ValidationReport Complex::validate() const {
  ValidationReport report;

  for (int id = 0; id < simplex_count(); ++id) {
    if (is_degenerate(realize(id))) {
      std::ostringstream os;
      os << "simplex " << id << " " << join_indices(simplex(id))
         << " is degenerate (measure " << degeneracy_measure(realize(id)) << ")";
      report.issues.push_back(
          {ValidationIssue::Kind::DegenerateSimplex, os.str()});
    }
  }

  const double dup_tol = 1e-9;
  for (int i = 0; i < vertex_count(); ++i) {
    for (int j = i + 1; j < vertex_count(); ++j) {
      if ((vertex(i) - vertex(j)).norm() <= dup_tol) {
        std::ostringstream os;
        os << "vertices " << i << " and " << j << " coincide";
        report.issues.push_back(
            {ValidationIssue::Kind::DuplicateVertices, os.str()});
      }
    }
  }

  // Pairwise proper-intersection check (skip degenerate simplices; they are
  // already reported and the LP would be meaningless).
  const double mass_tol = 1e-7;
  for (int i = 0; i < simplex_count(); ++i) {
    if (is_degenerate(realize(i))) continue;
    for (int j = i + 1; j < simplex_count(); ++j) {
      if (is_degenerate(realize(j))) continue;
      if (!bboxes_overlap(realize(i), realize(j), 1e-9)) continue;
      const auto mass = max_noncommon_mass(*this, i, j);
      if (!mass.has_value()) continue;  // disjoint realizations
      std::vector<int> shared;
      std::set_intersection(simplex(i).begin(), simplex(i).end(),
                            simplex(j).begin(), simplex(j).end(),
                            std::back_inserter(shared));
      if (shared.empty() || *mass > mass_tol) {
        std::ostringstream os;
        os << "simplices " << i << " " << join_indices(simplex(i)) << " and "
           << j << " " << join_indices(simplex(j));
        if (shared.empty())
          os << " intersect but share no vertex";
        else
          os << " intersect outside their common face (stray mass " << *mass
             << ")";
        report.issues.push_back(
            {ValidationIssue::Kind::ImproperIntersection, os.str()});
      }
    }
  }
  return report;
}

std::optional<CarrierLocation> Complex::locate(const Vec& p) const {
  if (static_cast<int>(p.size()) != ambient_dim_)
    throw Error("locate: point dimension mismatch");
  for (int id = 0; id < simplex_count(); ++id) {
    const Simplex& s = realize(id);
    bool inside_box = true;
    const double tol = 2.0 * kResidualRelTol * std::max(1.0, s.diameter());
    for (int d = 0; d < ambient_dim_ && inside_box; ++d)
      inside_box = p[d] >= s.bbox_min()[d] - tol && p[d] <= s.bbox_max()[d] + tol;
    if (!inside_box) continue;
    BarycentricCoords b = barycentric_coordinates(p, s);
    if (b.inside(s.diameter())) return CarrierLocation{id, std::move(b)};
  }
  return std::nullopt;
}

AngleMargin Complex::facet_angle_margin() const {
  double margin = M_PI;
  bool any = false;
  for (int id = 0; id < simplex_count(); ++id) {
    const Simplex& s = realize(id);
    if (s.dim() < 2) continue;
    any = true;
    for (int i = 0; i <= s.dim(); ++i) {
      for (int j = i + 1; j <= s.dim(); ++j) {
        const double angle = dihedral_angle(s, i, j);
        margin = std::min(margin, std::min(angle, M_PI - angle));
      }
    }
  }
  if (!any) return {};
  return {margin};
}

bool structurally_identical(const Complex& a, const Complex& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int i = 0; i < a.vertex_count(); ++i)
    if ((a.vertex(i) - b.vertex(i)).lpNorm<Eigen::Infinity>() > tol)
      return false;
  auto sa = a.maximal_simplices();
  auto sb = b.maximal_simplices();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace plqi
