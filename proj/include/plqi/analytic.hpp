#pragma once

#include <memory>
#include <string>
#include <vector>

#include "plqi/pl_map.hpp"
#include "plqi/types.hpp"

namespace plqi {

struct Disc {
  Vec center;
  double radius = 0.0;
};

// Discs used by the rescaled disc-swap map: radii strictly increasing and
// the closed discs pairwise disjoint.
using DiscSequence = std::vector<Disc>;

// Throws InvalidDiscSequence unless the invariants hold.
void validate_disc_sequence(const DiscSequence& discs);

// Closed-form self-maps of R^n: a small catalog (identity, scale,
// translate, negate, the two-cone interpolation map, the disc-rescaled
// disc-swap map, and compositions). Immutable value objects with pure,
// total evaluation.
class AnalyticMap {
 public:
  enum class Kind { Identity, Scale, Translate, Negate, Cone, Case1, Compose };

  static AnalyticMap identity(int dim);
  static AnalyticMap scale(int dim, double factor);
  static AnalyticMap translate(Vec offset);
  static AnalyticMap negate(int dim);

  // Piecewise map around an axis ray: identity on the inner cone
  // {height > 0, radial <= inner_slope * height}, doubling outside the
  // outer cone, and the ray-wise linear interpolation in between. The
  // default slopes are 1/4 and 1/2.
  static AnalyticMap cone(Vec axis, double inner_slope = 0.25,
                          double outer_slope = 0.5);

  // Identity outside the discs; inside disc (c, r) the unit-disc swap
  // homeomorphism rescaled by x -> c + r * h((x - c)/r).
  static AnalyticMap case1(DiscSequence discs);

  // Children applied left to right.
  static AnalyticMap compose(std::vector<AnalyticMap> children);

  Vec evaluate(const Vec& x) const;

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double factor() const { return factor_; }
  const Vec& offset() const { return offset_; }
  const Vec& axis() const { return axis_; }
  double inner_slope() const { return inner_slope_; }
  double outer_slope() const { return outer_slope_; }
  const DiscSequence& discs() const { return discs_; }
  const std::vector<AnalyticMap>& children() const { return children_; }

  std::string kind_name() const;

 private:
  AnalyticMap(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  double factor_ = 1.0;
  Vec offset_;
  Vec axis_;
  double inner_slope_ = 0.25;
  double outer_slope_ = 0.5;
  DiscSequence discs_;
  std::shared_ptr<const SimplicialMap> unit_disc_map_;  // h' for case1
  std::vector<AnalyticMap> children_;
};

}  // namespace plqi
