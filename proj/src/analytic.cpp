#include "plqi/analytic.hpp"

#include <cmath>

#include "plqi/constructions.hpp"

namespace plqi {

void validate_disc_sequence(const DiscSequence& discs) {
  if (discs.empty()) throw InvalidDiscSequence("disc sequence is empty");
  const auto dim = discs.front().center.size();
  if (dim < 2)
    throw InvalidDiscSequence("disc-swap discs need ambient dimension >= 2");
  for (size_t i = 0; i < discs.size(); ++i) {
    if (discs[i].center.size() != dim)
      throw InvalidDiscSequence("disc centers have mismatched dimensions");
    if (!(discs[i].radius > 0.0) || !std::isfinite(discs[i].radius))
      throw InvalidDiscSequence("disc radius must be positive and finite");
    if (i > 0 && !(discs[i].radius > discs[i - 1].radius))
      throw InvalidDiscSequence("disc radii must be strictly increasing");
  }
  for (size_t i = 0; i < discs.size(); ++i) {
    for (size_t j = i + 1; j < discs.size(); ++j) {
      const double gap = (discs[i].center - discs[j].center).norm() -
                         (discs[i].radius + discs[j].radius);
      if (gap <= 0.0)
        throw InvalidDiscSequence("closed discs must be pairwise disjoint");
    }
  }
}

AnalyticMap AnalyticMap::identity(int dim) {
  if (dim < 1) throw Error("identity: dimension must be positive");
  return AnalyticMap(Kind::Identity, dim);
}

AnalyticMap AnalyticMap::scale(int dim, double factor) {
  if (dim < 1) throw Error("scale: dimension must be positive");
  if (!std::isfinite(factor) || factor == 0.0)
    throw Error("scale: factor must be finite and nonzero");
  AnalyticMap m(Kind::Scale, dim);
  m.factor_ = factor;
  return m;
}

AnalyticMap AnalyticMap::translate(Vec offset) {
  if (offset.size() < 1) throw Error("translate: empty offset");
  AnalyticMap m(Kind::Translate, static_cast<int>(offset.size()));
  m.offset_ = std::move(offset);
  return m;
}

AnalyticMap AnalyticMap::negate(int dim) {
  if (dim < 1) throw Error("negate: dimension must be positive");
  return AnalyticMap(Kind::Negate, dim);
}

AnalyticMap AnalyticMap::cone(Vec axis, double inner_slope,
                              double outer_slope) {
  const double norm = axis.norm();
  if (norm < 1e-12) throw Error("cone: axis must be nonzero");
  if (!(0.0 < inner_slope && inner_slope < outer_slope))
    throw Error("cone: slopes must satisfy 0 < inner < outer");
  AnalyticMap m(Kind::Cone, static_cast<int>(axis.size()));
  m.axis_ = axis / norm;
  m.inner_slope_ = inner_slope;
  m.outer_slope_ = outer_slope;
  return m;
}

AnalyticMap AnalyticMap::case1(DiscSequence discs) {
  validate_disc_sequence(discs);
  const int dim = static_cast<int>(discs.front().center.size());
  AnalyticMap m(Kind::Case1, dim);
  m.discs_ = std::move(discs);
  m.unit_disc_map_ =
      std::make_shared<const SimplicialMap>(disc_swap_vertex_map(dim));
  return m;
}

AnalyticMap AnalyticMap::compose(std::vector<AnalyticMap> children) {
  if (children.empty()) throw Error("compose: needs at least one child");
  const int dim = children.front().dim();
  for (const auto& c : children)
    if (c.dim() != dim) throw Error("compose: children dimensions differ");
  AnalyticMap m(Kind::Compose, dim);
  m.children_ = std::move(children);
  return m;
}

Vec AnalyticMap::evaluate(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error("analytic map: point dimension mismatch");
  switch (kind_) {
    case Kind::Identity:
      return x;
    case Kind::Scale:
      return factor_ * x;
    case Kind::Translate:
      return x + offset_;
    case Kind::Negate:
      return -x;
    case Kind::Cone: {
      const double h = axis_.dot(x);
      const Vec w = x - h * axis_;
      const double rho = w.norm();
      if (h <= 0.0) {
        if (h == 0.0 && rho == 0.0) return x;  // apex, inside R1
        return 2.0 * x;
      }
      if (rho <= inner_slope_ * h) return x;
      if (rho > outer_slope_ * h) return 2.0 * x;
      // x = t*x1 + (1-t)*x2 along the horizontal segment between the two
      // cone boundaries; the map interpolates identity and doubling.
      const Vec u = w / rho;
      const double t =
          (outer_slope_ - rho / h) / (outer_slope_ - inner_slope_);
      const Vec x1 = h * axis_ + inner_slope_ * h * u;
      const Vec x2 = h * axis_ + outer_slope_ * h * u;
      return t * x1 + 2.0 * (1.0 - t) * x2;
    }
    case Kind::Case1: {
      for (const Disc& d : discs_) {
        if ((x - d.center).norm() <= d.radius) {
          const Vec local = (x - d.center) / d.radius;
          const auto loc = unit_disc_map_->source().locate(local);
          if (!loc.has_value()) return x;  // inside the disc, outside |K|
          const auto& ix = unit_disc_map_->source().simplex(loc->simplex_id);
          Vec img = Vec::Zero(dim_);
          for (size_t l = 0; l < ix.size(); ++l) {
            const int tv = unit_disc_map_->vertex_images()[ix[l]];
            img += loc->coords.weights[static_cast<int>(l)] *
                   unit_disc_map_->target().vertex(tv);
          }
          return d.center + d.radius * img;
        }
      }
      return x;
    }
    case Kind::Compose: {
      Vec y = x;
      for (const auto& c : children_) y = c.evaluate(y);
      return y;
    }
  }
  throw Error("analytic map: unknown kind");
}

std::string AnalyticMap::kind_name() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Scale:
      return "scale";
    case Kind::Translate:
      return "translate";
    case Kind::Negate:
      return "negate";
    case Kind::Cone:
      return "cone";
    case Kind::Case1:
      return "case1";
    case Kind::Compose:
      return "compose";
  }
  return "unknown";
}

}  // namespace plqi
