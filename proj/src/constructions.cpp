#include "plqi/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "plqi/rng.hpp"

namespace plqi {

namespace {

std::vector<Vec> sphere_vertices(int n) {
  // x_0 = e_n; for 1 <= i <= n-1 the normalization of
  // (-1 repeated i-1 times, 1, 0, ..., 0, -1); x_n = normalize(-1,...,-1).
  std::vector<Vec> xs;
  Vec x0 = Vec::Zero(n);
  x0[n - 1] = 1.0;
  xs.push_back(x0);
  for (int i = 1; i <= n - 1; ++i) {
    Vec v = Vec::Zero(n);
    for (int l = 0; l < i - 1; ++l) v[l] = -1.0;
    v[i - 1] = 1.0;
    v[n - 1] = -1.0;
    xs.push_back(v / v.norm());
  }
  Vec last = Vec::Constant(n, -1.0);
  xs.push_back(last / last.norm());
  return xs;
}

Complex star_subdivision(int n, const std::vector<Vec>& sphere,
                         const Vec& interior) {
  std::vector<Vec> vertices = sphere;
  vertices.push_back(interior);  // index n+1
  std::vector<std::vector<int>> simplices;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> ix;
    for (int l = 0; l <= n; ++l) ix.push_back(l == i ? n + 1 : l);
    simplices.push_back(std::move(ix));
  }
  return Complex(n, std::move(vertices), std::move(simplices));
}

// Deterministic direction set for shell searches: coordinate axes first,
// then seeded random unit vectors.
std::vector<Vec> shell_directions(int n, int random_count, std::uint64_t seed,
                                  std::uint64_t shell_index) {
  std::vector<Vec> dirs;
  for (int d = 0; d < n; ++d) {
    Vec plus = Vec::Zero(n);
    plus[d] = 1.0;
    dirs.push_back(plus);
    dirs.push_back(-plus);
  }
  Rng rng = Rng::substream(seed, shell_index);
  for (int r = 0; r < random_count; ++r) dirs.push_back(rng.unit_vector(n));
  return dirs;
}

}  // namespace

std::pair<Complex, Complex> disc_swap_complexes(int n) {
  if (n < 2) throw Error("disc_swap_complexes: needs n >= 2");
  const auto xs = sphere_vertices(n);
  Vec origin = Vec::Zero(n);
  Vec lifted = Vec::Zero(n);
  lifted[n - 1] = 0.25;
  return {star_subdivision(n, xs, origin), star_subdivision(n, xs, lifted)};
}

SimplicialMap disc_swap_vertex_map(int n) {
  auto [k, kprime] = disc_swap_complexes(n);
  std::vector<int> images(static_cast<size_t>(n + 2));
  std::iota(images.begin(), images.end(), 0);  // x_i fixed, O -> O'
  return SimplicialMap(std::move(k), std::move(kprime), std::move(images));
}

AnalyticMap disc_swap_map(int n) {
  DiscSequence unit(1);
  unit[0].center = Vec::Zero(n);
  unit[0].radius = 1.0;
  return AnalyticMap::case1(std::move(unit));
}

std::optional<WitnessDiscs> witness_discs(const AnalyticMap& f,
                                          const SearchBudget& budget,
                                          std::uint64_t seed) {
  const int n = f.dim();
  WitnessDiscs out;
  double shell = 1.0;
  std::uint64_t shell_index = 0;

  for (int term = 1; term <= budget.terms; ++term) {
    const double r_prev = out.discs.empty() ? 0.0 : out.discs.back().radius;
    bool found = false;
    while (!found && shell <= budget.max_radius) {
      for (const Vec& dir :
           shell_directions(n, budget.random_directions, seed, shell_index)) {
        const Vec d = shell * dir;
        const Vec image = f.evaluate(d);
        const double displacement = (image - d).norm();
        const double r_cand =
            std::min(static_cast<double>(term), displacement / 2.0);
        if (!(r_cand > r_prev + 1e-9)) continue;

        // The radius-`term` disc around the image must avoid all prior
        // points, images and discs; the new point must sit outside every
        // prior disc so no disc ever contains a chosen point.
        const double big = static_cast<double>(term);
        bool ok = true;
        for (const Vec& p : out.points)
          ok = ok && (image - p).norm() > big + 1e-9;
        for (const Disc& disc : out.discs) {
          ok = ok && (image - disc.center).norm() > big + disc.radius + 1e-9;
          ok = ok && (d - disc.center).norm() > disc.radius + 1e-9;
        }
        if (!ok) continue;

        out.points.push_back(d);
        out.discs.push_back({image, r_cand});
        found = true;
        break;
      }
      if (!found) {
        shell *= 1.5;
        ++shell_index;
      }
    }
    if (!found) return std::nullopt;
  }

  if (!check_disc_conditions(f, out).empty())
    throw Error("witness_discs: greedy result failed its own conditions");
  return out;
}

std::vector<std::string> check_disc_conditions(const AnalyticMap& f,
                                               const WitnessDiscs& w) {
  std::vector<std::string> violations;
  const size_t m = w.discs.size();
  if (w.points.size() != m) {
    violations.push_back("points and discs have different lengths");
    return violations;
  }
  auto note = [&](const std::string& s) { violations.push_back(s); };

  for (size_t i = 0; i < m; ++i) {
    if ((f.evaluate(w.points[i]) - w.discs[i].center).norm() > 1e-9)
      note("disc " + std::to_string(i) + " is not centered at the image");
    if (i > 0 && !(w.discs[i].radius > w.discs[i - 1].radius))
      note("radii not strictly increasing at " + std::to_string(i));
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if ((w.points[j] - w.discs[i].center).norm() <= w.discs[i].radius)
        note("disc " + std::to_string(i) + " contains point " +
             std::to_string(j));
      if (i != j &&
          (w.discs[j].center - w.discs[i].center).norm() <= w.discs[i].radius)
        note("disc " + std::to_string(i) + " contains image " +
             std::to_string(j));
    }
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if ((w.discs[i].center - w.discs[j].center).norm() <=
          w.discs[i].radius + w.discs[j].radius)
        note("discs " + std::to_string(i) + " and " + std::to_string(j) +
             " intersect");
  return violations;
}

std::optional<std::vector<Vec>> divergent_sequence(const AnalyticMap& f,
                                                   const SearchBudget& budget,
                                                   std::uint64_t seed) {
  const int n = f.dim();
  std::vector<Vec> seq;
  double prev_norm = 0.0, prev_image_norm = 0.0, prev_disp = 0.0;
  double shell = 1.0;
  std::uint64_t shell_index = 0;

  for (int term = 1; term <= budget.terms; ++term) {
    bool found = false;
    while (!found && shell <= budget.max_radius) {
      for (const Vec& dir :
           shell_directions(n, budget.random_directions, seed, shell_index)) {
        const Vec a = shell * dir;
        if (!(a.norm() > prev_norm && a.norm() > prev_image_norm)) continue;
        const Vec image = f.evaluate(a);
        if (!(image.norm() > prev_image_norm)) continue;
        const double disp = (image - a).norm();
        // Growth margin: strict increase alone would accept floating-point
        // jitter of a constant displacement (e.g. translations).
        if (!(disp > prev_disp * 1.01 + 1e-6)) continue;
        seq.push_back(a);
        prev_norm = a.norm();
        prev_image_norm = image.norm();
        prev_disp = disp;
        found = true;
        break;
      }
      if (!found) {
        shell *= 1.5;
        ++shell_index;
      }
    }
    if (!found) return std::nullopt;
  }

  if (!check_divergence_conditions(f, seq).empty())
    throw Error("divergent_sequence: result failed its own conditions");
  return seq;
}

std::vector<std::string> check_divergence_conditions(
    const AnalyticMap& f, const std::vector<Vec>& sequence) {
  std::vector<std::string> violations;
  for (size_t i = 0; i < sequence.size(); ++i) {
    const Vec image = f.evaluate(sequence[i]);
    if (i == 0) continue;
    const Vec prev_image = f.evaluate(sequence[i - 1]);
    std::ostringstream at;
    at << "term " << i;
    if (!(sequence[i].norm() > sequence[i - 1].norm()))
      violations.push_back("|a_m| not increasing at " + at.str());
    if (!(image.norm() > prev_image.norm()))
      violations.push_back("|f(a_m)| not increasing at " + at.str());
    if (!((image - sequence[i]).norm() >
          (prev_image - sequence[i - 1]).norm()))
      violations.push_back("displacement not increasing at " + at.str());
    if (!(sequence[i].norm() > prev_image.norm()))
      violations.push_back("|a_{m+1}| <= |f(a_m)| at " + at.str());
  }
  return violations;
}

std::vector<double> commutator_series(const AnalyticMap& f,
                                      const AnalyticMap& g,
                                      const std::vector<Vec>& points) {
  std::vector<double> gaps;
  gaps.reserve(points.size());
  for (const Vec& x : points)
    gaps.push_back((f.evaluate(g.evaluate(x)) - g.evaluate(f.evaluate(x))).norm());
  return gaps;
}

}  // namespace plqi
