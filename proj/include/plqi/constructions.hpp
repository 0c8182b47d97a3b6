#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "plqi/analytic.hpp"

namespace plqi {

// The two star-subdivided simplicial complexes K and K' inside the closed
// unit disc: vertices x_0..x_n on the unit sphere, interior vertex O (the
// origin) for K and O' = (0,...,0,1/4) for K'; maximal simplices Delta_i
// replace x_i by the interior vertex. Requires n >= 2.
std::pair<Complex, Complex> disc_swap_complexes(int n);

// The simplicial homeomorphism h': K -> K' fixing every x_i and sending
// O to O'.
SimplicialMap disc_swap_vertex_map(int n);

// h' extended by the identity to the whole space: the disc-swap
// homeomorphism of the closed unit disc (identity on and outside the
// boundary sphere). Realized as a single unit disc of the rescaled map.
AnalyticMap disc_swap_map(int n);

struct SearchBudget {
  int terms = 20;               // sequence length to produce
  double max_radius = 1e12;     // give up beyond this shell radius
  int random_directions = 16;   // per shell, after the coordinate axes
};

struct WitnessDiscs {
  std::vector<Vec> points;  // d'_m, outside every disc
  DiscSequence discs;       // disc m centered at f(d'_m), radius r_m
};

// Greedy selection of points whose displacement under f keeps growing:
// the disc of radius m around f(d'_m) must avoid all previously chosen
// points, images and discs, and r_m = min(m, |f(d'_m) - d'_m| / 2) must
// strictly increase. Returns nullopt when the search budget is exhausted
// (bounded displacement at the explored scale).
std::optional<WitnessDiscs> witness_discs(const AnalyticMap& f,
                                          const SearchBudget& budget = {},
                                          std::uint64_t seed = 0);

// Machine check of the three disc conditions (strictly increasing radii,
// discs contain no chosen point and no other image, pairwise disjoint
// closed discs) plus center/image agreement. Empty list means all hold.
std::vector<std::string> check_disc_conditions(const AnalyticMap& f,
                                               const WitnessDiscs& w);

// Points a_m with |a_m|, |f(a_m)| and d(f(a_m), a_m) strictly increasing
// and |a_{m+1}| > |f(a_m)|. Returns nullopt when displacement stops
// growing within the budget.
std::optional<std::vector<Vec>> divergent_sequence(
    const AnalyticMap& f, const SearchBudget& budget = {},
    std::uint64_t seed = 0);

std::vector<std::string> check_divergence_conditions(
    const AnalyticMap& f, const std::vector<Vec>& sequence);

// d(f(g(x)), g(f(x))) per point.
std::vector<double> commutator_series(const AnalyticMap& f,
                                      const AnalyticMap& g,
                                      const std::vector<Vec>& points);

}  // namespace plqi
