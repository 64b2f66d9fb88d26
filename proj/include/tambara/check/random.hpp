#pragma once

#include <optional>
#include <random>

#include "tambara/bispan.hpp"

namespace tambara::check {

/// A sum of between `min_orbits` and `max_orbits` random orbits with at
/// most `max_points` points in total. Fewer orbits are returned when the
/// point budget runs out.
GSet random_gset(const GroupPtr& g, int max_orbits, int max_points, std::mt19937& rng, int min_orbits = 0);

/// A random equivariant map, or nullopt when there is none.
std::optional<GMap> random_gmap(const GSet& a, const GSet& b, std::mt19937& rng);

/// A random bispan X -> Y whose exponent lies in d, with S and T of at
/// most `max_points` points. Falls back to the zero bispan.
Bispan random_bispan(const GSet& x, const GSet& y, const ExponentPredicate& d, std::mt19937& rng,
                     int max_points = 3);

}  // namespace tambara::check
