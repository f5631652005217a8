#pragma once

#include "lorentz/rng.hpp"
#include "lorentz/spacetime.hpp"

namespace lorentz {

// Axis-aligned sampling box in chart coordinates.
struct Box {
  Vec lo, hi;
  Vec sample(Rng& rng) const {
    Vec x(lo.size());
    for (int i = 0; i < lo.size(); ++i) x[i] = rng.uniform(lo[i], hi[i]);
    return x;
  }
};

// Unit future timelike vector at x: the normalized time orientation boosted
// by a rapidity drawn from [0, beta_max] in a random spatial direction.
Vec random_unit_timelike(const Spacetime& M, const Vec& x, Rng& rng,
                         double beta_max);

// Unit spacelike vector orthogonal to the given unit timelike v.
Vec random_unit_spacelike_orthogonal(const Spacetime& M, const Vec& x,
                                     const Vec& v, Rng& rng);

// Orthonormal frame with first column e0 and the spacelike legs rotated by a
// random orthogonal matrix.
Mat random_orthonormal_frame(const Spacetime& M, const Vec& x, const Vec& e0,
                             Rng& rng);

struct SampledRange {
  double min = 0.0;
  double max = 0.0;
  int samples = 0;
};

// Empirical range of sectional curvatures of timelike planes over random
// events in the box and random planes with rapidity up to beta_max.
SampledRange sample_sectional_range(const Spacetime& M, const Box& box,
                                    int count, double beta_max,
                                    std::uint64_t seed);

// Empirical range of Ric(Z, Z) over random unit timelike Z.
SampledRange sample_ricci_range(const Spacetime& M, const Box& box, int count,
                                double beta_max, std::uint64_t seed);

} // namespace lorentz
