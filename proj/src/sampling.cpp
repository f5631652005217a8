#include "lorentz/sampling.hpp"

#include <cmath>

namespace lorentz {

Vec random_unit_timelike(const Spacetime& M, const Vec& x, Rng& rng,
                         double beta_max) {
  const Vec T = M.time_orientation(x);
  const Mat frame = orthonormal_frame(M, x, T);
  const int n = M.surface_dim();
  Vec dir(n);
  for (int i = 0; i < n; ++i) dir[i] = rng.normal();
  const double nd = dir.norm();
  const double beta = rng.uniform(0.0, beta_max);
  Vec v = std::cosh(beta) * frame.col(0);
  if (nd > 1e-12) {
    dir /= nd;
    Vec spatial = Vec::Zero(M.dimension());
    for (int i = 0; i < n; ++i) spatial += dir[i] * frame.col(i + 1);
    v += std::sinh(beta) * spatial;
  }
  return v;
}

Vec random_unit_spacelike_orthogonal(const Spacetime& M, const Vec& x,
                                     const Vec& v, Rng& rng) {
  const Mat frame = orthonormal_frame(M, x, v);
  const int n = M.surface_dim();
  Vec dir(n);
  double nd = 0.0;
  do {
    for (int i = 0; i < n; ++i) dir[i] = rng.normal();
    nd = dir.norm();
  } while (nd < 1e-12);
  dir /= nd;
  Vec out = Vec::Zero(M.dimension());
  for (int i = 0; i < n; ++i) out += dir[i] * frame.col(i + 1);
  return out;
}

Mat random_orthonormal_frame(const Spacetime& M, const Vec& x, const Vec& e0,
                             Rng& rng) {
  Mat frame = orthonormal_frame(M, x, e0);
  const int n = M.surface_dim();
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rng.normal();
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  // fix signs for determinism
  const Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0.0) Q.col(j) *= -1.0;
  frame.rightCols(n) = frame.rightCols(n) * Q;
  return frame;
}

SampledRange sample_sectional_range(const Spacetime& M, const Box& box,
                                    int count, double beta_max,
                                    std::uint64_t seed) {
  Rng rng(seed);
  SampledRange r;
  for (int i = 0; i < count; ++i) {
    const Vec x = box.sample(rng);
    const Vec v = random_unit_timelike(M, x, rng, beta_max);
    const Vec xd = random_unit_spacelike_orthogonal(M, x, v, rng);
    const double K = sectional_timelike(M, x, v, xd);
    if (r.samples == 0 || K < r.min) r.min = K;
    if (r.samples == 0 || K > r.max) r.max = K;
    ++r.samples;
  }
  return r;
}

SampledRange sample_ricci_range(const Spacetime& M, const Box& box, int count,
                                double beta_max, std::uint64_t seed) {
  Rng rng(seed);
  SampledRange r;
  for (int i = 0; i < count; ++i) {
    const Vec x = box.sample(rng);
    const Vec Z = random_unit_timelike(M, x, rng, beta_max);
    const double ric = ricci_timelike(M, x, Z);
    if (r.samples == 0 || ric < r.min) r.min = ric;
    if (r.samples == 0 || ric > r.max) r.max = ric;
    ++r.samples;
  }
  return r;
}

} // namespace lorentz
