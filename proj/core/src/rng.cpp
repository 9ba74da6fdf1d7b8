#include "witnesslab/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace witnesslab {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix_step(state_); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (have_cache_) {
    have_cache_ = false;
    return cache_;
  }
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  cache_ = r * std::sin(t);
  have_cache_ = true;
  return r * std::cos(t);
}

Eigen::VectorXcd Rng::unit_complex(int dim) {
  if (dim < 1) throw std::invalid_argument("unit_complex: dim < 1");
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = std::complex<double>(gaussian(), gaussian());
  }
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / n;
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  return splitmix_step(state);
}

KroneckerSequence::KroneckerSequence(int dim, std::uint64_t seed) {
  static const double kPrimes[] = {
      2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
      43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
      103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
      173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
      241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};
  if (dim < 1 || dim > 64)
    throw std::invalid_argument("KroneckerSequence: dim out of range");
  Rng rng(seed);
  offset_.resize(dim);
  step_.resize(dim);
  for (int j = 0; j < dim; ++j) {
    offset_[j] = rng.uniform();
    const double root = std::sqrt(kPrimes[j]);
    step_[j] = root - std::floor(root);
  }
}

std::vector<double> KroneckerSequence::next() {
  std::vector<double> point(offset_.size());
  const double m = static_cast<double>(count_++);
  for (std::size_t j = 0; j < offset_.size(); ++j) {
    const double x = offset_[j] + m * step_[j];
    point[j] = x - std::floor(x);
  }
  return point;
}

}  // namespace witnesslab
