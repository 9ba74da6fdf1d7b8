#pragma once
// Deterministic random sources. All sampled output is a pure function of the
// seed, byte-stable across platforms and runs; no std::random distributions.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace witnesslab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // uniform in [0,1)
  double uniform();
  double uniform(double lo, double hi);

  // standard normal (Box-Muller, pair cached)
  double gaussian();

  // Haar-like random unit vector in C^dim (normalized complex Gaussian)
  Eigen::VectorXcd unit_complex(int dim);

  // derive an independent stream seed from a base seed and a stream index
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
  bool have_cache_ = false;
  double cache_ = 0.0;
};

// Additive (Kronecker) low-discrepancy sequence on [0,1)^dim with seeded
// offsets; increments are fractional parts of square roots of primes.
class KroneckerSequence {
 public:
  KroneckerSequence(int dim, std::uint64_t seed);
  std::vector<double> next();

 private:
  std::vector<double> offset_;
  std::vector<double> step_;
  std::uint64_t count_ = 0;
};

}  // namespace witnesslab
