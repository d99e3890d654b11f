// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_SAMPLING_HPP
#define CYFIN_SAMPLING_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "cyfin/errors.hpp"

namespace cyfin {

/// Sampling plan for the condition checkers.  tol <= 0 means "use the
/// per-path default" (1e-7 for analytic tensors, 1e-4 for finite-difference
/// paths).
struct SamplingPlan {
  std::uint64_t seed = 42;
  int n_base = 256;
  int n_pairs = 64;
  double tol = -1.0;

  void validate() const {
    if (n_base < 1 || n_pairs < 1) throw InputError("sampling plan: counts must be >= 1");
  }
};

/// Counter-based deterministic random stream.  Every draw is a pure function
/// of (seed, counter), so parallel and serial consumers can reproduce the
/// exact same values on any platform.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(mix(seed ^ mix(stream + 0x6a09e667f3bcc909ULL))), counter_(0) {}

  std::uint64_t next_u64() { return mix(seed_ ^ mix(++counter_)); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double next_gaussian();

  Eigen::VectorXd gaussian_vector(int n);

  /// Unit vector for the Euclidean norm.
  Eigen::VectorXd unit_vector(int n);

  /// Unit vector for the inner product given by a (SPD) Gram matrix.
  Eigen::VectorXd unit_vector(int n, const Eigen::MatrixXd& gram);

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cyfin

#endif
