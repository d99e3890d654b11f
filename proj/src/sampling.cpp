// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyfin/sampling.hpp"

#include <cmath>

namespace cyfin {

double SampleStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] so the log is finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = next_double();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::VectorXd SampleStream::gaussian_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = next_gaussian();
  return v;
}

Eigen::VectorXd SampleStream::unit_vector(int n) {
  Eigen::VectorXd v = gaussian_vector(n);
  double norm = v.norm();
  while (norm < 1e-12) {  // astronomically unlikely, but deterministic retry
    v = gaussian_vector(n);
    norm = v.norm();
  }
  return v / norm;
}

Eigen::VectorXd SampleStream::unit_vector(int n, const Eigen::MatrixXd& gram) {
  Eigen::VectorXd v = gaussian_vector(n);
  double norm = std::sqrt(v.dot(gram * v));
  while (norm < 1e-12) {
    v = gaussian_vector(n);
    norm = std::sqrt(v.dot(gram * v));
  }
  return v / norm;
}

}  // namespace cyfin
