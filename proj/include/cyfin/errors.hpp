// Copyright 2026 The cyfin Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYFIN_ERRORS_HPP
#define CYFIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyfin {

/// Error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode : int {
  input = 1,        // bad argument (dimension mismatch, out-of-range parameter)
  domain = 2,       // evaluation outside the mathematical domain (y = 0, |r| > b0)
  state = 3,        // object fails its own invariants (bad decomposition, non-invariant norm)
  convexity = 4,    // fundamental tensor lost positive definiteness
  unsupported = 5,  // valid request the implementation refuses (curvature with nontrivial h)
  degenerate_flag = 6,
  jacobi = 7,       // structure constants violate the Jacobi identity
  parse = 8,        // malformed model document
  internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorCode::input, what) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};
struct StateError : Error {
  explicit StateError(const std::string& what) : Error(ErrorCode::state, what) {}
};
struct ConvexityError : Error {
  explicit ConvexityError(const std::string& what) : Error(ErrorCode::convexity, what) {}
};
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(ErrorCode::unsupported, what) {}
};
struct DegenerateFlagError : Error {
  explicit DegenerateFlagError(const std::string& what) : Error(ErrorCode::degenerate_flag, what) {}
};
struct JacobiError : Error {
  explicit JacobiError(const std::string& what) : Error(ErrorCode::jacobi, what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

}  // namespace cyfin

#endif
