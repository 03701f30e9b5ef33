// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fgswap {

/// Input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense Fock representation would exceed the mode cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// (1 + G1 G2) is singular and the mixing regularization did not converge.
class CompositionSingular : public std::runtime_error {
 public:
  explicit CompositionSingular(double sigma_min)
      : std::runtime_error("composition singular: sigma_min = " + std::to_string(sigma_min)),
        sigma_min_(sigma_min) {}
  [[nodiscard]] double sigma_min() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

/// Fermi level is degenerate within tolerance; the ground state is not unique.
class DegenerateFermiLevel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

} // namespace fgswap
