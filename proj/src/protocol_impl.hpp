// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fgswap/errors.hpp"
#include "fgswap/protocol.hpp"
#include "fgswap/slater.hpp"

#include <algorithm>
#include <cmath>

namespace fgswap {

namespace detail {

inline Sites sorted_rungs(const Sites& measured, int L) {
  Sites m = measured;
  std::sort(m.begin(), m.end());
  require(std::adjacent_find(m.begin(), m.end()) == m.end(), "duplicate rung index");
  for (int i : m) require(i >= 0 && i < L, "rung index out of range");
  return m;
}

} // namespace detail

template <typename Real>
MajoranaCorrelation<Real> ideal_bell_gamma(int L, const Sites& measured, const RungProjector& proj_measured,
                                           const RungProjector& proj_complement) {
  const Sites m = detail::sorted_rungs(measured, L);
  std::vector<std::pair<int, RungProjector>> rungs;
  for (int i = 0; i < L; ++i)
    rungs.emplace_back(i, std::binary_search(m.begin(), m.end(), i) ? proj_measured : proj_complement);
  return rung_states_gamma<Real>(L, rungs);
}

template <typename Real>
ProtocolResult gaussian_measurement(const OrbitalMatrix<Real>& upper, const OrbitalMatrix<Real>& lower,
                                    const Sites& measured, const RungProjector& proj, bool minor_probability,
                                    double zero_threshold) {
  using std::exp;
  using std::log;
  const auto L = static_cast<int>(upper.cols());
  require(lower.cols() == L, "layers must have equal length");
  ProtocolResult res;
  res.backend = Backend::Gaussian;
  res.L = L;
  res.measured = detail::sorted_rungs(measured, L);
  res.extended_precision = !std::is_same_v<Real, double>;

  const auto g0 = gamma_direct_sum(gamma_from_orbitals<Real>(upper), gamma_from_orbitals<Real>(lower));
  Real log_p;
  if (minor_probability) {
    const auto pp = postselect_probability<Real>(upper, res.measured);
    log_p = (pp.probability > Real(0)) ? Real(log(pp.probability)) : -std::numeric_limits<Real>::infinity();
  } else {
    log_p = log_measurement_probability<Real>(g0, L, res.measured, proj);
  }
  res.log_probability = to_double(log_p);
  res.probability = to_double(Real(exp(log_p)));
  res.zero_probability = is_zero_probability(res.probability, zero_threshold);

  PostMeasurement<Real> pm;
  try {
    pm = post_measurement<Real>(g0, projector_gamma<Real>(L, res.measured, proj));
  } catch (const CompositionSingular& e) {
    if (!res.zero_probability) throw;
    res.sigma_min = e.sigma_min();
    return res;
  }
  res.sigma_min = to_double(pm.sigma_min);
  res.regularized = pm.regularized;
  if (res.zero_probability) return res;

  const Sites rest = complement(res.measured, L);
  res.entropies["A_R"] = to_double(entropy_from_gamma<Real>(pm.gamma, rest));
  if (2 * res.measured.size() == static_cast<std::size_t>(L))
    res.fidelity_to_ideal = to_double(gaussian_fidelity<Real>(pm.gamma, ideal_bell_gamma<Real>(L, res.measured, proj, proj.dual())));
  res.gamma = MajoranaCorrelation<double>{convert<double, Real>(pm.gamma.R)};
  return res;
}

#define FGSWAP_PROTOCOL_INSTANTIATE(R)                                                                       \
  template ProtocolResult gaussian_measurement<R>(const OrbitalMatrix<R>&, const OrbitalMatrix<R>&,          \
                                                  const Sites&, const RungProjector&, bool, double);         \
  template MajoranaCorrelation<R> ideal_bell_gamma<R>(int, const Sites&, const RungProjector&,               \
                                                      const RungProjector&);

} // namespace fgswap
