// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "protocol_impl.hpp"

#include <random>

namespace fgswap {

const char* to_string(Backend b) { return b == Backend::Oracle ? "oracle" : "gaussian"; }

const char* to_string(Precision p) {
  switch (p) {
    case Precision::Double:
      return "double";
    case Precision::Extended:
      return "extended";
    default:
      return "auto";
  }
}

BilayerSource copies_of(const OrbitalMatrix<double>& phi) {
  BilayerSource src;
  src.upper = [phi] { return phi; };
  src.lower = src.upper;
  src.upper_x = [phi] { return orthonormalize_rows<xreal>(convert<xreal, double>(phi)); };
  src.lower_x = src.upper_x;
  src.identical_layers = true;
  return src;
}

BilayerSource chain_bilayer(const ChainSpec& upper, const ChainSpec& lower) {
  require(upper.L == lower.L, "layers must have equal length");
  BilayerSource src;
  src.upper = [upper] { return ground_state_orbitals<double>(upper); };
  src.lower = [lower] { return ground_state_orbitals<double>(lower); };
  src.upper_x = [upper] { return ground_state_orbitals<xreal>(upper); };
  src.lower_x = [lower] { return ground_state_orbitals<xreal>(lower); };
  src.identical_layers = upper.m0 == lower.m0 && upper.particles() == lower.particles();
  return src;
}

FockState ideal_bell_product(int L, const Sites& measured, const RungProjector& proj_measured,
                             const RungProjector& proj_complement) {
  const Sites m = detail::sorted_rungs(measured, L);
  FockState s = FockState::vacuum(2 * L);
  for (int i = L - 1; i >= 0; --i) {
    const RungProjector& p = std::binary_search(m.begin(), m.end(), i) ? proj_measured : proj_complement;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(2 * L);
    w(i) = p.alpha;
    w(L + i) = p.beta;
    s = apply_orbital_creation(s, w);
  }
  return s;
}

ProtocolResult oracle_measurement(const OrbitalMatrix<double>& upper, const OrbitalMatrix<double>& lower,
                                  const Sites& measured, const RungProjector& proj, double zero_threshold) {
  const auto L = static_cast<int>(upper.cols());
  require(lower.cols() == L, "layers must have equal length");
  if (2 * L > kMaxModes) throw CapacityError("oracle backend needs 2L <= 16");
  ProtocolResult res;
  res.backend = Backend::Oracle;
  res.L = L;
  res.measured = detail::sorted_rungs(measured, L);

  FockState psi = tensor_product(build_slater_state(upper), build_slater_state(lower));
  double prob = 1.0;
  for (int i : res.measured) {
    const Projection pr = apply_rung_projector(psi, i, proj);
    prob *= pr.probability;
    if (pr.probability < 1e-300) {
      prob = 0.0;
      break;
    }
    psi = normalized(pr.state);
  }
  res.probability = prob;
  res.log_probability = prob > 0.0 ? std::log(prob) : -std::numeric_limits<double>::infinity();
  res.zero_probability = is_zero_probability(prob, zero_threshold);
  if (res.zero_probability) return res;

  const Sites rest = complement(res.measured, L);
  res.entropies["A_R"] = rest.empty() ? 0.0 : entanglement_entropy(psi, rest);
  if (2 * res.measured.size() == static_cast<std::size_t>(L))
    res.fidelity_to_ideal = fidelity(psi, ideal_bell_product(L, res.measured, proj, proj.dual()));
  res.fock = std::move(psi);
  return res;
}

ProtocolResult run_measurement(const BilayerSource& src, const Sites& measured, const RungProjector& proj,
                               Backend backend, Precision precision, double zero_threshold) {
  if (backend == Backend::Oracle) return oracle_measurement(src.upper(), src.lower(), measured, proj, zero_threshold);

  const auto upper = src.upper();
  const auto L = static_cast<int>(upper.cols());
  const bool bell = std::abs(std::norm(proj.alpha) - 0.5) < 1e-15;
  const bool minors = src.identical_layers && bell && 2 * measured.size() == static_cast<std::size_t>(L);
  auto extended = [&] {
    return gaussian_measurement<xreal>(src.upper_x(), src.lower_x(), measured, proj, minors, zero_threshold);
  };
  if (precision == Precision::Extended) return extended();

  ProtocolResult res;
  try {
    res = gaussian_measurement<double>(upper, src.lower(), measured, proj, minors, zero_threshold);
  } catch (const CompositionSingular&) {
    if (precision == Precision::Double) throw;
    return extended();
  }
  if (precision == Precision::Auto && (res.regularized || res.sigma_min < 1e-6)) return extended();
  return res;
}

ProtocolResult run_uniform_measurement(const OrbitalMatrix<double>& phi, const Sites& measured,
                                       const RungProjector& proj, Backend backend, Precision precision) {
  return run_measurement(copies_of(phi), measured, proj, backend, precision);
}

FillingReport check_filling_selection(int L, const Sites& measured, int seeds, std::uint64_t seed, Backend backend) {
  require(L % 2 == 0 && 2 * measured.size() == static_cast<std::size_t>(L), "need L/2 measured rungs");
  FillingReport rep;
  const auto plus = RungProjector::bell_plus();
  for (int N = 0; N <= L; ++N)
    for (int s = 0; s < seeds; ++s) {
      FillingCase c{N, seed + 7919u * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(s), measured, 0.0};
      const auto phi = random_slater(L, N, c.seed);
      if (backend == Backend::Oracle) {
        c.probability = oracle_measurement(phi, phi, measured, plus).probability;
      } else {
        const auto src = copies_of(phi);
        const auto g0 = gamma_double(gamma_from_orbitals<xreal>(src.upper_x()));
        c.probability = to_double(xreal(exp(log_measurement_probability<xreal>(g0, L, measured, plus))));
      }
      if (2 * N != L && !(c.probability < kZeroProbability)) rep.passed = false;
      rep.cases.push_back(std::move(c));
    }
  return rep;
}

Sites random_subset(int L, int k, std::uint64_t seed) {
  require(k >= 0 && k <= L, "subset size out of range");
  std::mt19937_64 rng(seed);
  Sites all = iota_sites(L);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, L - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(pick(rng))]);
  }
  Sites out(all.begin(), all.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

PartialEntropyReport partial_measurement_entropy(const BilayerSource& src, int L, int n_m, const RungProjector& proj,
                                                 int trials, std::uint64_t seed, Backend backend, Precision precision,
                                                 double tol) {
  require(n_m >= 0 && 2 * n_m <= L, "n_m must not exceed L/2");
  PartialEntropyReport rep;
  rep.L = L;
  rep.n_m = n_m;
  rep.predicted = n_m * proj.rung_entropy();
  for (int t = 0; t < trials; ++t) {
    EntropySample smp;
    smp.measured = random_subset(L, n_m, seed + static_cast<std::uint64_t>(t));
    const ProtocolResult r = run_measurement(src, smp.measured, proj, backend, precision);
    smp.probability = r.probability;
    if (r.zero_probability) {
      smp.excluded = true;
      ++rep.excluded;
    } else {
      smp.entropy = r.entropies.at("A_R");
      rep.max_deviation = std::max(rep.max_deviation, std::abs(smp.entropy - rep.predicted));
    }
    rep.samples.push_back(std::move(smp));
  }
  rep.passed = rep.max_deviation <= tol;
  return rep;
}

ProtocolResult imperfect_copy_run(const ChainSpec& spec, double dm, Backend backend, Precision precision) {
  ChainSpec lower = spec;
  lower.m0 = spec.m0 + dm;
  return run_measurement(chain_bilayer(spec, lower), iota_sites(spec.L / 2), RungProjector::bell_plus(), backend,
                         precision, 0.0);
}

FGSWAP_PROTOCOL_INSTANTIATE(double)

} // namespace fgswap
