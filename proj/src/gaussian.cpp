// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "gaussian_impl.hpp"

namespace fgswap {

std::vector<Index> majorana_indices(const Sites& modes) {
  std::vector<Index> idx;
  idx.reserve(2 * modes.size());
  for (int m : modes) {
    idx.push_back(2 * Index{m});
    idx.push_back(2 * Index{m} + 1);
  }
  return idx;
}

FGSWAP_GAUSSIAN_INSTANTIATE(double)

} // namespace fgswap
