// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "gaussian_impl.hpp"

namespace fgswap {

FGSWAP_GAUSSIAN_INSTANTIATE(xreal)

} // namespace fgswap
