// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "slater_impl.hpp"

namespace fgswap {

FGSWAP_SLATER_INSTANTIATE(xreal)

} // namespace fgswap
