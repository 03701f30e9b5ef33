// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "models_impl.hpp"

namespace fgswap {

FGSWAP_MODELS_INSTANTIATE(xreal)

} // namespace fgswap
