// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "protocol_impl.hpp"

namespace fgswap {

FGSWAP_PROTOCOL_INSTANTIATE(xreal)

} // namespace fgswap
