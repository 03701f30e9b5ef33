// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/experiments.hpp"

int main(int argc, char** argv) { return fgswap::cli_main(argc, argv); }
