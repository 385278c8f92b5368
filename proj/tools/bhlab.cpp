// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/cli/commands.hpp"

int main(int argc, char** argv) { return bhchaos::cli::run_main(argc, argv); }
