// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include <json.hpp>

#include "bhchaos/cli/run_config.hpp"

namespace bhchaos::cli {

/// Runs one pipeline. With config.out set, data goes to <out>.csv and the
/// summary to <out>.json. Returns the summary, which records the resolved
/// config and seed.
nlohmann::json run(const RunConfig& config, std::ostream& log);

/// 2 for bad input, 3 for numerical failures.
int exit_code(ErrorKind kind) noexcept;

/// Command-line entry: parses argv (with an optional --config JSON file whose
/// keys mirror the flags; flags win) and runs it.
int run_main(int argc, char** argv);

}  // namespace bhchaos::cli
