/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_TOOLS_CLI_H
#define FSRR_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace fsrr
{

/// Exit status for malformed command lines and invalid input files.
constexpr int kExitUsage = 2;

/**
 * Entry point of the `fsrr` tool. args excludes the program name.
 * Returns the process exit code.
 */
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fsrr

#endif // FSRR_TOOLS_CLI_H
