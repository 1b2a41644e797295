#pragma once

#include <ostream>
#include <span>
#include <string>

namespace goldbach {

// Subcommands: pairs, breakdown, formulas, estimate, scan, twin, audit.
// Returns 0 on success, 1 for an I/O failure or a FAIL under `audit --strict`,
// 2 for usage errors (unknown subcommand/flag, invalid values).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace goldbach
