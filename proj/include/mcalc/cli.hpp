#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcalc {

/// Entry point of the `mcalc` tool; argv[0] excluded. Returns the exit
/// status: 0 on success or VERIFIED, 1 on REFUTED, 2 on usage or engine
/// errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcalc
