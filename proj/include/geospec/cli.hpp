#pragma once

// Command-line surface. run_command takes argv without the program name and
// writes to the given streams, so the whole dispatcher is testable in
// process. Exit codes: 0 ok, 1 verification failed, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace geospec {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geospec
