#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exceptio {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// args[0] is the program name. Writes one JSON envelope to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exceptio
