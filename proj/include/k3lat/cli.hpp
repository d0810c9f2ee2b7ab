#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInstability = 3;
inline constexpr int kExitRefused = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lat
