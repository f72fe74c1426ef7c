#pragma once

#include <string>
#include <vector>

namespace ubb {

// Exit codes: 0 all requested checks pass, 1 a certificate failed, 2 usage
// or input error.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args);  // args without program name

}  // namespace ubb
