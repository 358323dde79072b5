#ifndef ILMT_CLI_HPP
#define ILMT_CLI_HPP

#include <string>
#include <vector>

namespace ilmt {

// Exit codes: 0 success / all checks pass, 1 usage or parse error,
// 2 size cap or state budget exceeded, 3 verification failures present.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace ilmt

#endif
