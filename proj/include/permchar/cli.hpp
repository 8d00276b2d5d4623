#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permchar::cli
{

enum ExitCode : int
{
  kOk = 0,
  kUsage = 1,
  kIncomplete = 2,
  kCounterexample = 3,
};

// args excludes the program name. Output goes to `out` (or the --out file),
// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace permchar::cli
