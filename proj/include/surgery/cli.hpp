#pragma once

#include <string>
#include <vector>

namespace surgery::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Batch-verification entry point.  Exit code 0 when every checked invariant
/// passes, 1 when a computation runs but an invariant fails, 2 on usage or
/// parameter errors.
int run(const std::vector<std::string>& args);

}  // namespace surgery::cli
