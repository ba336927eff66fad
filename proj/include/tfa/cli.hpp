#pragma once

#include <string>
#include <vector>

namespace tfa {

/// Runs one tool invocation. `args` holds the arguments after the
/// program name, in command-line order. Exit codes across commands:
/// 0 affirmative, 1 negative/counterexample, 2 bounded or infeasible,
/// 3 usage or parse error.
int dispatch(std::vector<std::string> args);

}  // namespace tfa
