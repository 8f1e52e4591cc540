#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "indlap/matrix.hpp"

namespace indlap::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, bound_violated = 1, input_error = 2, resource_error = 3 };

struct Hooks {
  /// Called on the symmetrized L_k of I(G) before its spectrum is taken in verify-bounds.
  std::function<void(int k, Matrix&)> tamper_k_laplacian;
};

/// Runs the command line `args` (args[0] is the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace indlap::cli
