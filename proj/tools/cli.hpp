#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sumlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A library operation and an invocation that reaches it.
struct OperationRoute {
  std::string_view module;
  std::string_view operation;
  std::vector<std::string> example_args;
};

const std::vector<OperationRoute>& operation_routes();

}  // namespace sumlab::cli
