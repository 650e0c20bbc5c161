#pragma once

/**
 * @file verify.hpp
 * @brief Seeded randomized verification suites behind the CLI `verify`
 *        subcommand and the acceptance tests. Every check is an exact
 *        equality of rationals or integers; trials are reproducible from
 *        the seed on any platform.
 */

#include "trsk/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trsk {

struct VerifyOptions {
  int m = 3;
  int n = 4;
  long trials = 25;
  std::uint64_t seed = 0;
};

/// Suite names accepted by run_suite, in a stable order.
std::vector<std::string> verify_suite_names();

/// Runs one named suite; throws InvalidArgument for an unknown name.
CheckReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace trsk
