#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lcq::cli {

enum class Suite { Desk, Extended };

struct VerifyOptions {
  Suite suite = Suite::Desk;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  bool json = false;
};

/// Runs every cross-check of the suite, printing one row per check in a
/// fixed order. Returns the number of failed checks.
int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace lcq::cli
