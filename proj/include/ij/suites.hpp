#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ij/io.hpp"

namespace ij {

// Overrides narrow a suite to a single n, k or l; unset fields use the
// suite's own ranges.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::size_t samples = 0;  // sets per cell, 0 = suite default
  ResourceCaps caps;
};

struct SuiteResult {
  Json report;
  bool passed = true;
  std::size_t divergences = 0;
};

std::span<const std::string_view> suite_names();

// Throws ParameterError for an unknown name and PreconditionViolation when
// the overrides leave no admissible cell.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace ij
