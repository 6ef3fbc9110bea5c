#pragma once

#include <cstdint>

namespace lrmoc {

/// Serial is the reference path; Parallel uses OpenMP when built with it.
enum class Execution : std::uint8_t { Serial, Parallel };

}  // namespace lrmoc
