#pragma once

#include <stdexcept>

namespace lrmoc {

/// File-system failure; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrmoc
