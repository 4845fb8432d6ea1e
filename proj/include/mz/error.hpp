#pragma once

#include <stdexcept>
#include <string>

namespace mz {

/// A precondition of a documented operation was violated by the caller's
/// input (as opposed to an internal failure). The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mz
