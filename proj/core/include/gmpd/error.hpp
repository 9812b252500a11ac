#pragma once

#include <stdexcept>
#include <string>

namespace gmpd {

/// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request would exceed a configured size or search bound.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagreed. Never expected for
/// well-formed inputs; seeing one means a bug in this library.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace gmpd
