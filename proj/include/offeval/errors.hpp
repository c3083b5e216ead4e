#ifndef OFFEVAL_ERRORS_HPP
#define OFFEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace offeval {

// Each error family maps onto one CLI exit code (see commands.hpp).

/// Bad flags or arguments.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable, malformed or semantically invalid input data.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Missing, corrupted or incompatible model bundle.
class ModelFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace offeval

#endif
