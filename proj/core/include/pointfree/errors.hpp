#pragma once

#include <stdexcept>
#include <string>

namespace pointfree {

/** Base class for all errors raised by the library. */
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed input: bad presentations, unknown names, ring mismatches,
 * violated preconditions, parse failures.  CLI exit code 2. */
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

/** A request exceeded a documented size cap.  CLI exit code 3. */
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

}  // namespace pointfree
