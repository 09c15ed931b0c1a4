#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace degenlab {

/// Library error with a stable machine-readable kind tag ("DimensionMismatch",
/// "SingularMatrix", ...) in front of the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& what) {
  throw Error(std::move(kind), what);
}

}  // namespace degenlab
