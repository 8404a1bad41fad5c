#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gelfandpark {

// Raised when an input violates an operation's precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a size or time budget. Carries the
// count that was required so callers can report it or raise the limit.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(std::string const& what_, std::uint64_t required,
                  std::uint64_t limit)
      : std::runtime_error(what_ + " (required " + std::to_string(required) +
                           ", limit " + std::to_string(limit) + ")"),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

// Raised when a mathematical invariant that the theory guarantees fails to
// hold. Seeing one of these means a bug or a counterexample.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool cond, std::string const& msg) {
  if (!cond) throw invalid_input(msg);
}
}  // namespace detail

}  // namespace gelfandpark
