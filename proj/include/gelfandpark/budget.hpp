#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace gelfandpark {

// Size and time limits shared by the enumeration routines.
struct Budget {
  std::uint64_t elements = 50'000'000;  // group elements materialised
  std::uint64_t points = 100'000;       // coset points for orbital work
  double seconds = 300.0;               // wall clock per verdict

  void check_elements(std::uint64_t required, std::string const& what) const {
    if (required > elements)
      throw budget_exceeded(what + ": element budget exceeded", required,
                            elements);
  }
  void check_points(std::uint64_t required, std::string const& what) const {
    if (required > points)
      throw budget_exceeded(what + ": point budget exceeded", required, points);
  }
};

// Wall-clock deadline derived from Budget::seconds.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(elapsed_seconds() * 1000.0);
  }

  void check(std::string const& what) const {
    if (seconds_ > 0 && elapsed_seconds() > seconds_)
      throw budget_exceeded(what + ": time budget exceeded (ms)", elapsed_ms(),
                            static_cast<std::uint64_t>(seconds_ * 1000.0));
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gelfandpark
