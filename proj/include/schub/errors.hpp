#pragma once

#include <stdexcept>
#include <string>

namespace schub {

// A requested cutoff lies below the exactness bound of a truncated
// computation.  Carries the bound so callers can report what would work.
class SoundnessError : public std::runtime_error {
 public:
  SoundnessError(const std::string& msg, long bound)
      : std::runtime_error(msg), bound_(bound) {}
  long bound() const { return bound_; }

 private:
  long bound_;
};

}  // namespace schub
