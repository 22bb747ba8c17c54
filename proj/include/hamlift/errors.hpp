#pragma once

#include <stdexcept>
#include <string>

namespace hamlift {

// Bad user-supplied parameters (inadmissible k, out-of-range index, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed to hold. Always an implementation bug or
// corrupt input data; `stage()` names the module that noticed it.
class invariant_violation : public std::logic_error {
 public:
  invariant_violation(std::string stage, const std::string& what)
      : std::logic_error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hamlift
