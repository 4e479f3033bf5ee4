#pragma once

#include <stdexcept>
#include <string>

namespace dilat {

/// Domain error carrying a stable, machine-readable kind tag
/// (e.g. "RangeError", "ResourceLimit"). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DILAT_DECLARE_ERROR(Name)                                                \
  class Name : public Error {                                                    \
   public:                                                                       \
    explicit Name(const std::string& message) : Error(#Name, message) {}         \
  }

DILAT_DECLARE_ERROR(RangeError);
DILAT_DECLARE_ERROR(ResourceLimit);
DILAT_DECLARE_ERROR(SizeError);
DILAT_DECLARE_ERROR(ParseError);
DILAT_DECLARE_ERROR(PreconditionViolation);
DILAT_DECLARE_ERROR(NoRootAtLeastOne);
DILAT_DECLARE_ERROR(Inconclusive);
DILAT_DECLARE_ERROR(RefinementLimit);
DILAT_DECLARE_ERROR(FixtureNotFound);

#undef DILAT_DECLARE_ERROR

}  // namespace dilat
