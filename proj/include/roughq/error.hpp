#pragma once

#include <stdexcept>
#include <string>

namespace roughq {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-readable name (e.g. "NotNormal"); `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ROUGHQ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

// group-core
ROUGHQ_DEFINE_ERROR(AxiomViolation);
ROUGHQ_DEFINE_ERROR(ShapeError);
ROUGHQ_DEFINE_ERROR(DegreeError);
ROUGHQ_DEFINE_ERROR(UnknownName);
ROUGHQ_DEFINE_ERROR(OrderTooLarge);
ROUGHQ_DEFINE_ERROR(UnknownLabel);
// subsets / quotient
ROUGHQ_DEFINE_ERROR(ParentMismatch);
ROUGHQ_DEFINE_ERROR(NotSubgroup);
ROUGHQ_DEFINE_ERROR(NotNormal);
ROUGHQ_DEFINE_ERROR(MissingKernel);
// approximation
ROUGHQ_DEFINE_ERROR(MissingIdentityCoset);
// homomorphism
ROUGHQ_DEFINE_ERROR(NotHomomorphism);
ROUGHQ_DEFINE_ERROR(NotNested);
ROUGHQ_DEFINE_ERROR(NotSubgroupH);
ROUGHQ_DEFINE_ERROR(PreconditionM);
// verifier
ROUGHQ_DEFINE_ERROR(ShapeMismatch);
ROUGHQ_DEFINE_ERROR(UnknownProperty);
ROUGHQ_DEFINE_ERROR(UnknownStatement);
// io
ROUGHQ_DEFINE_ERROR(ParseError);

#undef ROUGHQ_DEFINE_ERROR

}  // namespace roughq
