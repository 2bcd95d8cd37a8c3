#pragma once

#include <stdexcept>
#include <string>

namespace cloudbench {

/// Base of every exception the library throws. name() is the stable error
/// identifier the CLI prints.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define CLOUDBENCH_DEFINE_ERROR(Type)                               \
  class Type : public Error {                                       \
  public:                                                           \
    using Error::Error;                                             \
    const char* name() const noexcept override { return #Type; }    \
  };

// Violated precondition (bad length, zero modulus, out-of-range value...).
CLOUDBENCH_DEFINE_ERROR(DomainError)
CLOUDBENCH_DEFINE_ERROR(NotFoundError)
CLOUDBENCH_DEFINE_ERROR(PaddingError)
CLOUDBENCH_DEFINE_ERROR(StateError)
CLOUDBENCH_DEFINE_ERROR(MessageTooLargeError)
CLOUDBENCH_DEFINE_ERROR(KeyMismatchError)
CLOUDBENCH_DEFINE_ERROR(DecryptionError)
CLOUDBENCH_DEFINE_ERROR(UnsupportedParameterError)
// A benchmark sample produced a wrong result; the row must not be reported.
CLOUDBENCH_DEFINE_ERROR(IntegrityError)
CLOUDBENCH_DEFINE_ERROR(SchemaError)

#undef CLOUDBENCH_DEFINE_ERROR

}  // namespace cloudbench
