#ifndef SADIC_ERRORS_HPP_
#define SADIC_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace sadic {

  // Malformed input text, unknown symbols, bad parameters.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Alphabets that do not chain, indices beyond a declared depth.
  struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // A language table needed at some length did not stabilize.
  struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Two distinct irrational quadratic fields met in one computation.
  struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // An exact answer was requested but only a numeric enclosure exists.
  struct InexactError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // An identity that must hold exactly failed; always a bug somewhere.
  struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

}  // namespace sadic

#endif  // SADIC_ERRORS_HPP_
