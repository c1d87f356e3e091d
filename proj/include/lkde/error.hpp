#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lkde {

enum class ErrorKind
{
  invalid_parameter,
  invalid_input,
  truncation_failure,
  degenerate_sample,
  no_finite_optimum,
  estimation_failure,
  unsupported,
  invalid_target,
  internal_error
};

const char* to_string(ErrorKind kind) noexcept;

//! Single exception type for the library; `kind()` tells callers how to react.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what)
    , kind_(kind)
  {}

  ErrorKind kind() const noexcept { return kind_; }

  //! True for failures caused by bad arguments or data rather than numerics.
  bool is_input_error() const noexcept;

private:
  ErrorKind kind_;
};

//! Thrown by estimate_r when no sample lies near the right boundary.
class EstimationFailure : public Error
{
public:
  EstimationFailure(std::size_t numerator, const std::string& what)
    : Error(ErrorKind::estimation_failure, what)
    , numerator_(numerator)
  {}

  std::size_t numerator() const noexcept { return numerator_; }

private:
  std::size_t numerator_;
};

} // namespace lkde
