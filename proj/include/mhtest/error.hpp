#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mhtest {

enum class ErrorKind {
  // Input / validation.
  EmptyInput,
  ParseError,
  MixedDimension,
  InvalidDimension,
  DuplicateSample,
  MissingMate,
  NegativeCount,
  DuplicateGroup,
  InvalidProbVector,
  // Numerical preconditions.
  ZeroTotal,
  SampleTooSmall,
  DimensionMismatch,
  ZeroVariance,
  TooManyOutcomes,
  // Argument validation.
  InvalidReps,
  InvalidB,
  OutOfRange,
  InvalidArgument,
  EstimatorPreconditionViolated,
  UnsupportedDimension,
  UnknownTable,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds that describe malformed input rather than a
/// statistic whose preconditions are not met by otherwise valid data.
bool is_input_error(ErrorKind kind) noexcept;

/// Single exception type for the library. Carries a machine-readable kind
/// plus, where known, the offending group label and input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::string> group_id = std::nullopt,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& group_id() const noexcept { return group_id_; }
  const std::optional<std::size_t>& line() const noexcept { return line_; }

  /// Same error, annotated with a group label (no-op if one is already set).
  Error with_group(const std::string& group_id) const;

 private:
  ErrorKind kind_;
  std::optional<std::string> group_id_;
  std::optional<std::size_t> line_;
  std::string base_message_;
};

}  // namespace mhtest
