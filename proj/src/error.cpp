#include "mhtest/error.hpp"

namespace mhtest {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MixedDimension: return "MixedDimension";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::DuplicateSample: return "DuplicateSample";
    case ErrorKind::MissingMate: return "MissingMate";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::DuplicateGroup: return "DuplicateGroup";
    case ErrorKind::InvalidProbVector: return "InvalidProbVector";
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::SampleTooSmall: return "SampleTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::TooManyOutcomes: return "TooManyOutcomes";
    case ErrorKind::InvalidReps: return "InvalidReps";
    case ErrorKind::InvalidB: return "InvalidB";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EstimatorPreconditionViolated: return "EstimatorPreconditionViolated";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::UnknownTable: return "UnknownTable";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput:
    case ErrorKind::ParseError:
    case ErrorKind::MixedDimension:
    case ErrorKind::InvalidDimension:
    case ErrorKind::DuplicateSample:
    case ErrorKind::MissingMate:
    case ErrorKind::NegativeCount:
    case ErrorKind::DuplicateGroup:
    case ErrorKind::InvalidProbVector:
    case ErrorKind::ZeroTotal:
    case ErrorKind::InvalidReps:
    case ErrorKind::InvalidB:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnsupportedDimension:
    case ErrorKind::UnknownTable:
      return true;
    default:
      return false;
  }
}

namespace {

std::string decorate(const std::string& message, const std::optional<std::string>& group_id,
                     const std::optional<std::size_t>& line) {
  std::string out = message;
  if (group_id) out += " (group '" + *group_id + "')";
  if (line) out += " (line " + std::to_string(*line) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::string> group_id,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(message, group_id, line)),
      kind_(kind),
      group_id_(std::move(group_id)),
      line_(line),
      base_message_(message) {}

Error Error::with_group(const std::string& group_id) const {
  if (group_id_) return *this;
  return Error(kind_, base_message_, group_id, line_);
}

}  // namespace mhtest
