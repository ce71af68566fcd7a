#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cheb {

enum class ErrorCode {
  InvalidArgument,
  UnknownGroup,
  InvalidGroupTable,
  InvalidPolynomial,
  InvalidField,
  CatalogParse,
  LimitTooLarge,
  ParameterOutOfRange,
  DomainTooSmall,
  IntegerTooLarge,
  NotQuadratic,
  EqualFields,
  RamifiedPrime,
  NotCoprimeToDiscriminant,
  PartitionTooLong,
  TruncationInsufficient,
  SieveRangeExceeded,
  AmbiguousClass,
  UnsupportedSubgroupAction,
  UndecidableIntersectionRule,
};

/// Stable machine-readable name, e.g. "RamifiedPrime".
std::string_view error_code_name(ErrorCode code) noexcept;

/// Validation errors are caused by the caller's input (exit code 1 in the
/// CLI); everything else is a computation error (exit code 2).
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace cheb
