#include "cheb/errors.hpp"

namespace cheb {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::CatalogParse: return "CatalogParse";
    case ErrorCode::LimitTooLarge: return "LimitTooLarge";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::IntegerTooLarge: return "IntegerTooLarge";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::EqualFields: return "EqualFields";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::NotCoprimeToDiscriminant: return "NotCoprimeToDiscriminant";
    case ErrorCode::PartitionTooLong: return "PartitionTooLong";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::SieveRangeExceeded: return "SieveRangeExceeded";
    case ErrorCode::AmbiguousClass: return "AmbiguousClass";
    case ErrorCode::UnsupportedSubgroupAction: return "UnsupportedSubgroupAction";
    case ErrorCode::UndecidableIntersectionRule: return "UndecidableIntersectionRule";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownGroup:
    case ErrorCode::InvalidGroupTable:
    case ErrorCode::InvalidPolynomial:
    case ErrorCode::InvalidField:
    case ErrorCode::CatalogParse:
    case ErrorCode::LimitTooLarge:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::DomainTooSmall:
    case ErrorCode::NotQuadratic:
    case ErrorCode::EqualFields:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace cheb
