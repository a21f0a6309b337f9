#pragma once

#include <stdexcept>
#include <string>

namespace pixshuffle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two images or channels that must share a shape do not.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A permutation was applied to a channel with a different sample count.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Pearson correlation is undefined (zero marginal variance or too few pairs).
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

/// Argument outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raster or report decoding failure. `field()` names the offending part.
class FormatError : public Error {
 public:
  enum class Kind {
    malformed_header,
    unsupported_maxval,
    truncated_payload,
    unsupported_format,
    malformed_report,
  };

  FormatError(Kind kind, std::string field, const std::string& detail)
      : Error(describe(kind) + ": " + field + (detail.empty() ? "" : " (" + detail + ")")),
        kind_(kind),
        field_(std::move(field)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string describe(Kind kind) {
    switch (kind) {
      case Kind::malformed_header: return "malformed header";
      case Kind::unsupported_maxval: return "unsupported maxval";
      case Kind::truncated_payload: return "truncated payload";
      case Kind::unsupported_format: return "unsupported format";
      case Kind::malformed_report: return "malformed report";
    }
    return "format error";
  }

  Kind kind_;
  std::string field_;
};

}  // namespace pixshuffle
