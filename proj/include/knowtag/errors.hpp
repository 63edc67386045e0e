#pragma once

#include <stdexcept>
#include <string>

namespace knowtag {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- configuration ----------------------------------------------------------

struct ConfigError : Error {
  using Error::Error;
};

// Invalid pipeline/batch configuration (e.g. parallelism < 1).
struct BatchConfigError : ConfigError {
  using ConfigError::ConfigError;
};

struct UnsupportedFormatError : ConfigError {
  using ConfigError::ConfigError;
};

// --- gateway ----------------------------------------------------------------

struct GatewayError : Error {
  using Error::Error;
};

// Network/HTTP failure after bounded retries.
struct TransportError : GatewayError {
  using GatewayError::GatewayError;
};

// Retry budget exhausted while the endpoint kept rate limiting.
struct RateLimitError : GatewayError {
  using GatewayError::GatewayError;
};

// Replay mode, key absent from the transcript store.
struct ReplayMissError : GatewayError {
  using GatewayError::GatewayError;
};

// Mock mode, no scripted response matches (or all matching entries consumed).
struct MockMissError : GatewayError {
  using GatewayError::GatewayError;
};

// --- parsers / data ---------------------------------------------------------

struct ParseError : Error {
  using Error::Error;
};

struct PlanParseError : ParseError {
  using ParseError::ParseError;
};

struct DuplicateIndexError : ParseError {
  using ParseError::ParseError;
};

struct JudgmentParseError : ParseError {
  using ParseError::ParseError;
};

struct ArgumentParseError : ParseError {
  using ParseError::ParseError;
};

struct EmptyProgramError : ParseError {
  using ParseError::ParseError;
};

struct BooleanParseError : ParseError {
  using ParseError::ParseError;
};

struct SchemaError : ParseError {
  using ParseError::ParseError;
};

struct DuplicatePairError : ParseError {
  using ParseError::ParseError;
};

struct UnmatchedRecordError : ParseError {
  using ParseError::ParseError;
};

// --- everything else --------------------------------------------------------

struct EmptyPlanError : Error {
  using Error::Error;
};

struct MissingPlaceholderError : Error {
  std::string placeholder;
  explicit MissingPlaceholderError(std::string name)
      : Error("missing placeholder binding: " + name), placeholder(std::move(name)) {}
};

struct InsufficientExamplesError : Error {
  using Error::Error;
};

struct EmptyCountsError : Error {
  using Error::Error;
};

struct CorruptArchiveError : Error {
  using Error::Error;
};

struct InterpreterMissingError : Error {
  using Error::Error;
};

struct SandboxSpawnError : Error {
  using Error::Error;
};

}  // namespace knowtag
