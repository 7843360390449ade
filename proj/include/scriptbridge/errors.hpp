#pragma once

#include <stdexcept>
#include <string>

namespace scriptbridge {

// Base for every error the pipeline can raise. Subcommands map these to
// exit code 1 (input errors) or 2 (config errors).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndecodableInput : Error {
  using Error::Error;
};

struct EmptyScript : Error {
  using Error::Error;
};

struct NoCuesParsed : Error {
  using Error::Error;
};

struct MixedFormat : Error {
  using Error::Error;
};

struct EmptyCollection : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

// Malformed row in a structured text file; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line_no(line_no) {}
  int line_no;
};

struct MissingLine : Error {
  using Error::Error;
};

struct EmptyTraining : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  InsufficientData(const std::string& msg, std::string group)
      : Error(msg), group(std::move(group)) {}
  std::string group;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace scriptbridge
