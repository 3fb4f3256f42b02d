#pragma once

#include <stdexcept>
#include <string>

namespace monomap {

// Base for all structured errors thrown by this library. Callers that need
// to distinguish failure classes catch one of the derived types below.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value handed to an operation violates its precondition (behind-camera
// projection, non-positive depth, index out of range, kind mismatch, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Malformed content in a parsed file. line == 0 when no line is attributable
// (binary payloads, truncation at end of file).
class ParseError : public Error {
  public:
    ParseError(std::string file, int line, const std::string& reason)
        : Error(line > 0 ? file + ":" + std::to_string(line) + ": " + reason
                         : file + ": " + reason),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

  private:
    std::string file_;
    int line_;
};

// A structured document (manifest, scene spec, run config) violates its
// schema. Carries the offending field path, e.g. "images[3].camera_id".
class SchemaError : public Error {
  public:
    SchemaError(std::string field_path, const std::string& reason)
        : Error(field_path + ": " + reason), field_path_(std::move(field_path)) {}

    const std::string& field_path() const { return field_path_; }

  private:
    std::string field_path_;
};

// A referenced file does not exist or cannot be opened.
class MissingFileError : public Error {
  public:
    using Error::Error;
};

// Model fitting cannot proceed (too few pairs, degenerate linear system).
class FitError : public Error {
  public:
    using Error::Error;
};

// Metric computation over incompatible or empty inputs.
class MetricError : public Error {
  public:
    using Error::Error;
};

// Synthetic-scene generation constraint violated (infeasible overlap,
// warp pole inside the scene depth range, query outside the extent).
class SynthError : public Error {
  public:
    using Error::Error;
};

}  // namespace monomap
