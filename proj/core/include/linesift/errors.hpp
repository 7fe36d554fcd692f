// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace linesift {

// Base class for every domain error thrown by the library. The CLI maps
// subclasses onto documented exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& s) : Error("unknown label: '" + s + "'") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_no)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

class DuplicateDocId : public Error {
 public:
  explicit DuplicateDocId(const std::string& id) : Error("duplicate document id: '" + id + "'") {}
};

class TooFewDocuments : public Error {
 public:
  using Error::Error;
};

class InvalidRatios : public Error {
 public:
  using Error::Error;
};

class EmptyVocabulary : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyLine : public Error {
 public:
  using Error::Error;
};

class ConfigViolation : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class UnlabeledCorpus : public Error {
 public:
  using Error::Error;
};

class InvalidPriors : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class CoverageMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateLabels : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class EmptyTopic : public Error {
 public:
  using Error::Error;
};

class ModelVersionMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace linesift
