#pragma once

#include <stdexcept>
#include <string>

namespace melharm {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text or XML input (chord symbols, MusicXML structure).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but uses features outside the supported subset
/// (polyphony, multiple parts, ...).
class UnsupportedContentError : public Error {
 public:
  using Error::Error;
};

/// A duration or onset cannot be represented on the sixteenth-note grid.
class QuantizationError : public Error {
 public:
  using Error::Error;
};

/// A chord symbol is missing from the vocabulary during encoding.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// A probability distribution cannot be rescaled (attribute mass 0 or 1).
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

/// File I/O or format failure (weights files, JSON documents).
class IoError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation precondition (shape mismatch, bad range).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace melharm
