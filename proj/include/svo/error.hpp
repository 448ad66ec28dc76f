#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svo {

// Base for every data-level failure. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `line()` is 1-based; 0 means "not line-specific".
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A word could not be resolved against the embeddings or the vocabulary.
class OovError : public Error {
 public:
  explicit OovError(std::string word, const std::string& context = "");
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

// A verb outside the vocabulary was asked for a PPMI-weighted pair vector.
class UnknownVerbError : public Error {
 public:
  explicit UnknownVerbError(std::string verb);
  const std::string& verb() const noexcept { return verb_; }

 private:
  std::string verb_;
};

// PPMI was queried on a role that has no observations.
class EmptyModelError : public Error {
 public:
  using Error::Error;
};

// Two vectors built over different noun spaces were combined.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

// Correlation is undefined (constant input, too few points, length mismatch).
class CorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace svo
