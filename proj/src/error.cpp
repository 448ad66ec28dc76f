#include "svo/error.hpp"

namespace svo {

namespace {

std::string locate(const std::string& source, std::size_t line, const std::string& what) {
  if (line == 0) return source + ": " + what;
  return source + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : Error(locate(source, line, what)), source_(std::move(source)), line_(line) {}

OovError::OovError(std::string word, const std::string& context)
    : Error("out-of-vocabulary word '" + word + "'" + (context.empty() ? "" : " (" + context + ")")),
      word_(std::move(word)) {}

UnknownVerbError::UnknownVerbError(std::string verb)
    : Error("verb '" + verb + "' is not in the vocabulary"), verb_(std::move(verb)) {}

}  // namespace svo
