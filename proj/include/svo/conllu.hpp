#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace svo {

// One syntactic word of a CoNLL-U sentence (multiword ranges and empty
// nodes are dropped by the reader).
struct TokenRecord {
  int index = 0;  // 1-based ID
  std::string form;
  std::string lemma;  // may be "_"
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;

  bool operator==(const TokenRecord&) const = default;
};

using Sentence = std::vector<TokenRecord>;

// Unparsed token and comment lines of one sentence, with the file line
// number of its first line. Lets the expensive parsing step run in parallel
// while line numbers in errors stay exact.
struct RawSentence {
  std::size_t first_line = 0;
  std::vector<std::string> lines;
};

// Splits a CoNLL-U stream at blank lines.
class SentenceSplitter {
 public:
  explicit SentenceSplitter(std::istream& in) : in_(in) {}

  // Returns false at end of input.
  bool next(RawSentence& out);

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

// Throws ParseError naming `source` and the offending line.
Sentence parse_sentence(const RawSentence& raw, std::string_view source);

std::vector<Sentence> parse_conllu(std::istream& in, std::string_view source = "<input>");

}  // namespace svo
