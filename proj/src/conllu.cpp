#include "svo/conllu.hpp"

#include <charconv>

#include "svo/error.hpp"

namespace svo {

namespace {

constexpr std::size_t kColumns = 10;

void split_tabs(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(std::string_view s, int& value) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

bool SentenceSplitter::next(RawSentence& out) {
  out.lines.clear();
  out.first_line = 0;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!out.lines.empty()) return true;
      continue;
    }
    if (out.lines.empty()) out.first_line = line_no_;
    out.lines.push_back(std::move(line));
  }
  return !out.lines.empty();
}

Sentence parse_sentence(const RawSentence& raw, std::string_view source) {
  Sentence sentence;
  sentence.reserve(raw.lines.size());
  std::vector<std::string_view> cols;
  for (std::size_t i = 0; i < raw.lines.size(); ++i) {
    const std::string_view line = raw.lines[i];
    const std::size_t line_no = raw.first_line + i;
    if (line.front() == '#') continue;

    split_tabs(line, cols);
    if (cols.size() != kColumns) {
      throw ParseError(std::string(source), line_no,
                       "expected 10 tab-separated columns, found " + std::to_string(cols.size()));
    }
    const std::string_view id = cols[0];
    // Multiword token ranges ("3-4") and empty nodes ("5.1").
    if (id.find_first_of("-.") != std::string_view::npos) continue;

    TokenRecord tok;
    if (!parse_int(id, tok.index) || tok.index < 1) {
      throw ParseError(std::string(source), line_no, "invalid token ID '" + std::string(id) + "'");
    }
    if (!parse_int(cols[6], tok.head) || tok.head < 0) {
      throw ParseError(std::string(source), line_no,
                       "invalid HEAD '" + std::string(cols[6]) + "'");
    }
    if (tok.head == tok.index) {
      throw ParseError(std::string(source), line_no, "token is its own head");
    }
    if (cols[3].empty() || cols[7].empty()) {
      throw ParseError(std::string(source), line_no, "empty UPOS or DEPREL");
    }
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = cols[3];
    tok.deprel = cols[7];
    sentence.push_back(std::move(tok));
  }
  return sentence;
}

std::vector<Sentence> parse_conllu(std::istream& in, std::string_view source) {
  std::vector<Sentence> sentences;
  SentenceSplitter splitter(in);
  RawSentence raw;
  while (splitter.next(raw)) {
    auto sentence = parse_sentence(raw, source);
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  return sentences;
}

}  // namespace svo
