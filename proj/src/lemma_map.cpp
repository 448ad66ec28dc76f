#include "svo/lemma_map.hpp"

#include "svo/error.hpp"
#include "svo/extract.hpp"

namespace svo {

void LemmaMap::add(std::string_view form, std::string_view lemma) {
  map_[to_lower(form)] = to_lower(lemma);
}

std::optional<std::string_view> LemmaMap::lemma_of(std::string_view form) const {
  const auto it = map_.find(std::string(form));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

LemmaMap load_lemma_map(std::istream& in, std::string_view source) {
  LemmaMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(std::string(source), line_no, "expected form<TAB>lemma");
    }
    map.add(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1));
  }
  return map;
}

}  // namespace svo
