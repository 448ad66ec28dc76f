#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace svo {

// form -> lemma lookup, consulted only when a dataset word is not found as-is.
// File format: `form<TAB>lemma` per line, `#` comments allowed.
class LemmaMap {
 public:
  void add(std::string_view form, std::string_view lemma);
  std::optional<std::string_view> lemma_of(std::string_view form) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

LemmaMap load_lemma_map(std::istream& in, std::string_view source = "<lemmas>");

}  // namespace svo
