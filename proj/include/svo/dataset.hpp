#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "svo/composer.hpp"

namespace svo {

// One annotator's judgement of one ordered pair of triplets.
struct EvalItem {
  std::string annotator;
  Triplet left;
  Triplet right;
  double human_score = 0.0;

  bool operator==(const EvalItem&) const = default;
};

struct DatasetOptions {
  double min_score = 1.0;
  double max_score = 7.0;
};

// Accepts two whitespace-separated layouts, told apart by the header:
//   canonical: annotator subj1 verb1 obj1 subj2 verb2 obj2 score
//   verb-disambiguation native: participant verb subject object landmark input [hilo]
// The native layout becomes left = (subject, verb, object),
// right = (subject, landmark, object); any hilo column is ignored.
// Words are lowercased. Errors name the line.
std::vector<EvalItem> load_dataset(std::istream& in, std::string_view source = "<dataset>",
                                   const DatasetOptions& options = {});

// Writes the canonical tab-separated layout.
void write_dataset(std::ostream& out, const std::vector<EvalItem>& items);

}  // namespace svo
