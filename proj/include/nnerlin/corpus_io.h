// Copyright 2026 The nner-lin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NNERLIN_CORPUS_IO_H_
#define NNERLIN_CORPUS_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nnerlin/sentence.h"
#include "nnerlin/tag_label.h"
#include "nnerlin/tree.h"

namespace nnerlin {

// Malformed input text. |line| is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// What to do with crossing or inverted spans.
enum class CrossingPolicy {
  kError,         // throw ValidationError naming both spans
  kDropOffender,  // keep the earlier-listed span of each crossing pair
};

struct ParseStats {
  int sentences = 0;
  int entities = 0;
  int duplicates_removed = 0;
  int spans_dropped = 0;
  // One human readable message per dedup or drop, with its line number.
  std::vector<std::string> warnings;
};

// Reads the JSON-lines corpus format:
//   {"tokens": [...], "entities": [{"start": s, "end": e, "type": "PER"}]}
// Entities keep their input order. Blank lines are skipped.
std::vector<Sentence> ParseCorpus(std::istream &in, CrossingPolicy policy,
                                  ParseStats *stats = nullptr);
std::vector<Sentence> ParseCorpus(std::string_view text, CrossingPolicy policy,
                                  ParseStats *stats = nullptr);

// Writes one record per sentence with entities in canonical order.
void WriteCorpus(const std::vector<Sentence> &sentences, std::ostream &out);
std::string WriteCorpus(const std::vector<Sentence> &sentences);
std::string WriteRecord(const Sentence &sentence);

// A sentence paired with one label per token.
struct LabeledSentence {
  std::vector<std::string> tokens;
  std::vector<TagLabel> labels;
  Scheme scheme = Scheme::kAbsolute;

  bool operator==(const LabeledSentence &) const = default;
};

// Tag files: a "# scheme=<s> columns=<split|combined>" header followed by
// one "token\tN\tC\tU" (or "token\tN|C|U") row per token and a blank line
// after every sentence.
std::vector<LabeledSentence> ParseLabeled(std::istream &in);
std::vector<LabeledSentence> ParseLabeled(std::string_view text);
void WriteLabeled(const std::vector<LabeledSentence> &sentences, bool combined,
                  std::ostream &out);
std::string WriteLabeled(const std::vector<LabeledSentence> &sentences,
                         bool combined);

// PTB-style bracketing. Parentheses inside tokens are escaped as
// -LRB-/-RRB-.
ConstTree ParseTree(std::string_view text);
std::string WriteTree(const ConstTree &tree);
std::string WriteTree(const Node &root);

}  // namespace nnerlin

#endif  // NNERLIN_CORPUS_IO_H_
