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

#ifndef NNERLIN_TAG_LABEL_H_
#define NNERLIN_TAG_LABEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nnerlin {

// The four linearizations.
enum class Scheme { kAbsolute, kRelative, kDynamic, kTetra };

// "abs", "rel", "dyn" or "4tg".
std::string_view SchemeName(Scheme scheme);
std::optional<Scheme> SchemeFromName(std::string_view name);

// Per-token label (n, c, u).
//
// The n-slot is scheme dependent. The depth-based schemes use |value|: the
// common-ancestor count (abs), its difference to the previous position (rel)
// or either of the two (dyn, where |absolute| marks the abs-flavored values).
// Tetra-tagging uses |word_tag| ('l' or 'r') and |fence_tag| ('L', 'R', or
// 0 on the last token).
struct TagLabel {
  int value = 0;
  bool absolute = false;
  char word_tag = 0;
  char fence_tag = 0;
  std::string nonterminal;
  std::string unary;

  static TagLabel Depth(int value, std::string nonterminal,
                        std::string unary = "", bool absolute = false) {
    TagLabel label;
    label.value = value;
    label.absolute = absolute;
    label.nonterminal = std::move(nonterminal);
    label.unary = std::move(unary);
    return label;
  }
  static TagLabel Tetra(char word_tag, char fence_tag, std::string nonterminal,
                        std::string unary = "") {
    TagLabel label;
    label.word_tag = word_tag;
    label.fence_tag = fence_tag;
    label.nonterminal = std::move(nonterminal);
    label.unary = std::move(unary);
    return label;
  }

  bool operator==(const TagLabel &) const = default;
};

class LexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n-slot lexemes: "3" (abs), "-2" (rel), "*1" or "-1" (dyn), "lR" (4tg).
std::string FormatCount(const TagLabel &label, Scheme scheme);
// Throws LexError if |text| is not a valid n-slot under |scheme|.
TagLabel ParseCount(std::string_view text, Scheme scheme);

// Slot text with the empty slot rendered as "-".
std::string FormatSlot(std::string_view slot);
std::string ParseSlot(std::string_view text);

// "n|c|u".
std::string FormatCombined(const TagLabel &label, Scheme scheme);
// Throws LexError on malformed input.
TagLabel ParseCombined(std::string_view text, Scheme scheme);

// Human readable "(n, c, u)".
std::string ToString(const TagLabel &label, Scheme scheme);

}  // namespace nnerlin

#endif  // NNERLIN_TAG_LABEL_H_
