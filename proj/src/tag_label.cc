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

#include "nnerlin/tag_label.h"

#include <charconv>

#include "nnerlin/sentence.h"

namespace nnerlin {
namespace {

std::optional<int> ParseInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // from_chars accepts a leading '-' but not '+'.
  int value = 0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

LexError BadCount(std::string_view text, Scheme scheme) {
  return LexError("invalid n-slot '" + std::string(text) + "' for scheme " +
                  std::string(SchemeName(scheme)));
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kAbsolute:
      return "abs";
    case Scheme::kRelative:
      return "rel";
    case Scheme::kDynamic:
      return "dyn";
    case Scheme::kTetra:
      return "4tg";
  }
  return "?";
}

std::optional<Scheme> SchemeFromName(std::string_view name) {
  if (name == "abs") return Scheme::kAbsolute;
  if (name == "rel") return Scheme::kRelative;
  if (name == "dyn") return Scheme::kDynamic;
  if (name == "4tg") return Scheme::kTetra;
  return std::nullopt;
}

std::string FormatCount(const TagLabel &label, Scheme scheme) {
  switch (scheme) {
    case Scheme::kAbsolute:
    case Scheme::kRelative:
      return std::to_string(label.value);
    case Scheme::kDynamic:
      return (label.absolute ? "*" : "") + std::to_string(label.value);
    case Scheme::kTetra: {
      std::string out(1, label.word_tag);
      if (label.fence_tag != 0) out += label.fence_tag;
      return out;
    }
  }
  return "";
}

TagLabel ParseCount(std::string_view text, Scheme scheme) {
  TagLabel label;
  switch (scheme) {
    case Scheme::kAbsolute: {
      if (text.empty() || text[0] == '-') throw BadCount(text, scheme);
      auto value = ParseInt(text);
      if (!value || *value < 1) throw BadCount(text, scheme);
      label.value = *value;
      break;
    }
    case Scheme::kRelative: {
      auto value = ParseInt(text);
      if (!value) throw BadCount(text, scheme);
      label.value = *value;
      break;
    }
    case Scheme::kDynamic: {
      if (!text.empty() && text[0] == '*') {
        text.remove_prefix(1);
        if (text.empty() || text[0] == '-') throw BadCount(text, scheme);
        auto value = ParseInt(text);
        if (!value || *value < 1) throw BadCount(text, scheme);
        label.value = *value;
        label.absolute = true;
      } else {
        auto value = ParseInt(text);
        if (!value) throw BadCount(text, scheme);
        label.value = *value;
      }
      break;
    }
    case Scheme::kTetra: {
      if (text.empty() || text.size() > 2) throw BadCount(text, scheme);
      if (text[0] != 'l' && text[0] != 'r') throw BadCount(text, scheme);
      label.word_tag = text[0];
      if (text.size() == 2) {
        if (text[1] != 'L' && text[1] != 'R') throw BadCount(text, scheme);
        label.fence_tag = text[1];
      }
      break;
    }
  }
  return label;
}

std::string FormatSlot(std::string_view slot) {
  return slot.empty() ? std::string(kEmptySlot) : std::string(slot);
}

std::string ParseSlot(std::string_view text) {
  return text == kEmptySlot ? std::string() : std::string(text);
}

std::string FormatCombined(const TagLabel &label, Scheme scheme) {
  return FormatCount(label, scheme) + "|" + FormatSlot(label.nonterminal) +
         "|" + FormatSlot(label.unary);
}

TagLabel ParseCombined(std::string_view text, Scheme scheme) {
  size_t first = text.find('|');
  size_t second =
      first == std::string_view::npos ? first : text.find('|', first + 1);
  if (second == std::string_view::npos ||
      text.find('|', second + 1) != std::string_view::npos) {
    throw LexError("combined label must have three '|'-separated slots: '" +
                   std::string(text) + "'");
  }
  std::string_view n = text.substr(0, first);
  std::string_view c = text.substr(first + 1, second - first - 1);
  std::string_view u = text.substr(second + 1);
  if (c.empty() || u.empty()) {
    throw LexError("empty slot in combined label '" + std::string(text) + "'");
  }
  TagLabel label = ParseCount(n, scheme);
  label.nonterminal = ParseSlot(c);
  label.unary = ParseSlot(u);
  return label;
}

std::string ToString(const TagLabel &label, Scheme scheme) {
  return "(" + FormatCount(label, scheme) + ", " +
         FormatSlot(label.nonterminal) + ", " + FormatSlot(label.unary) + ")";
}

}  // namespace nnerlin
