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

#include "nnerlin/sentence.h"

#include <algorithm>
#include <tuple>

namespace nnerlin {

bool CanonicalLess(const EntitySpan &a, const EntitySpan &b) {
  return std::tie(a.start, b.end, a.type) < std::tie(b.start, a.end, b.type);
}

std::string ToString(const EntitySpan &span) {
  return span.type + "[" + std::to_string(span.start) + "," +
         std::to_string(span.end) + ")";
}

void SortCanonical(std::vector<EntitySpan> *entities) {
  std::sort(entities->begin(), entities->end(), CanonicalLess);
  entities->erase(std::unique(entities->begin(), entities->end()),
                  entities->end());
}

Sentence Canonicalize(Sentence sentence) {
  SortCanonical(&sentence.entities);
  return sentence;
}

bool IsValidToken(std::string_view token) {
  return !token.empty() && token.find_first_of("\t\n\r") == std::string::npos;
}

bool IsValidEntityType(std::string_view type) {
  if (type.empty() || type == kRootLabel || type == kEmptySlot) return false;
  return type.find_first_of("\t\n\r|+'") == std::string::npos;
}

void ValidateSentence(const Sentence &sentence) {
  if (sentence.tokens.empty()) throw ValidationError("sentence has no tokens");
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!IsValidToken(sentence.tokens[i])) {
      throw ValidationError("invalid token at index " + std::to_string(i));
    }
  }
  const auto &entities = sentence.entities;
  for (size_t i = 0; i < entities.size(); ++i) {
    const EntitySpan &e = entities[i];
    if (e.start < 0 || e.end > sentence.size() || e.start >= e.end) {
      throw ValidationError("span out of bounds: " + ToString(e));
    }
    if (!IsValidEntityType(e.type)) {
      throw ValidationError("invalid entity type: " + ToString(e));
    }
    for (size_t j = 0; j < i; ++j) {
      if (entities[j] == e) {
        throw ValidationError("duplicate entity: " + ToString(e));
      }
      if (entities[j].Crosses(e)) {
        throw ValidationError("crossing spans: " + ToString(entities[j]) +
                              " and " + ToString(e));
      }
    }
  }
}

}  // namespace nnerlin
