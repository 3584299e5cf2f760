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

#ifndef NNERLIN_SENTENCE_H_
#define NNERLIN_SENTENCE_H_

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nnerlin {

// Symbol of the synthetic root node. Never a valid entity type.
inline constexpr std::string_view kRootLabel = "S";

// Joins the labels of a collapsed unary chain, outermost first.
inline constexpr char kUnaryJoin = '+';

// Suffix of intermediate nodes introduced by binarization.
inline constexpr char kPrimeMarker = '\'';

// Marker for an empty label slot in tag files.
inline constexpr std::string_view kEmptySlot = "-";

// A typed entity over tokens [start, end).
struct EntitySpan {
  int start = 0;
  int end = 0;
  std::string type;

  int length() const { return end - start; }

  // True if this span contains |other| (boundaries may coincide).
  bool Contains(const EntitySpan &other) const {
    return start <= other.start && other.end <= end;
  }
  bool SameBoundaries(const EntitySpan &other) const {
    return start == other.start && end == other.end;
  }
  // Spans overlap without one containing the other.
  bool Crosses(const EntitySpan &other) const {
    return start < other.end && other.start < end && !Contains(other) &&
           !other.Contains(*this);
  }

  bool operator==(const EntitySpan &) const = default;
};

// Canonical entity order: start ascending, end descending, then type.
bool CanonicalLess(const EntitySpan &a, const EntitySpan &b);

std::string ToString(const EntitySpan &span);
inline std::ostream &operator<<(std::ostream &out, const EntitySpan &span) {
  return out << ToString(span);
}

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<EntitySpan> entities;

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence &) const = default;
};

// Returns a copy with entities sorted canonically and duplicates removed.
Sentence Canonicalize(Sentence sentence);
void SortCanonical(std::vector<EntitySpan> *entities);

// Thrown when a sentence violates its invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Character-level checks shared by the readers.
bool IsValidToken(std::string_view token);
bool IsValidEntityType(std::string_view type);

// Checks every Sentence invariant: non-empty valid tokens, in-bounds
// non-empty spans with valid types, no duplicates and no crossing pairs.
// Throws ValidationError naming the first violation.
void ValidateSentence(const Sentence &sentence);

}  // namespace nnerlin

#endif  // NNERLIN_SENTENCE_H_
