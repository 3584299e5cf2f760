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

#ifndef NNERLIN_ENCODINGS_H_
#define NNERLIN_ENCODINGS_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "nnerlin/tag_label.h"
#include "nnerlin/tree.h"

namespace nnerlin {

// Largest absolute value the dynamic encoding switches to.
inline constexpr int kDynamicAbsoluteLimit = 3;
// The dynamic encoding switches when the relative value drops to this or
// lower.
inline constexpr int kDynamicDropTrigger = -2;

enum class DecodeMode {
  kStrict,  // throw DecodeError at the first ill-formed position
  kRepair,  // apply the repair heuristics; never fails
};

class DecodeError : public std::runtime_error {
 public:
  DecodeError(int position, const std::string &reason)
      : std::runtime_error("position " + std::to_string(position) + ": " +
                           reason),
        position_(position),
        reason_(reason) {}
  // 0-based token index.
  int position() const { return position_; }
  const std::string &reason() const { return reason_; }

 private:
  int position_;
  std::string reason_;
};

// Linearizes |tree| into exactly one label per token.
std::vector<TagLabel> Encode(const ConstTree &tree, Scheme scheme);

// Rebuilds a tree over |tokens| from |labels|. The result is unary-expanded,
// free of prime-marked and unlabeled nodes, and rooted in "S".
ConstTree Decode(const std::vector<TagLabel> &labels,
                 const std::vector<std::string> &tokens, Scheme scheme,
                 DecodeMode mode = DecodeMode::kRepair);

// The dynamic-encoding switch condition.
inline bool DynamicUsesAbsolute(int relative, int absolute) {
  return relative <= kDynamicDropTrigger && absolute <= kDynamicAbsoluteLimit;
}

}  // namespace nnerlin

#endif  // NNERLIN_ENCODINGS_H_
