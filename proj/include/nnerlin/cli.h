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

#ifndef NNERLIN_CLI_H_
#define NNERLIN_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nnerlin/corpus_io.h"
#include "nnerlin/evaluation.h"
#include "nnerlin/tag_label.h"

namespace nnerlin {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,  // parse, validation, alignment or usage error
  kExitIo = 2,
  kExitStrictDecode = 3,
  kExitRoundtripMismatch = 4,
};

struct CliConfig {
  std::string subcommand;
  std::optional<Scheme> scheme;
  // "-" is the standard stream. stats accepts several inputs in coverage
  // mode.
  std::vector<std::string> inputs = {"-"};
  std::string output = "-";
  bool combined = false;
  bool strict = false;
  CrossingPolicy crossing = CrossingPolicy::kError;
  std::string gold;
  std::string pred;
  std::optional<Axis> by;
  std::string train;
  bool json = false;
  // 0 reads NNER_LIN_THREADS.
  int threads = 0;
};

// Standard streams, injectable for tests.
struct Streams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

int RunEncode(const CliConfig &config, const Streams &streams);
int RunDecode(const CliConfig &config, const Streams &streams);
int RunEval(const CliConfig &config, const Streams &streams);
int RunStats(const CliConfig &config, const Streams &streams);
int RunRoundtrip(const CliConfig &config, const Streams &streams);

// Parses the command line and dispatches. Returns the exit status.
int RunCli(int argc, const char *const *argv, const Streams &streams);

}  // namespace nnerlin

#endif  // NNERLIN_CLI_H_
