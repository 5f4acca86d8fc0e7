// Copyright 2026 The steadydim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef STEADYDIM_TOOLS_CLI_H_
#define STEADYDIM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace steadydim::cli {

enum ExitCode : int {
  kOk = 0,
  kUserError = 1,  // unreadable input, parse error, bad flags
  kInternalError = 2,
};

/// Runs the command line "steadydim <args...>" (args excludes argv[0]).
/// Reads STEADYDIM_SEED when --seed is not given.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steadydim::cli

#endif  // STEADYDIM_TOOLS_CLI_H_
