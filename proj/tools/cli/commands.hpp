// Copyright 2026 The cvsep Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvsep::cli {

/// Process exit codes. Scripts can branch on 3 to detect entanglement.
enum ExitCode : int {
  kExitOk = 0,          // physical / not detected / success
  kExitUsage = 1,       // usage, I/O or parse error
  kExitUnphysical = 2,  // state violates the uncertainty relations
  kExitEntangled = 3,   // partial scaling found a violation
};

/// Runs the command line `args` (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvsep::cli
