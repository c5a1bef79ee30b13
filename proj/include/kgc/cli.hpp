// Copyright 2026 The kgc Authors
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

#ifndef KGC_CLI_HPP_
#define KGC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kgc::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,  // bad flags, unreadable or invalid graph, failed verification
    kCapExceeded = 2,   // a resource cap refused the instance
};

/// Runs one command line (args[0] is the program name). Machine output goes to `out`
/// (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kgc::cli

#endif // KGC_CLI_HPP_
