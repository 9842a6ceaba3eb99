// Copyright 2026 The spaths Authors.
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


#ifndef SPATHS_CLI_H_
#define SPATHS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace spaths {

// Runs one command line (without the program name). Returns the process exit
// status; results go to `out`, diagnostics and usage to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace spaths

#endif  // SPATHS_CLI_H_
