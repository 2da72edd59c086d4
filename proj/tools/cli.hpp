// Copyright 2026 The pargame Authors.
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

#ifndef PARGAME_TOOLS_CLI_HPP_
#define PARGAME_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pargame {

// Entry point of the command-line tool, callable in-process for tests.
// `args` excludes the program name. Exit codes: 0 on success (whatever the
// verdict), 2 on input errors, 3 on timeouts or capacity limits.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace pargame

#endif  // PARGAME_TOOLS_CLI_HPP_
