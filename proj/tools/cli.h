// Copyright 2026 The bikit Authors.
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

#ifndef BIKIT_TOOLS_CLI_H_
#define BIKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace bikit::cli {

// Runs the bikit command line. args excludes the program name. Returns the
// process exit status: 0 success, 1 runtime error, 2 usage error.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bikit::cli

#endif  // BIKIT_TOOLS_CLI_H_
