// Copyright 2026 The kpf Authors
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

#ifndef KPF_CLI_HPP_
#define KPF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace kpf::cli {

  //! Exit codes shared by every subcommand.
  enum Exit : int {
    positive = 0,  // success, or k-power-free
    negative = 1,  // a k-power or counterexample was found
    usage    = 2,  // usage or input error
  };

  //! Runs the command line \p args (without the program name).
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          std::istream&                   in);

}  // namespace kpf::cli

#endif  // KPF_CLI_HPP_
