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

#ifndef KPF_TEXT_HPP_
#define KPF_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kpf/words.hpp"

namespace kpf::text {

  //! Splits UTF-8 text into code points.
  std::vector<std::string> split_code_points(std::string_view s);
  std::vector<std::string> split_tokens(std::string_view s);
  std::vector<std::string> split_symbols(std::string_view s, SymbolMode mode);
  std::string_view         trim(std::string_view s);

}  // namespace kpf::text

#endif  // KPF_TEXT_HPP_
