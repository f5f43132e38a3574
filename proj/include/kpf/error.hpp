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

#ifndef KPF_ERROR_HPP_
#define KPF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpf {

  enum class Errc {
    index_out_of_range,
    empty_pattern,
    empty_word,
    alphabet_mismatch,
    unknown_symbol,
    duplicate_symbol,
    not_uniform,
    zero_length,
    not_injective,
    invalid_k,
    syntax,
    duplicate_rule,
    empty_rule_set,
    word_too_short,
    no_candidate,
    internal_consistency,
    io,
  };

  std::string_view to_string(Errc code) noexcept;

  //! Every error raised by the library. The code identifies the failure
  //! class; what() carries a one-line human readable diagnostic.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& message)
        : std::runtime_error(message), _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

  [[noreturn]] inline void fail(Errc code, std::string const& message) {
    throw Error(code, message);
  }

}  // namespace kpf

#endif  // KPF_ERROR_HPP_
