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

#ifndef KPF_TESTS_SUPPORT_HPP_
#define KPF_TESTS_SUPPORT_HPP_

#include <optional>
#include <string>

#include "kpf/error.hpp"
#include "kpf/json_io.hpp"
#include "kpf/morphisms.hpp"
#include "kpf/words.hpp"

namespace kpf::testing {

  //! The error code thrown by fn, or nothing if it returns normally.
  template <typename F>
  std::optional<Errc> thrown(F&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

  inline Morphism data_morphism(std::string const& name) {
    return load_morphism(std::string(KPF_DATA_DIR) + "/" + name);
  }

  inline Word over(Morphism const& f, std::string const& s) {
    return Word::parse(f.domain(), s);
  }

  inline Word img(Morphism const& f, std::string const& s) {
    return Word::parse(f.image_alphabet(), s);
  }

}  // namespace kpf::testing

#endif  // KPF_TESTS_SUPPORT_HPP_
