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

// JSON encodings of morphisms, verdicts, search reports and decompositions.
// Words are encoded as strings in the requested symbol mode.

#ifndef KPF_JSON_IO_HPP_
#define KPF_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "kpf/decide.hpp"
#include "kpf/decomp.hpp"
#include "kpf/morphisms.hpp"
#include "kpf/oracle.hpp"

namespace kpf {

  using json = nlohmann::json;

  //! {"alphabet": [...], "image_alphabet": [...], "rules": {token: image}}
  json     morphism_to_json(Morphism const& f, SymbolMode mode = SymbolMode::chars);
  //! image_alphabet is optional and inferred like the text format.
  Morphism morphism_from_json(json const& j, SymbolMode mode = SymbolMode::chars);

  //! {"k_power_free", "witness": {"word", "root", "exponent", "start"} | null,
  //!  "words_checked", "mode"}
  json    verdict_to_json(Verdict const& v, SymbolMode mode = SymbolMode::chars);
  Verdict verdict_from_json(json const&     j,
                            Morphism const& f,
                            SymbolMode      mode = SymbolMode::chars);

  json search_to_json(SearchReport const& r, SymbolMode mode = SymbolMode::chars);
  json cover_to_json(DirectCover const& c, SymbolMode mode = SymbolMode::chars);
  json decomposition_to_json(Decomposition const& d, SymbolMode mode = SymbolMode::chars);
  json trace_to_json(ReductionTrace const& t, SymbolMode mode = SymbolMode::chars);

  //! Reads a morphism file: `.json` as JSON, anything else as rule text.
  Morphism load_morphism(std::string const& path, SymbolMode mode = SymbolMode::chars);

}  // namespace kpf

#endif  // KPF_JSON_IO_HPP_
