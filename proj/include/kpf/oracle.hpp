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

// Ground truth for the decision procedure: exhaustive counterexample search
// and seeded morphism families for agreement sweeps.

#ifndef KPF_ORACLE_HPP_
#define KPF_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kpf/decide.hpp"
#include "kpf/morphisms.hpp"

namespace kpf {

  struct SearchReport {
    std::optional<Witness> counterexample;
    std::size_t            words_scanned = 0;
    std::size_t            max_len       = 0;
  };

  //! First k-power-free word of length <= max_len (by length, then
  //! lexicographically) whose image contains a k-power. Runs an iterative
  //! deepening search that re-checks only the image suffix contributed by
  //! the last letter; shares no code with decide() beyond apply.
  SearchReport brute_force_search(Morphism const& f, unsigned k, std::size_t max_len);

  //! Each image drawn uniformly from image^L; deterministic in \p seed.
  Morphism random_uniform_morphism(AlphabetPtr   domain,
                                   AlphabetPtr   image,
                                   std::size_t   length,
                                   std::uint64_t seed);

  //! Calls \p visit on all card(image)^(L * card(domain)) L-uniform
  //! morphisms, in odometer order over the concatenated images.
  void for_each_uniform_morphism(AlphabetPtr const&                    domain,
                                 AlphabetPtr const&                    image,
                                 std::size_t                           length,
                                 std::function<void(Morphism const&)> const& visit);

  struct SweepFamily {
    std::size_t   domain_size = 2;
    std::size_t   image_size  = 2;
    std::size_t   length      = 1;
    bool          exhaustive  = true;
    std::size_t   samples     = 0;
    std::uint64_t seed        = 0;
  };

  struct Disagreement {
    Morphism     f;
    Verdict      verdict;
    SearchReport search;
  };

  struct SweepReport {
    std::size_t               morphisms    = 0;
    std::size_t               k_power_free = 0;
    std::vector<Disagreement> disagreements;
  };

  //! Compares decide() against brute_force_search() at the test-set bound
  //! on every morphism of the family. k = 2 uses the classic mode.
  SweepReport agreement_sweep(SweepFamily const& family, unsigned k, unsigned threads = 1);

}  // namespace kpf

#endif  // KPF_ORACLE_HPP_
