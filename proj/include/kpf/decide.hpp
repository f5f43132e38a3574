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

// Decision procedure for k-power-freeness of uniform morphisms: a uniform
// morphism is k-power-free iff the images of its finite test-set are.

#ifndef KPF_DECIDE_HPP_
#define KPF_DECIDE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "kpf/morphisms.hpp"
#include "kpf/words.hpp"

namespace kpf {

  enum class DecideMode {
    testset,     // the test-set T (k >= 3)
    corollary,   // every k-power-free word up to k * card(A) + k + 1 (k >= 3)
    classic_k2,  // square-free words of length <= 3 (k = 2)
  };

  std::string_view          to_string(DecideMode mode) noexcept;
  std::optional<DecideMode> parse_mode(std::string_view name) noexcept;
  DecideMode                default_mode(unsigned k) noexcept;

  //! A k-power-free word whose image contains a k-power.
  struct Witness {
    Word         test_word;
    PowerWitness image_power;
  };

  struct Verdict {
    bool                   k_power_free = true;
    std::optional<Witness> witness;
    //! Test words whose images were scanned, including a failing one.
    std::size_t            words_checked = 0;
    DecideMode             mode          = DecideMode::testset;
  };

  //! Streams the mode's test words, scanning each image for a k-power and
  //! stopping at the first one. The reported witness is the first failing
  //! test word in enumeration order regardless of \p threads. Throws
  //! Errc::not_uniform for non-uniform morphisms and Errc::invalid_k when k
  //! does not suit the mode.
  Verdict decide(Morphism const& f, unsigned k, DecideMode mode, unsigned threads = 1);

  inline Verdict decide(Morphism const& f, unsigned k) {
    return decide(f, k, default_mode(k));
  }

  //! Re-checks a negative verdict from scratch: the test word is over the
  //! domain and k-power-free, and its image holds root^k at the stated
  //! position.
  bool verify_witness(Morphism const& f, unsigned k, Verdict const& verdict);

}  // namespace kpf

#endif  // KPF_DECIDE_HPP_
