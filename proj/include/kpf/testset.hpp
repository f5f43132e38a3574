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

// Lazy enumeration of k-power-free words and of the finite test-set
//   T = U  ∪  (k-power-free words that split as a0 w1 a1 ... wk ak)
// where U holds the k-power-free words of length at most k + 1 and the
// blocks wi have pairwise lengths within one and no repeated letter.

#ifndef KPF_TESTSET_HPP_
#define KPF_TESTSET_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kpf/words.hpp"

namespace kpf {

  //! k * card(A) + k + 1, the longest test word.
  std::size_t testset_bound(std::size_t alphabet_size, unsigned k);

  struct TestSetSpec {
    AlphabetPtr alphabet;
    unsigned    k;
    std::size_t max_length;

    static TestSetSpec make(AlphabetPtr alphabet, unsigned k);
  };

  //! Streams the k-power-free words with min_len <= |w| <= max_len, by
  //! increasing length and lexicographically (alphabet order) within one
  //! length. Each length is produced by a depth-first search that only checks
  //! the k-powers ending at the newly appended letter.
  class PowerFreeWords {
   public:
    using Filter = std::function<bool(std::span<Letter const>)>;

    PowerFreeWords(AlphabetPtr alphabet,
                   unsigned    k,
                   std::size_t max_len,
                   std::size_t min_len = 1);

    //! Only words accepted by \p filter are emitted; the search itself still
    //! covers every k-power-free word.
    PowerFreeWords& filter(Filter filter) {
      _filter = std::move(filter);
      return *this;
    }

    //! Advances to the next word; false once the stream is exhausted.
    bool next();

    std::span<Letter const> current() const noexcept {
      return _buf;
    }
    Word word() const {
      return Word(_alphabet, _buf);
    }
    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

   private:
    bool settle();
    bool bump();

    AlphabetPtr         _alphabet;
    unsigned            _k;
    std::size_t         _max_len;
    std::size_t         _length;
    bool                _fresh = true;
    std::vector<Letter> _buf;
    Filter              _filter;
  };

  std::vector<Word> enumerate_k_power_free(AlphabetPtr alphabet,
                                           unsigned    k,
                                           std::size_t max_len);

  //! U: the k-power-free words of length 1 .. k + 1.
  PowerFreeWords    u_words(AlphabetPtr alphabet, unsigned k);
  std::vector<Word> enumerate_U(AlphabetPtr alphabet, unsigned k);

  //! T, each word once, by length then lexicographically.
  PowerFreeWords    testset_words(AlphabetPtr alphabet, unsigned k);
  std::vector<Word> enumerate_T(AlphabetPtr alphabet, unsigned k);

  //! w = a0 w1 a1 ... w_k a_k.
  struct BlockSplit {
    std::vector<Letter> letters;  // a0 .. ak
    std::vector<Word>   blocks;   // w1 .. wk
  };

  //! Membership in V. On success returns the split whose block-length vector
  //! is lexicographically least.
  std::optional<BlockSplit> in_V(Word const& w, unsigned k);
  bool                      in_V(std::span<Letter const> w, unsigned k);

}  // namespace kpf

#endif  // KPF_TESTSET_HPP_
