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

#include <algorithm>
#include <utility>

#include "kpf/testset.hpp"

namespace kpf {

  namespace {
    void require_testset_k(unsigned k) {
      if (k < 3) {
        fail(Errc::invalid_k,
             "the test-set is defined for k >= 3, got " + std::to_string(k));
      }
    }

    bool distinct_letters(std::span<Letter const> block) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          if (block[i] == block[j]) {
            return false;
          }
        }
      }
      return true;
    }

    // Calls visit(lengths) for each admissible block-length vector in
    // lexicographic order until it returns true.
    template <typename Visit>
    bool for_each_length_pattern(std::size_t n, unsigned k, Visit&& visit) {
      if (n < k + 1) {
        return false;
      }
      std::size_t const m = n - (k + 1);
      std::size_t const q = m / k;
      std::size_t const r = m % k;
      std::vector<std::size_t> extra(k, 0);
      std::fill(extra.end() - static_cast<std::ptrdiff_t>(r), extra.end(), 1);
      std::vector<std::size_t> lengths(k);
      do {
        for (unsigned i = 0; i < k; ++i) {
          lengths[i] = q + extra[i];
        }
        if (visit(lengths)) {
          return true;
        }
      } while (std::next_permutation(extra.begin(), extra.end()));
      return false;
    }

    bool blocks_ok(std::span<Letter const> w, std::vector<std::size_t> const& lengths) {
      std::size_t pos = 1;
      for (auto len : lengths) {
        if (!distinct_letters(w.subspan(pos, len))) {
          return false;
        }
        pos += len + 1;
      }
      return true;
    }
  }  // namespace

  std::size_t testset_bound(std::size_t alphabet_size, unsigned k) {
    return k * alphabet_size + k + 1;
  }

  TestSetSpec TestSetSpec::make(AlphabetPtr alphabet, unsigned k) {
    require_testset_k(k);
    auto bound = testset_bound(alphabet->size(), k);
    return {std::move(alphabet), k, bound};
  }

  ////////////////////////////////////////////////////////////////////////
  // PowerFreeWords
  ////////////////////////////////////////////////////////////////////////

  PowerFreeWords::PowerFreeWords(AlphabetPtr alphabet,
                                 unsigned    k,
                                 std::size_t max_len,
                                 std::size_t min_len)
      : _alphabet(std::move(alphabet)),
        _k(k),
        _max_len(max_len),
        _length(std::max<std::size_t>(min_len, 1)) {
    if (k < 2) {
      fail(Errc::invalid_k, "exponent must be at least 2, got " + std::to_string(k));
    }
    if (!_alphabet) {
      fail(Errc::alphabet_mismatch, "enumeration needs an alphabet");
    }
    _buf.reserve(max_len);
  }

  // Increments the last letter, dropping exhausted positions. The new last
  // letter has not been validated yet.
  bool PowerFreeWords::bump() {
    auto const q = static_cast<Letter>(_alphabet->size());
    while (!_buf.empty()) {
      if (_buf.back() + 1 < q) {
        ++_buf.back();
        return true;
      }
      _buf.pop_back();
    }
    return false;
  }

  // From a buffer whose proper prefix is k-power-free, moves to the least
  // k-power-free word of the target length at or after it.
  bool PowerFreeWords::settle() {
    while (!_buf.empty()) {
      if (has_k_power_suffix(_buf, _k)) {
        if (!bump()) {
          return false;
        }
      } else if (_buf.size() == _length) {
        return true;
      } else {
        _buf.push_back(0);
      }
    }
    return false;
  }

  bool PowerFreeWords::next() {
    if (_alphabet->size() == 0) {
      return false;
    }
    while (_length <= _max_len) {
      bool found;
      if (_fresh) {
        _fresh = false;
        _buf.assign(1, 0);
        found = settle();
      } else {
        found = bump() && settle();
      }
      if (!found) {
        ++_length;
        _fresh = true;
        continue;
      }
      if (!_filter || _filter(_buf)) {
        return true;
      }
    }
    _buf.clear();
    return false;
  }

  std::vector<Word> enumerate_k_power_free(AlphabetPtr alphabet,
                                           unsigned    k,
                                           std::size_t max_len) {
    std::vector<Word> out;
    PowerFreeWords    gen(std::move(alphabet), k, max_len);
    while (gen.next()) {
      out.push_back(gen.word());
    }
    return out;
  }

  PowerFreeWords u_words(AlphabetPtr alphabet, unsigned k) {
    require_testset_k(k);
    return PowerFreeWords(std::move(alphabet), k, k + 1);
  }

  std::vector<Word> enumerate_U(AlphabetPtr alphabet, unsigned k) {
    std::vector<Word> out;
    auto              gen = u_words(std::move(alphabet), k);
    while (gen.next()) {
      out.push_back(gen.word());
    }
    return out;
  }

  PowerFreeWords testset_words(AlphabetPtr alphabet, unsigned k) {
    auto spec = TestSetSpec::make(std::move(alphabet), k);
    PowerFreeWords gen(spec.alphabet, k, spec.max_length);
    gen.filter([k](std::span<Letter const> w) {
      return w.size() <= k + 1 || in_V(w, k);
    });
    return gen;
  }

  std::vector<Word> enumerate_T(AlphabetPtr alphabet, unsigned k) {
    std::vector<Word> out;
    auto              gen = testset_words(std::move(alphabet), k);
    while (gen.next()) {
      out.push_back(gen.word());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // V membership
  ////////////////////////////////////////////////////////////////////////

  bool in_V(std::span<Letter const> w, unsigned k) {
    require_testset_k(k);
    return for_each_length_pattern(
        w.size(), k, [&](auto const& lengths) { return blocks_ok(w, lengths); });
  }

  std::optional<BlockSplit> in_V(Word const& w, unsigned k) {
    require_testset_k(k);
    std::optional<BlockSplit> out;
    for_each_length_pattern(w.size(), k, [&](auto const& lengths) {
      if (!blocks_ok(w.view(), lengths)) {
        return false;
      }
      BlockSplit  split;
      std::size_t pos = 0;
      split.letters.push_back(w[pos++]);
      for (auto len : lengths) {
        split.blocks.push_back(w.sub(pos, len));
        pos += len;
        split.letters.push_back(w[pos++]);
      }
      out = std::move(split);
      return true;
    });
    return out;
  }

}  // namespace kpf
