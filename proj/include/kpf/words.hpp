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

// Alphabets, words over them, and the word-level combinatorics used by the
// rest of the library: factors, occurrence counts, k-power detection,
// primitive roots and the classical conjugacy / internal-factor lemmas.

#ifndef KPF_WORDS_HPP_
#define KPF_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpf/error.hpp"

namespace kpf {

  //! Index of a symbol inside its Alphabet.
  using Letter = std::uint32_t;

  //! How words are written as text: one character per symbol, or
  //! whitespace-separated tokens (for multi-character symbols).
  enum class SymbolMode { chars, tokens };

  //! Ordered finite set of distinct symbols.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> symbols);

    //! One single-character symbol per character of \p chars.
    static std::shared_ptr<Alphabet const> from_chars(std::string_view chars);
    //! The first \p n letters a, b, c, ...; falls back to a0, a1, ... past z.
    static std::shared_ptr<Alphabet const> first_letters(std::size_t n);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    std::string const& symbol(Letter x) const;
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    std::optional<Letter> find(std::string_view symbol) const;
    //! Throws Errc::unknown_symbol when absent.
    Letter index(std::string_view symbol) const;
    //! True iff every symbol is exactly one character long.
    bool single_chars() const noexcept {
      return _single_chars;
    }

    bool operator==(Alphabet const& other) const noexcept {
      return _symbols == other._symbols;
    }

   private:
    std::vector<std::string>                _symbols;
    std::unordered_map<std::string, Letter> _index;
    bool                                    _single_chars = true;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  //! Both null, same object, or equal symbol lists.
  bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) noexcept;

  //! A finite word over an explicit alphabet. Value type; comparing words
  //! over different alphabets throws Errc::alphabet_mismatch.
  class Word {
   public:
    //! Empty word not bound to any alphabet (placeholder).
    Word() = default;
    explicit Word(AlphabetPtr alphabet, std::vector<Letter> letters = {});

    static Word parse(AlphabetPtr       alphabet,
                      std::string_view  text,
                      SymbolMode        mode = SymbolMode::chars);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::span<Letter const> view() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    //! 0-based substring [pos, pos + len).
    Word sub(std::size_t pos, std::size_t len) const;
    Word pow(std::size_t n) const;

    Word& operator+=(Word const& other);
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    bool operator==(Word const& other) const;

    //! Concatenated characters, or space-separated tokens. Chars mode falls
    //! back to tokens when the alphabet has multi-character symbols.
    std::string str(SymbolMode mode = SymbolMode::chars) const;

   private:
    AlphabetPtr         _alphabet;
    std::vector<Letter> _letters;
  };

  void check_same_alphabet(Word const& x, Word const& y);

  //! u^exponent occurring at 1-based position start of the scanned word.
  struct PowerWitness {
    Word        root;
    unsigned    exponent = 0;
    std::size_t start    = 0;
  };

  //! The factor w[i..j] with 1-based i, requiring 0 <= i-1 <= j <= |w|.
  Word factor(Word const& w, std::size_t i, std::size_t j);

  //! |w|_u: the number of positions where u occurs in w.
  std::size_t occurrences(Word const& w, Word const& u);

  //! Leftmost k-power in the letters, shortest root on ties. Returns the
  //! 0-based start and the period.
  struct PowerSpan {
    std::size_t start;
    std::size_t period;
  };
  std::optional<PowerSpan> find_k_power(std::span<Letter const> w, unsigned k);

  std::optional<PowerWitness> find_k_power(Word const& w, unsigned k);
  bool is_k_power_free(Word const& w, unsigned k);
  bool is_k_power_free(std::span<Letter const> w, unsigned k);

  //! True iff some k-power ends exactly at the last letter of w.
  bool has_k_power_suffix(std::span<Letter const> w, unsigned k);

  //! True iff some k-power ends at one of the last \p tail letters of w.
  bool has_k_power_ending_within(std::span<Letter const> w,
                                 unsigned                k,
                                 std::size_t             tail);

  struct PrimitiveRoot {
    Word        root;
    std::size_t exponent;
  };
  //! Shortest t and largest n with w = t^n.
  PrimitiveRoot primitive_root(Word const& w);
  bool          is_primitive(Word const& w);

  struct Conjugacy {
    Word        r;
    Word        s;
    std::size_t n;
  };
  //! If vu = uw, the decomposition u = r(sr)^n, v = rs, w = sr with the
  //! least n (equivalently the longest r).
  std::optional<Conjugacy> solve_conjugacy(Word const& u,
                                           Word const& v,
                                           Word const& w);

  struct InternalFactor {
    Word        t;
    std::size_t i;
    std::size_t j;
  };
  //! If vv = xvy, the primitive t with x = t^i, y = t^j and v = t^(i+j).
  std::optional<InternalFactor> internal_factor_root(Word const& v,
                                                     Word const& x,
                                                     Word const& y);

  //! |x| + |y| - gcd(|x|, |y|).
  std::size_t fine_wilf_bound(Word const& x, Word const& y);

}  // namespace kpf

#endif  // KPF_WORDS_HPP_
