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

#include "kpf/text.hpp"
#include "kpf/words.hpp"

namespace kpf {

  std::string_view to_string(Errc code) noexcept {
    switch (code) {
      case Errc::index_out_of_range: return "index out of range";
      case Errc::empty_pattern: return "empty pattern";
      case Errc::empty_word: return "empty word";
      case Errc::alphabet_mismatch: return "alphabet mismatch";
      case Errc::unknown_symbol: return "unknown symbol";
      case Errc::duplicate_symbol: return "duplicate symbol";
      case Errc::not_uniform: return "morphism is not uniform";
      case Errc::zero_length: return "uniform length is zero";
      case Errc::not_injective: return "morphism is not injective";
      case Errc::invalid_k: return "invalid exponent";
      case Errc::syntax: return "syntax error";
      case Errc::duplicate_rule: return "duplicate rule";
      case Errc::empty_rule_set: return "empty rule set";
      case Errc::word_too_short: return "word too short";
      case Errc::no_candidate: return "no reduction candidate";
      case Errc::internal_consistency: return "internal consistency failure";
      case Errc::io: return "i/o error";
    }
    return "unknown error";
  }

  namespace text {
    std::vector<std::string> split_code_points(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        auto        lead = static_cast<unsigned char>(s[i]);
        std::size_t len  = 1;
        if (lead >= 0xF0) {
          len = 4;
        } else if (lead >= 0xE0) {
          len = 3;
        } else if (lead >= 0xC0) {
          len = 2;
        }
        len = std::min(len, s.size() - i);
        out.emplace_back(s.substr(i, len));
        i += len;
      }
      return out;
    }

    std::vector<std::string> split_tokens(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'
               || c == '\v';
      };
      while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) {
          ++j;
        }
        if (j > i) {
          out.emplace_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      auto first = s.find_first_not_of(" \t\r\n\f\v");
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(" \t\r\n\f\v");
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string> split_symbols(std::string_view s, SymbolMode mode) {
      return mode == SymbolMode::chars ? split_code_points(s) : split_tokens(s);
    }
  }  // namespace text

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    _index.reserve(_symbols.size());
    for (Letter x = 0; x < _symbols.size(); ++x) {
      auto const& sym = _symbols[x];
      if (sym.empty()) {
        fail(Errc::syntax, "alphabet symbols must be non-empty");
      }
      if (!_index.emplace(sym, x).second) {
        fail(Errc::duplicate_symbol, "duplicate alphabet symbol '" + sym + "'");
      }
      if (text::split_code_points(sym).size() != 1) {
        _single_chars = false;
      }
    }
  }

  AlphabetPtr Alphabet::from_chars(std::string_view chars) {
    return std::make_shared<Alphabet const>(text::split_code_points(chars));
  }

  AlphabetPtr Alphabet::first_letters(std::size_t n) {
    std::vector<std::string> symbols;
    symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (n <= 26) {
        symbols.emplace_back(1, static_cast<char>('a' + i));
      } else {
        symbols.push_back("a" + std::to_string(i));
      }
    }
    return std::make_shared<Alphabet const>(std::move(symbols));
  }

  std::string const& Alphabet::symbol(Letter x) const {
    if (x >= _symbols.size()) {
      fail(Errc::index_out_of_range,
           "letter index " + std::to_string(x) + " outside alphabet of size "
               + std::to_string(_symbols.size()));
    }
    return _symbols[x];
  }

  std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    auto it = _index.find(std::string(symbol));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter Alphabet::index(std::string_view symbol) const {
    auto x = find(symbol);
    if (!x) {
      fail(Errc::unknown_symbol,
           "unknown symbol '" + std::string(symbol) + "'");
    }
    return *x;
  }

  bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) noexcept {
    if (x == y) {
      return true;
    }
    if (!x || !y) {
      return false;
    }
    return *x == *y;
  }

}  // namespace kpf
