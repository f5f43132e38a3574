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
#include <numeric>
#include <utility>

#include "kpf/text.hpp"
#include "kpf/words.hpp"

namespace kpf {

  namespace {
    // w[from, from + len) has period p, i.e. w[j] == w[j + p] throughout.
    bool has_period(std::span<Letter const> w,
                    std::size_t             from,
                    std::size_t             len,
                    std::size_t             p) {
      for (std::size_t j = from; j + p < from + len; ++j) {
        if (w[j] != w[j + p]) {
          return false;
        }
      }
      return true;
    }

    // Some k-power ends exactly at position end (exclusive).
    bool power_ends_at(std::span<Letter const> w, unsigned k, std::size_t end) {
      for (std::size_t p = 1; p * k <= end; ++p) {
        std::size_t j  = end - 1;
        std::size_t lo = end - p * k;
        // Check backwards: w[j] == w[j - p] for j in [lo + p, end).
        bool ok = true;
        while (j >= lo + p) {
          if (w[j] != w[j - p]) {
            ok = false;
            break;
          }
          --j;
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    void check_k(unsigned k) {
      if (k < 2) {
        fail(Errc::invalid_k,
             "exponent must be at least 2, got " + std::to_string(k));
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
    if (!_alphabet) {
      if (!_letters.empty()) {
        fail(Errc::alphabet_mismatch, "non-empty word without an alphabet");
      }
      return;
    }
    for (Letter x : _letters) {
      if (x >= _alphabet->size()) {
        fail(Errc::index_out_of_range,
             "letter index " + std::to_string(x) + " outside alphabet of size "
                 + std::to_string(_alphabet->size()));
      }
    }
  }

  Word Word::parse(AlphabetPtr alphabet, std::string_view s, SymbolMode mode) {
    if (!alphabet) {
      fail(Errc::alphabet_mismatch, "cannot parse a word without an alphabet");
    }
    std::vector<Letter> letters;
    for (auto const& sym : text::split_symbols(s, mode)) {
      letters.push_back(alphabet->index(sym));
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  Word Word::sub(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) {
      fail(Errc::index_out_of_range, "substring outside word");
    }
    return Word(_alphabet,
                std::vector<Letter>(_letters.begin() + pos,
                                    _letters.begin() + pos + len));
  }

  Word Word::pow(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), _letters.begin(), _letters.end());
    }
    return Word(_alphabet, std::move(out));
  }

  Word& Word::operator+=(Word const& other) {
    if (!_alphabet && _letters.empty()) {
      _alphabet = other._alphabet;
    } else if (other._alphabet || !other.empty()) {
      check_same_alphabet(*this, other);
    }
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  bool Word::operator==(Word const& other) const {
    check_same_alphabet(*this, other);
    return _letters == other._letters;
  }

  std::string Word::str(SymbolMode mode) const {
    std::string out;
    bool tokens = mode == SymbolMode::tokens
                  || (_alphabet && !_alphabet->single_chars());
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (tokens && i != 0) {
        out += ' ';
      }
      out += _alphabet->symbol(_letters[i]);
    }
    return out;
  }

  void check_same_alphabet(Word const& x, Word const& y) {
    if (!same_alphabet(x.alphabet(), y.alphabet())) {
      fail(Errc::alphabet_mismatch, "words are over different alphabets");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Factors and occurrences
  ////////////////////////////////////////////////////////////////////////

  Word factor(Word const& w, std::size_t i, std::size_t j) {
    if (i < 1 || i - 1 > j || j > w.size()) {
      fail(Errc::index_out_of_range,
           "factor [" + std::to_string(i) + ".." + std::to_string(j)
               + "] outside word of length " + std::to_string(w.size()));
    }
    return w.sub(i - 1, j - (i - 1));
  }

  std::size_t occurrences(Word const& w, Word const& u) {
    if (u.empty()) {
      fail(Errc::empty_pattern, "occurrence count of the empty word");
    }
    check_same_alphabet(w, u);
    if (u.size() > w.size()) {
      return 0;
    }
    std::size_t count = 0;
    auto const& hay   = w.letters();
    auto const& pat   = u.letters();
    for (std::size_t i = 0; i + pat.size() <= hay.size(); ++i) {
      if (std::equal(pat.begin(), pat.end(), hay.begin() + i)) {
        ++count;
      }
    }
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // k-powers
  ////////////////////////////////////////////////////////////////////////

  std::optional<PowerSpan> find_k_power(std::span<Letter const> w, unsigned k) {
    check_k(k);
    std::size_t const n = w.size();
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t p = 1; start + p * k <= n; ++p) {
        if (has_period(w, start, p * k, p)) {
          return PowerSpan{start, p};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<PowerWitness> find_k_power(Word const& w, unsigned k) {
    auto hit = find_k_power(w.view(), k);
    if (!hit) {
      return std::nullopt;
    }
    return PowerWitness{w.sub(hit->start, hit->period), k, hit->start + 1};
  }

  bool is_k_power_free(std::span<Letter const> w, unsigned k) {
    return !find_k_power(w, k).has_value();
  }

  bool is_k_power_free(Word const& w, unsigned k) {
    return is_k_power_free(w.view(), k);
  }

  bool has_k_power_suffix(std::span<Letter const> w, unsigned k) {
    return power_ends_at(w, k, w.size());
  }

  bool has_k_power_ending_within(std::span<Letter const> w,
                                 unsigned                k,
                                 std::size_t             tail) {
    std::size_t const n = w.size();
    tail                = std::min(tail, n);
    for (std::size_t end = n - tail + 1; end <= n; ++end) {
      if (power_ends_at(w, k, end)) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitivity and the classical word equations
  ////////////////////////////////////////////////////////////////////////

  PrimitiveRoot primitive_root(Word const& w) {
    if (w.empty()) {
      fail(Errc::empty_word, "the empty word has no primitive root");
    }
    std::size_t const n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p == 0 && has_period(w.view(), 0, n, p)) {
        return {w.sub(0, p), n / p};
      }
    }
    return {w, 1};  // unreachable: p = n always qualifies
  }

  bool is_primitive(Word const& w) {
    return primitive_root(w).exponent == 1;
  }

  std::optional<Conjugacy> solve_conjugacy(Word const& u,
                                           Word const& v,
                                           Word const& w) {
    if (v.empty()) {
      fail(Errc::empty_word, "conjugacy equation needs a non-empty v");
    }
    check_same_alphabet(u, v);
    check_same_alphabet(u, w);
    if (v + u != u + w) {
      return std::nullopt;
    }
    // |u| = |r| + n|v|; scanning |r| downwards gives the least n first.
    for (std::size_t rlen = std::min(v.size(), u.size()) + 1; rlen-- > 0;) {
      if ((u.size() - rlen) % v.size() != 0) {
        continue;
      }
      std::size_t n = (u.size() - rlen) / v.size();
      Word        r = v.sub(0, rlen);
      Word        s = v.sub(rlen, v.size() - rlen);
      if (r + (s + r).pow(n) == u && s + r == w) {
        return Conjugacy{std::move(r), std::move(s), n};
      }
    }
    fail(Errc::internal_consistency,
         "vu = uw holds but no conjugacy decomposition was found");
  }

  std::optional<InternalFactor> internal_factor_root(Word const& v,
                                                     Word const& x,
                                                     Word const& y) {
    if (x.empty() || y.empty()) {
      fail(Errc::empty_word, "internal factor lemma needs non-empty x and y");
    }
    check_same_alphabet(v, x);
    check_same_alphabet(v, y);
    if (x.size() + y.size() != v.size() || v + v != x + v + y) {
      return std::nullopt;
    }
    auto [t, n] = primitive_root(v);
    if (x.size() % t.size() != 0 || y.size() % t.size() != 0) {
      fail(Errc::internal_consistency,
           "vv = xvy but x is not a power of the primitive root of v");
    }
    std::size_t i = x.size() / t.size();
    std::size_t j = y.size() / t.size();
    if (t.pow(i) != x || t.pow(j) != y || i + j != n) {
      fail(Errc::internal_consistency, "internal factor reconstruction failed");
    }
    return InternalFactor{std::move(t), i, j};
  }

  std::size_t fine_wilf_bound(Word const& x, Word const& y) {
    if (x.empty() || y.empty()) {
      fail(Errc::empty_word, "Fine-Wilf bound needs non-empty words");
    }
    return x.size() + y.size() - std::gcd(x.size(), y.size());
  }

}  // namespace kpf
