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

// Free-monoid morphisms given by letter images, with the uniformity,
// injectivity and ps-morphism checks and the text rule-file format.

#ifndef KPF_MORPHISMS_HPP_
#define KPF_MORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpf/words.hpp"

namespace kpf {

  //! A morphism from domain^* to image^*, fixed by the image of each letter.
  class Morphism {
   public:
    //! \p rules[x] is the image of domain letter x; every rule must be a word
    //! over \p image.
    Morphism(AlphabetPtr domain, AlphabetPtr image, std::vector<Word> rules);

    AlphabetPtr const& domain() const noexcept {
      return _domain;
    }
    AlphabetPtr const& image_alphabet() const noexcept {
      return _image;
    }
    Word const& image(Letter x) const {
      return _rules.at(x);
    }
    std::vector<Word> const& rules() const noexcept {
      return _rules;
    }
    //! L when every image has length L.
    std::optional<std::size_t> uniform_length() const noexcept {
      return _uniform_length;
    }

    //! Appends the image of \p w to \p out without alphabet checks.
    void apply_into(std::span<Letter const> w, std::vector<Letter>& out) const;

    bool operator==(Morphism const& other) const;

   private:
    AlphabetPtr                _domain;
    AlphabetPtr                _image;
    std::vector<Word>          _rules;
    std::optional<std::size_t> _uniform_length;
  };

  //! f(w); throws Errc::alphabet_mismatch unless w is over f's domain.
  Word apply(Morphism const& f, Word const& w);

  struct UniformityReport {
    bool                       uniform;
    std::optional<std::size_t> length;
  };
  UniformityReport uniformity(Morphism const& f);

  //! Throws Errc::not_uniform / Errc::zero_length unless f is L-uniform with
  //! L >= 1; returns L.
  std::size_t require_uniform_positive(Morphism const& f);

  //! For uniform f with L >= 1: true iff the letter images are distinct.
  bool is_injective_uniform(Morphism const& f);

  //! f(a) = p s with p a prefix of f(b) and s a suffix of f(c), b != a, c != a.
  struct PsViolation {
    Letter a;
    Letter b;
    Letter c;
    Word   p;
    Word   s;
    Word   s_prime;  // f(b) = p s'
    Word   p_prime;  // f(c) = p' s
  };

  struct PsReport {
    bool                       ps_morphism;
    std::optional<PsViolation> violation;
  };

  //! Scans every letter a and every split f(a) = p s (empty parts included).
  //! The violation reported is the least (a, |p|, b, c).
  PsReport is_ps_morphism(Morphism const& f);

  //! Rule-file format: one `<letter> -> <image>` per line, `#` comments,
  //! blank lines ignored. The image alphabet is the domain when every image
  //! symbol belongs to it, and the image symbols in order of first
  //! appearance otherwise.
  Morphism    parse_morphism(std::string_view text,
                             SymbolMode       mode = SymbolMode::chars);
  std::string serialize_morphism(Morphism const& f,
                                 SymbolMode      mode = SymbolMode::chars);

  //! Shared inference rule for image alphabets.
  AlphabetPtr infer_image_alphabet(AlphabetPtr const&                          domain,
                                   std::vector<std::vector<std::string>> const& images);

}  // namespace kpf

#endif  // KPF_MORPHISMS_HPP_
