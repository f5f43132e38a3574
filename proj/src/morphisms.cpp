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
#include <set>
#include <unordered_set>
#include <utility>

#include "kpf/morphisms.hpp"
#include "kpf/text.hpp"

namespace kpf {

  Morphism::Morphism(AlphabetPtr domain, AlphabetPtr image, std::vector<Word> rules)
      : _domain(std::move(domain)), _image(std::move(image)), _rules(std::move(rules)) {
    if (!_domain || !_image) {
      fail(Errc::alphabet_mismatch, "morphism needs a domain and an image alphabet");
    }
    if (_rules.size() != _domain->size()) {
      fail(Errc::syntax,
           "morphism has " + std::to_string(_rules.size()) + " rules for "
               + std::to_string(_domain->size()) + " letters");
    }
    for (auto& r : _rules) {
      if (r.empty() && !r.alphabet()) {
        r = Word(_image);
      } else if (!same_alphabet(r.alphabet(), _image)) {
        fail(Errc::alphabet_mismatch, "rule image is not over the image alphabet");
      }
    }
    if (!_rules.empty()) {
      std::size_t len = _rules.front().size();
      if (std::all_of(_rules.begin(), _rules.end(), [len](Word const& r) {
            return r.size() == len;
          })) {
        _uniform_length = len;
      }
    } else {
      _uniform_length = 0;
    }
  }

  void Morphism::apply_into(std::span<Letter const> w, std::vector<Letter>& out) const {
    for (Letter x : w) {
      auto const& img = _rules[x].letters();
      out.insert(out.end(), img.begin(), img.end());
    }
  }

  bool Morphism::operator==(Morphism const& other) const {
    if (!same_alphabet(_domain, other._domain)
        || !same_alphabet(_image, other._image)) {
      return false;
    }
    for (std::size_t x = 0; x < _rules.size(); ++x) {
      if (_rules[x].letters() != other._rules[x].letters()) {
        return false;
      }
    }
    return true;
  }

  Word apply(Morphism const& f, Word const& w) {
    if (!same_alphabet(w.alphabet(), f.domain()) && !(w.empty() && !w.alphabet())) {
      fail(Errc::alphabet_mismatch, "word is not over the morphism's domain");
    }
    std::vector<Letter> out;
    f.apply_into(w.view(), out);
    return Word(f.image_alphabet(), std::move(out));
  }

  UniformityReport uniformity(Morphism const& f) {
    auto len = f.uniform_length();
    return {len.has_value(), len};
  }

  std::size_t require_uniform_positive(Morphism const& f) {
    auto len = f.uniform_length();
    if (!len) {
      fail(Errc::not_uniform, "morphism is not uniform");
    }
    if (*len == 0) {
      fail(Errc::zero_length, "morphism is 0-uniform");
    }
    return *len;
  }

  bool is_injective_uniform(Morphism const& f) {
    require_uniform_positive(f);
    std::set<std::vector<Letter>> seen;
    for (auto const& r : f.rules()) {
      if (!seen.insert(r.letters()).second) {
        return false;
      }
    }
    return true;
  }

  PsReport is_ps_morphism(Morphism const& f) {
    auto const& rules = f.rules();
    auto        n     = static_cast<Letter>(rules.size());
    for (Letter a = 0; a < n; ++a) {
      auto const& fa = rules[a].letters();
      for (std::size_t cut = 0; cut <= fa.size(); ++cut) {
        std::size_t const slen = fa.size() - cut;
        for (Letter b = 0; b < n; ++b) {
          auto const& fb = rules[b].letters();
          if (b == a || fb.size() < cut
              || !std::equal(fa.begin(), fa.begin() + cut, fb.begin())) {
            continue;
          }
          for (Letter c = 0; c < n; ++c) {
            auto const& fc = rules[c].letters();
            if (c == a || fc.size() < slen
                || !std::equal(fa.begin() + cut, fa.end(), fc.end() - slen)) {
              continue;
            }
            PsViolation v{a,
                          b,
                          c,
                          rules[a].sub(0, cut),
                          rules[a].sub(cut, slen),
                          rules[b].sub(cut, fb.size() - cut),
                          rules[c].sub(0, fc.size() - slen)};
            return {false, std::move(v)};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  AlphabetPtr infer_image_alphabet(AlphabetPtr const&                           domain,
                                   std::vector<std::vector<std::string>> const& images) {
    bool                     inside = true;
    std::vector<std::string> order;
    std::unordered_set<std::string> seen;
    for (auto const& img : images) {
      for (auto const& sym : img) {
        if (!domain->find(sym)) {
          inside = false;
        }
        if (seen.insert(sym).second) {
          order.push_back(sym);
        }
      }
    }
    if (inside) {
      return domain;
    }
    return std::make_shared<Alphabet const>(std::move(order));
  }

  Morphism parse_morphism(std::string_view input, SymbolMode mode) {
    std::vector<std::string>              letters;
    std::vector<std::vector<std::string>> images;
    std::vector<std::size_t>              line_of;
    std::size_t                           line_no = 0;
    std::size_t                           pos     = 0;
    while (pos <= input.size()) {
      auto nl = input.find('\n', pos);
      if (nl == std::string_view::npos) {
        nl = input.size();
      }
      std::string_view line = input.substr(pos, nl - pos);
      pos                   = nl + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = text::trim(line);
      if (line.empty()) {
        continue;
      }
      auto arrow = line.find("->");
      auto where = "line " + std::to_string(line_no) + ": ";
      if (arrow == std::string_view::npos) {
        fail(Errc::syntax, where + "expected '<letter> -> <image>'");
      }
      auto lhs = text::split_symbols(text::trim(line.substr(0, arrow)), mode);
      if (lhs.size() != 1) {
        fail(Errc::syntax, where + "left-hand side must be exactly one symbol");
      }
      if (std::find(letters.begin(), letters.end(), lhs.front()) != letters.end()) {
        fail(Errc::duplicate_rule,
             where + "duplicate rule for '" + lhs.front() + "'");
      }
      std::vector<std::string> rhs;
      for (auto& sym : text::split_symbols(text::trim(line.substr(arrow + 2)), mode)) {
        if (text::trim(sym).empty()) {
          continue;  // whitespace between characters
        }
        rhs.push_back(std::move(sym));
      }
      letters.push_back(lhs.front());
      images.push_back(std::move(rhs));
      line_of.push_back(line_no);
    }
    if (letters.empty()) {
      fail(Errc::empty_rule_set, "morphism file contains no rules");
    }
    auto domain = std::make_shared<Alphabet const>(letters);
    auto image  = infer_image_alphabet(domain, images);
    std::vector<Word> rules;
    for (auto const& img : images) {
      std::vector<Letter> xs;
      for (auto const& sym : img) {
        xs.push_back(image->index(sym));
      }
      rules.emplace_back(image, std::move(xs));
    }
    return Morphism(domain, image, std::move(rules));
  }

  std::string serialize_morphism(Morphism const& f, SymbolMode mode) {
    std::string out;
    auto const& dom = *f.domain();
    for (Letter x = 0; x < dom.size(); ++x) {
      out += dom.symbol(x);
      out += " ->";
      auto img = f.image(x).str(mode);
      if (!img.empty()) {
        out += ' ';
        out += img;
      }
      out += '\n';
    }
    return out;
  }

}  // namespace kpf
