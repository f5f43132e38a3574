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

#include <fstream>
#include <sstream>
#include <utility>

#include "kpf/json_io.hpp"
#include "kpf/text.hpp"

namespace kpf {

  namespace {
    json words_to_json(std::vector<Word> const& ws, SymbolMode mode) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(w.str(mode));
      }
      return out;
    }

    bool ends_with(std::string const& s, std::string const& suffix) {
      return s.size() >= suffix.size()
             && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    }
  }  // namespace

  json morphism_to_json(Morphism const& f, SymbolMode mode) {
    json rules = json::object();
    for (Letter x = 0; x < f.domain()->size(); ++x) {
      rules[f.domain()->symbol(x)] = f.image(x).str(mode);
    }
    return json{{"alphabet", f.domain()->symbols()},
                {"image_alphabet", f.image_alphabet()->symbols()},
                {"rules", rules}};
  }

  Morphism morphism_from_json(json const& j, SymbolMode mode) {
    try {
      if (!j.is_object() || !j.contains("alphabet") || !j.contains("rules")) {
        fail(Errc::syntax, "morphism JSON needs 'alphabet' and 'rules'");
      }
      auto symbols = j.at("alphabet").get<std::vector<std::string>>();
      if (symbols.empty()) {
        fail(Errc::empty_rule_set, "morphism JSON has an empty alphabet");
      }
      auto domain = std::make_shared<Alphabet const>(symbols);
      auto const& rules = j.at("rules");
      if (!rules.is_object()) {
        fail(Errc::syntax, "'rules' must be an object");
      }
      for (auto const& [key, value] : rules.items()) {
        domain->index(key);  // unknown rule letter
      }
      std::vector<std::vector<std::string>> images;
      for (auto const& sym : symbols) {
        if (!rules.contains(sym)) {
          fail(Errc::syntax, "no rule for letter '" + sym + "'");
        }
        std::vector<std::string> img;
        for (auto& t : text::split_symbols(rules.at(sym).get<std::string>(), mode)) {
          if (!text::trim(t).empty()) {
            img.push_back(std::move(t));
          }
        }
        images.push_back(std::move(img));
      }
      AlphabetPtr image;
      if (j.contains("image_alphabet")) {
        image = std::make_shared<Alphabet const>(
            j.at("image_alphabet").get<std::vector<std::string>>());
        if (*image == *domain) {
          image = domain;
        }
      } else {
        image = infer_image_alphabet(domain, images);
      }
      std::vector<Word> words;
      for (auto const& img : images) {
        std::vector<Letter> xs;
        for (auto const& sym : img) {
          xs.push_back(image->index(sym));
        }
        words.emplace_back(image, std::move(xs));
      }
      return Morphism(domain, image, std::move(words));
    } catch (json::exception const& e) {
      fail(Errc::syntax, std::string("malformed morphism JSON: ") + e.what());
    }
  }

  json verdict_to_json(Verdict const& v, SymbolMode mode) {
    json witness = nullptr;
    if (v.witness) {
      witness = json{{"word", v.witness->test_word.str(mode)},
                     {"root", v.witness->image_power.root.str(mode)},
                     {"exponent", v.witness->image_power.exponent},
                     {"start", v.witness->image_power.start}};
    }
    return json{{"k_power_free", v.k_power_free},
                {"witness", witness},
                {"words_checked", v.words_checked},
                {"mode", std::string(to_string(v.mode))}};
  }

  Verdict verdict_from_json(json const& j, Morphism const& f, SymbolMode mode) {
    try {
      Verdict v;
      v.k_power_free  = j.at("k_power_free").get<bool>();
      v.words_checked = j.at("words_checked").get<std::size_t>();
      auto m          = parse_mode(j.at("mode").get<std::string>());
      if (!m) {
        fail(Errc::syntax, "unknown mode in verdict JSON");
      }
      v.mode   = *m;
      auto& wj = j.at("witness");
      if (!wj.is_null()) {
        v.witness = Witness{
            Word::parse(f.domain(), wj.at("word").get<std::string>(), mode),
            PowerWitness{Word::parse(f.image_alphabet(), wj.at("root").get<std::string>(), mode),
                         wj.at("exponent").get<unsigned>(),
                         wj.at("start").get<std::size_t>()}};
      }
      return v;
    } catch (json::exception const& e) {
      fail(Errc::syntax, std::string("malformed verdict JSON: ") + e.what());
    }
  }

  json search_to_json(SearchReport const& r, SymbolMode mode) {
    json ce = nullptr;
    if (r.counterexample) {
      ce = json{{"word", r.counterexample->test_word.str(mode)},
                {"root", r.counterexample->image_power.root.str(mode)},
                {"exponent", r.counterexample->image_power.exponent},
                {"start", r.counterexample->image_power.start}};
    }
    return json{{"counterexample", ce},
                {"words_scanned", r.words_scanned},
                {"max_len", r.max_len}};
  }

  json cover_to_json(DirectCover const& c, SymbolMode mode) {
    return json{{"w", c.w.str(mode)},
                {"u", c.u.str(mode)},
                {"p0", c.p0.str(mode)},
                {"sk", c.sk.str(mode)},
                {"k", c.k}};
  }

  json decomposition_to_json(Decomposition const& d, SymbolMode mode) {
    json letters = json::array();
    for (Letter x : d.a) {
      letters.push_back(d.w.alphabet()->symbol(x));
    }
    return json{{"k", d.k},
                {"w", d.w.str(mode)},
                {"u", d.u.str(mode)},
                {"a", letters},
                {"blocks", words_to_json(d.blocks, mode)},
                {"p", words_to_json(d.p, mode)},
                {"s", words_to_json(d.s, mode)}};
  }

  json trace_to_json(ReductionTrace const& t, SymbolMode mode) {
    json steps = json::array();
    for (auto const& st : t.steps) {
      json cuts = json::array();
      for (auto const& c : st.cuts) {
        cuts.push_back(json{{"x", c.x.str(mode)}, {"y", c.y.str(mode)}, {"z", c.z.str(mode)}});
      }
      steps.push_back(json{{"ell", st.ell},
                           {"letter", st.before.w.alphabet()->symbol(st.letter)},
                           {"cuts", cuts},
                           {"before", decomposition_to_json(st.before, mode)},
                           {"after", decomposition_to_json(st.after, mode)}});
    }
    return json{{"steps", steps}, {"final", decomposition_to_json(t.final, mode)}};
  }

  Morphism load_morphism(std::string const& path, SymbolMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail(Errc::io, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (ends_with(path, ".json")) {
      json j;
      try {
        j = json::parse(buf.str());
      } catch (json::exception const& e) {
        fail(Errc::syntax, path + ": " + e.what());
      }
      return morphism_from_json(j, mode);
    }
    return parse_morphism(buf.str(), mode);
  }

}  // namespace kpf
