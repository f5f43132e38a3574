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
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

#include "kpf/oracle.hpp"
#include "kpf/testset.hpp"

namespace kpf {

  namespace {
    // u^k with |u| = p ends at position end (exclusive): compare each of the
    // first k - 1 copies against the last one.
    bool power_ends_at(std::vector<Letter> const& v, unsigned k, std::size_t end) {
      for (std::size_t p = 1; p * k <= end; ++p) {
        std::size_t const last = end - p;
        bool              hit  = true;
        for (unsigned copy = 1; copy < k && hit; ++copy) {
          std::size_t const from = end - (copy + 1) * p;
          hit = std::equal(v.begin() + from, v.begin() + from + p, v.begin() + last);
        }
        if (hit) {
          return true;
        }
      }
      return false;
    }

    std::optional<PowerSpan> leftmost_power(std::vector<Letter> const& v, unsigned k) {
      for (std::size_t start = 0; start < v.size(); ++start) {
        for (std::size_t p = 1; start + p * k <= v.size(); ++p) {
          bool hit = true;
          for (unsigned copy = 1; copy < k && hit; ++copy) {
            hit = std::equal(v.begin() + start,
                             v.begin() + start + p,
                             v.begin() + start + copy * p);
          }
          if (hit) {
            return PowerSpan{start, p};
          }
        }
      }
      return std::nullopt;
    }

    class DepthSearch {
     public:
      DepthSearch(Morphism const& f, unsigned k, std::size_t L)
          : _f(f), _k(k), _L(L), _q(static_cast<Letter>(f.domain()->size())) {}

      // Scans every k-power-free word of length exactly n, assuming all
      // shorter ones have clean images. True when a counterexample is found
      // (left in _word / _image).
      bool run(std::size_t n) {
        _n = n;
        _word.clear();
        _image.clear();
        return extend();
      }

      std::size_t                scanned = 0;
      std::vector<Letter> const& word() const {
        return _word;
      }
      std::vector<Letter> const& image() const {
        return _image;
      }

     private:
      bool extend() {
        for (Letter x = 0; x < _q; ++x) {
          _word.push_back(x);
          if (!power_ends_at(_word, _k, _word.size())) {
            auto const& img = _f.image(x).letters();
            _image.insert(_image.end(), img.begin(), img.end());
            if (_word.size() == _n) {
              ++scanned;
              for (std::size_t end = _image.size() - _L + 1; end <= _image.size(); ++end) {
                if (power_ends_at(_image, _k, end)) {
                  return true;
                }
              }
            } else if (extend()) {
              return true;
            }
            _image.resize(_image.size() - _L);
          }
          _word.pop_back();
        }
        return false;
      }

      Morphism const&     _f;
      unsigned            _k;
      std::size_t         _L;
      Letter              _q;
      std::size_t         _n = 0;
      std::vector<Letter> _word;
      std::vector<Letter> _image;
    };
  }  // namespace

  SearchReport brute_force_search(Morphism const& f, unsigned k, std::size_t max_len) {
    if (k < 2) {
      fail(Errc::invalid_k, "exponent must be at least 2");
    }
    auto L = f.uniform_length();
    if (!L) {
      fail(Errc::not_uniform, "morphism is not uniform");
    }
    SearchReport report;
    report.max_len = max_len;
    DepthSearch search(f, k, *L);
    for (std::size_t n = 1; n <= max_len; ++n) {
      if (search.run(n)) {
        auto hit = leftmost_power(search.image(), k);
        Word img(f.image_alphabet(), search.image());
        report.counterexample =
            Witness{Word(f.domain(), search.word()),
                    PowerWitness{img.sub(hit->start, hit->period), k, hit->start + 1}};
        break;
      }
    }
    report.words_scanned = search.scanned;
    return report;
  }

  Morphism random_uniform_morphism(AlphabetPtr   domain,
                                   AlphabetPtr   image,
                                   std::size_t   length,
                                   std::uint64_t seed) {
    if (image->size() == 0 && length > 0) {
      fail(Errc::unknown_symbol, "cannot draw images from an empty alphabet");
    }
    std::mt19937_64                       rng(seed);
    std::uniform_int_distribution<Letter> pick(
        0, static_cast<Letter>(std::max<std::size_t>(image->size(), 1) - 1));
    std::vector<Word> rules;
    for (std::size_t x = 0; x < domain->size(); ++x) {
      std::vector<Letter> img(length);
      for (auto& y : img) {
        y = pick(rng);
      }
      rules.emplace_back(image, std::move(img));
    }
    return Morphism(std::move(domain), std::move(image), std::move(rules));
  }

  void for_each_uniform_morphism(AlphabetPtr const&                          domain,
                                 AlphabetPtr const&                          image,
                                 std::size_t                                 length,
                                 std::function<void(Morphism const&)> const& visit) {
    std::size_t const   slots = domain->size() * length;
    auto const          base  = static_cast<Letter>(image->size());
    std::vector<Letter> digits(slots, 0);
    if (base == 0 && slots > 0) {
      return;
    }
    for (;;) {
      std::vector<Word> rules;
      for (std::size_t x = 0; x < domain->size(); ++x) {
        rules.emplace_back(image,
                           std::vector<Letter>(digits.begin() + x * length,
                                               digits.begin() + (x + 1) * length));
      }
      visit(Morphism(domain, image, std::move(rules)));
      std::size_t i = slots;
      while (i > 0 && digits[i - 1] + 1 == base) {
        digits[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++digits[i - 1];
    }
  }

  SweepReport agreement_sweep(SweepFamily const& family, unsigned k, unsigned threads) {
    auto domain = Alphabet::first_letters(family.domain_size);
    auto image  = Alphabet::first_letters(family.image_size);

    std::vector<Morphism> members;
    if (family.exhaustive) {
      for_each_uniform_morphism(domain, image, family.length, [&](Morphism const& f) {
        members.push_back(f);
      });
    } else {
      for (std::size_t i = 0; i < family.samples; ++i) {
        members.push_back(
            random_uniform_morphism(domain, image, family.length, family.seed + i));
      }
    }

    std::size_t const bound = testset_bound(domain->size(), k);
    DecideMode const  mode  = default_mode(k);

    SweepReport report;
    report.morphisms = members.size();
    std::vector<std::optional<Disagreement>> found(members.size());
    std::atomic<std::size_t>                 next{0};
    std::atomic<std::size_t>                 free_count{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < members.size(); i = next.fetch_add(1)) {
        auto const& f       = members[i];
        Verdict     verdict = decide(f, k, mode);
        auto        search  = brute_force_search(f, k, bound);
        if (verdict.k_power_free) {
          ++free_count;
        }
        if (verdict.k_power_free != !search.counterexample.has_value()) {
          found[i] = Disagreement{f, std::move(verdict), std::move(search)};
        }
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }
    report.k_power_free = free_count.load();
    for (auto& d : found) {
      if (d) {
        report.disagreements.push_back(std::move(*d));
      }
    }
    return report;
  }

}  // namespace kpf
