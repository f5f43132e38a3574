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
#include <limits>
#include <thread>
#include <vector>

#include "kpf/decide.hpp"
#include "kpf/testset.hpp"

namespace kpf {

  std::string_view to_string(DecideMode mode) noexcept {
    switch (mode) {
      case DecideMode::testset: return "testset";
      case DecideMode::corollary: return "corollary";
      case DecideMode::classic_k2: return "classic";
    }
    return "testset";
  }

  std::optional<DecideMode> parse_mode(std::string_view name) noexcept {
    if (name == "testset") {
      return DecideMode::testset;
    }
    if (name == "corollary") {
      return DecideMode::corollary;
    }
    if (name == "classic" || name == "classic_k2") {
      return DecideMode::classic_k2;
    }
    return std::nullopt;
  }

  DecideMode default_mode(unsigned k) noexcept {
    return k == 2 ? DecideMode::classic_k2 : DecideMode::testset;
  }

  namespace {
    PowerFreeWords test_words(AlphabetPtr const& domain, unsigned k, DecideMode mode) {
      switch (mode) {
        case DecideMode::testset:
          return testset_words(domain, k);
        case DecideMode::corollary:
          if (k < 3) {
            fail(Errc::invalid_k, "corollary mode needs k >= 3");
          }
          return PowerFreeWords(domain, k, testset_bound(domain->size(), k));
        case DecideMode::classic_k2:
          if (k != 2) {
            fail(Errc::invalid_k, "classic mode is for k = 2 only");
          }
          return PowerFreeWords(domain, 2, 3);
      }
      fail(Errc::invalid_k, "unknown decision mode");
    }

    std::optional<PowerSpan> scan_image(Morphism const&         f,
                                        std::span<Letter const> w,
                                        unsigned                k,
                                        std::vector<Letter>&    image) {
      image.clear();
      f.apply_into(w, image);
      return find_k_power(image, k);
    }

    Witness make_witness(Morphism const&         f,
                         std::span<Letter const> w,
                         unsigned                k,
                         PowerSpan               hit) {
      std::vector<Letter> image;
      f.apply_into(w, image);
      Word img(f.image_alphabet(), std::move(image));
      return Witness{Word(f.domain(), std::vector<Letter>(w.begin(), w.end())),
                     PowerWitness{img.sub(hit.start, hit.period), k, hit.start + 1}};
    }

    // Naive definition-level check, independent of the scanning code.
    bool contains_k_power_naive(Word const& w, unsigned k) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len * k <= w.size(); ++len) {
          if (w.sub(i, len * k) == w.sub(i, len).pow(k)) {
            return true;
          }
        }
      }
      return false;
    }

    constexpr std::size_t kBatch = 4096;
  }  // namespace

  Verdict decide(Morphism const& f, unsigned k, DecideMode mode, unsigned threads) {
    auto len = f.uniform_length();
    if (!len) {
      fail(Errc::not_uniform, "morphism is not uniform");
    }
    Verdict verdict;
    verdict.mode = mode;
    auto words   = test_words(f.domain(), k, mode);  // validates k for the mode
    if (*len == 0) {
      return verdict;
    }

    std::vector<Letter> image;
    if (threads <= 1) {
      while (words.next()) {
        ++verdict.words_checked;
        if (auto hit = scan_image(f, words.current(), k, image)) {
          verdict.k_power_free = false;
          verdict.witness      = make_witness(f, words.current(), k, *hit);
          return verdict;
        }
      }
      return verdict;
    }

    // Batches are scanned by several workers; the least failing index in
    // the batch wins, so the witness matches the sequential one.
    std::vector<std::vector<Letter>> batch;
    for (;;) {
      batch.clear();
      while (batch.size() < kBatch && words.next()) {
        batch.emplace_back(words.current().begin(), words.current().end());
      }
      if (batch.empty()) {
        return verdict;
      }
      constexpr std::size_t    none = std::numeric_limits<std::size_t>::max();
      std::atomic<std::size_t> first{none};
      std::atomic<std::size_t> cursor{0};
      auto worker = [&] {
        std::vector<Letter> local;
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= batch.size() || i > first.load()) {
            return;
          }
          if (scan_image(f, batch[i], k, local)) {
            std::size_t cur = first.load();
            while (i < cur && !first.compare_exchange_weak(cur, i)) {
            }
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back(worker);
        }
      }
      if (first.load() != none) {
        std::size_t i = first.load();
        verdict.words_checked += i + 1;
        auto hit             = scan_image(f, batch[i], k, image);
        verdict.k_power_free = false;
        verdict.witness      = make_witness(f, batch[i], k, *hit);
        return verdict;
      }
      verdict.words_checked += batch.size();
    }
  }

  bool verify_witness(Morphism const& f, unsigned k, Verdict const& verdict) {
    if (verdict.k_power_free || !verdict.witness) {
      return false;
    }
    auto const& [word, power] = *verdict.witness;
    if (!same_alphabet(word.alphabet(), f.domain()) || word.empty()) {
      return false;
    }
    if (power.exponent != k || power.root.empty() || power.start < 1
        || !same_alphabet(power.root.alphabet(), f.image_alphabet())) {
      return false;
    }
    if (contains_k_power_naive(word, k)) {
      return false;
    }
    Word        image = apply(f, word);
    std::size_t span  = power.root.size() * k;
    if (power.start - 1 + span > image.size()) {
      return false;
    }
    return image.sub(power.start - 1, span) == power.root.pow(k);
  }

}  // namespace kpf
