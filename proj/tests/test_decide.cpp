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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "properties.hpp"
#include "support.hpp"

using namespace kpf;
using namespace kpf::testing;

namespace {

  // Random k-power-free walk to length n with backtracking; returns the first
  // prefix whose image holds a k-power.
  std::optional<Word> random_walk(Morphism const& f, unsigned k, std::size_t n, std::mt19937_64& rng) {
    auto const&         dom = f.domain();
    std::vector<Letter> w;
    std::vector<std::vector<Letter>> left;
    auto                fresh = [&] {
      std::vector<Letter> all(dom->size());
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      return all;
    };
    left.push_back(fresh());
    std::size_t budget = 20000;
    while (w.size() < n && budget--) {
      if (left.back().empty()) {
        left.pop_back();
        if (w.empty()) {
          break;
        }
        w.pop_back();
        continue;
      }
      w.push_back(left.back().back());
      left.back().pop_back();
      if (has_k_power_suffix(w, k)) {
        w.pop_back();
        continue;
      }
      Word word(dom, w);
      if (find_k_power(apply(f, word), k)) {
        return word;
      }
      left.push_back(fresh());
    }
    return std::nullopt;
  }

  Morphism const leech = parse_morphism("a -> abcbacbcabcba\nb -> bcacbacabcacb\nc -> cabacbabcabac\n");

}  // namespace

TEST_CASE("mode names") {
  CHECK(to_string(DecideMode::classic_k2) == "classic");
  CHECK(parse_mode("classic") == DecideMode::classic_k2);
  CHECK(parse_mode("classic_k2") == DecideMode::classic_k2);
  CHECK(parse_mode("corollary") == DecideMode::corollary);
  CHECK_FALSE(parse_mode("fast"));
  CHECK(default_mode(2) == DecideMode::classic_k2);
  CHECK(default_mode(3) == DecideMode::testset);
}

TEST_CASE("example 1 is rejected in both modes") {
  auto f = data_morphism("example1.txt");
  CHECK(find_k_power(apply(f, over(f, "abcd")), 3));
  for (auto mode : {DecideMode::testset, DecideMode::corollary}) {
    auto v = decide(f, 3, mode);
    CHECK_FALSE(v.k_power_free);
    REQUIRE(v.witness);
    CHECK(verify_witness(f, 3, v));
    CHECK(v.words_checked >= 1);
    CHECK(v.mode == mode);
  }
}

TEST_CASE("the empty morphism is k-power-free without enumeration") {
  auto     ab = Alphabet::from_chars("ab");
  Morphism eps(ab, ab, {Word(ab), Word(ab)});
  auto     v = decide(eps, 3);
  CHECK(v.k_power_free);
  CHECK(v.words_checked == 0);
  CHECK_FALSE(v.witness);
}

TEST_CASE("equal images give a cube on a short test word") {
  auto f = parse_morphism("a -> x\nb -> x\n");
  auto v = decide(f, 3);
  CHECK_FALSE(v.k_power_free);
  REQUIRE(v.witness);
  CHECK(v.witness->test_word.str() == "aab");
  CHECK(v.words_checked == 2 + 4 + 1);
  CHECK(find_k_power(apply(f, over(f, "aaba")), 3));
}

TEST_CASE("decide rejects bad input") {
  CHECK(thrown([] { decide(data_morphism("thue.txt"), 3); }) == Errc::not_uniform);
  auto f = data_morphism("example1.txt");
  CHECK(thrown([&] { decide(f, 2, DecideMode::testset); }) == Errc::invalid_k);
  CHECK(thrown([&] { decide(f, 2, DecideMode::corollary); }) == Errc::invalid_k);
  CHECK(thrown([&] { decide(f, 3, DecideMode::classic_k2); }) == Errc::invalid_k);
}

TEST_CASE("tampered witnesses fail verification") {
  auto f = data_morphism("example1.txt");
  auto v = decide(f, 3);
  REQUIRE(verify_witness(f, 3, v));

  auto shifted = v;
  shifted.witness->image_power.start += 1;
  CHECK_FALSE(verify_witness(f, 3, shifted));

  auto cubed = v;
  cubed.witness->test_word = over(f, "aaab");
  auto img = apply(f, cubed.witness->test_word);
  cubed.witness->image_power = *find_k_power(img, 3);
  CHECK_FALSE(verify_witness(f, 3, cubed));

  auto positive = v;
  positive.witness.reset();
  CHECK_FALSE(verify_witness(f, 3, positive));
}

TEST_CASE("classic square test-set") {
  auto v = decide(leech, 2);
  CHECK(v.mode == DecideMode::classic_k2);
  CHECK(v.k_power_free);
  CHECK_FALSE(brute_force_search(leech, 2, 7).counterexample);

  std::mt19937_64 rng(5);
  auto            abc = Alphabet::first_letters(3);
  for (int n = 0; n < 300; ++n) {
    auto f   = random_uniform_morphism(abc, abc, 1 + rng() % 4, rng());
    auto dec = decide(f, 2);
    auto bf  = brute_force_search(f, 2, 7);
    REQUIRE(dec.k_power_free == !bf.counterexample.has_value());
    if (!dec.k_power_free) {
      REQUIRE(verify_witness(f, 2, dec));
    }
  }
}

TEST_CASE("testset and corollary modes agree, and verdicts are monotone in k") {
  auto out = props::mode_agreement(3);
  INFO(out.summary());
  CHECK(out.checked == 84);
  CHECK(out.ok());
}

TEST_CASE("mode agreement on sampled larger families") {
  std::mt19937_64 rng(17);
  auto            ab  = Alphabet::first_letters(2);
  auto            abc = Alphabet::first_letters(3);
  for (int n = 0; n < 200; ++n) {
    auto f = random_uniform_morphism(ab, n % 2 ? abc : ab, 4 + n % 2, rng());
    REQUIRE(decide(f, 3, DecideMode::testset).k_power_free
            == decide(f, 3, DecideMode::corollary).k_power_free);
  }
  for (int n = 0; n < 40; ++n) {
    auto f = random_uniform_morphism(abc, abc, 1 + n % 3, rng());
    REQUIRE(decide(f, 3, DecideMode::testset).k_power_free
            == decide(f, 3, DecideMode::corollary).k_power_free);
  }
}

TEST_CASE("threaded decide returns the canonical witness") {
  std::mt19937_64 rng(23);
  auto            abc = Alphabet::first_letters(3);
  for (int n = 0; n < 60; ++n) {
    auto f  = random_uniform_morphism(abc, abc, 1 + n % 4, rng());
    auto v1 = decide(f, 3, DecideMode::testset, 1);
    auto v4 = decide(f, 3, DecideMode::testset, 4);
    REQUIRE(v1.k_power_free == v4.k_power_free);
    REQUIRE(v1.words_checked == v4.words_checked);
    if (v1.witness) {
      REQUIRE(v1.witness->test_word == v4.witness->test_word);
      REQUIRE(v1.witness->image_power.start == v4.witness->image_power.start);
    }
  }
}

TEST_CASE("positive verdicts survive random long walks") {
  std::mt19937_64       rng(29);
  std::vector<Morphism> free;
  auto                  ab = Alphabet::from_chars("ab");
  for (std::size_t len = 1; len <= 3; ++len) {
    for_each_uniform_morphism(ab, ab, len, [&](Morphism const& f) {
      if (decide(f, 3).k_power_free) {
        free.push_back(f);
      }
    });
  }
  REQUIRE_FALSE(free.empty());
  for (auto const& f : free) {
    for (int walk = 0; walk < 30; ++walk) {
      auto bad = random_walk(f, 3, 30, rng);
      INFO(serialize_morphism(f) << (bad ? bad->str() : ""));
      REQUIRE_FALSE(bad);
    }
  }
  for (int walk = 0; walk < 30; ++walk) {
    REQUIRE_FALSE(random_walk(leech, 2, 30, rng));
  }
}

TEST_CASE("verdict JSON round-trips through verification") {
  auto f = data_morphism("example1.txt");
  auto v = decide(f, 3);
  auto j = verdict_to_json(v);
  CHECK(j["mode"] == "testset");
  CHECK(j["k_power_free"] == false);
  CHECK(j["witness"]["word"] == v.witness->test_word.str());
  auto back = verdict_from_json(json::parse(j.dump()), f);
  CHECK(back.words_checked == v.words_checked);
  CHECK(verify_witness(f, 3, back));

  auto pos = verdict_to_json(decide(leech, 2));
  CHECK(pos["witness"].is_null());
  CHECK(pos["mode"] == "classic");
  CHECK(verdict_from_json(pos, leech).k_power_free);
}
