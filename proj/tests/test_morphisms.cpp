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

TEST_CASE("apply on the Thue morphism and example 1") {
  auto th = data_morphism("thue.txt");
  CHECK(apply(th, over(th, "abba")).str() == "abcacacabc");
  auto f = data_morphism("example1.txt");
  CHECK(apply(f, over(f, "abcd")).str() == "baababcdabcdabcdbaab");
  CHECK(apply(f, Word(f.domain())).empty());
  CHECK(thrown([&] { apply(f, Word::parse(Alphabet::from_chars("ab"), "ab")); }) == Errc::alphabet_mismatch);
}

TEST_CASE("apply is a homomorphism and scales lengths") {
  std::mt19937_64 rng(7);
  auto            dom = Alphabet::first_letters(3);
  for (int n = 0; n < 200; ++n) {
    auto f = random_uniform_morphism(dom, Alphabet::first_letters(2), 1 + rng() % 4, rng());
    auto u = props::random_word(rng, dom, rng() % 8);
    auto v = props::random_word(rng, dom, rng() % 8);
    REQUIRE(apply(f, u + v) == apply(f, u) + apply(f, v));
    REQUIRE(apply(f, u).size() == *f.uniform_length() * u.size());
  }
}

TEST_CASE("uniformity") {
  auto r = uniformity(data_morphism("example1.txt"));
  CHECK(r.uniform);
  CHECK(r.length == 5u);
  auto t = uniformity(data_morphism("thue.txt"));
  CHECK_FALSE(t.uniform);
  CHECK_FALSE(t.length);
  auto empty = Alphabet::from_chars("ab");
  Morphism eps(empty, empty, {Word(empty), Word(empty)});
  CHECK(uniformity(eps).uniform);
  CHECK(uniformity(eps).length == 0u);
}

TEST_CASE("is_injective_uniform") {
  CHECK(is_injective_uniform(data_morphism("example2.txt")));
  auto dup = parse_morphism("a -> ab\nb -> ab\n");
  CHECK_FALSE(is_injective_uniform(dup));
  CHECK(is_injective_uniform(parse_morphism("a -> b\nb -> c\nc -> a\n")));
  CHECK(thrown([] { is_injective_uniform(parse_morphism("a -> abc\nb -> ac\nc -> b\n")); }) == Errc::not_uniform);
  auto ab = Alphabet::from_chars("ab");
  CHECK(thrown([&] { is_injective_uniform(Morphism(ab, ab, {Word(ab), Word(ab)})); }) == Errc::zero_length);
}

TEST_CASE("ps-morphism test") {
  auto e3 = is_ps_morphism(data_morphism("example3.txt"));
  CHECK_FALSE(e3.ps_morphism);
  REQUIRE(e3.violation);
  CHECK(is_ps_morphism(data_morphism("examplek3.txt")).ps_morphism);
  CHECK(is_ps_morphism(parse_morphism("a -> b\nb -> c\nc -> a\n")).ps_morphism);

  // f(b) = ab = a.b splits as prefix of f(a) and suffix of f(c)
  auto f = parse_morphism("a -> aa\nb -> ab\nc -> bb\n");
  auto r = is_ps_morphism(f);
  REQUIRE(r.violation);
  auto const& v = *r.violation;
  CHECK(v.a != v.b);
  CHECK(v.a != v.c);
  CHECK(v.p + v.s == f.image(v.a));
  CHECK(v.p + v.s_prime == f.image(v.b));
  CHECK(v.p_prime + v.s == f.image(v.c));
}

TEST_CASE("ps violation picks the least letter then split") {
  // Duplicate images are caught by the empty split.
  auto f = parse_morphism("a -> ab\nb -> ab\n");
  auto r = is_ps_morphism(f);
  REQUIRE(r.violation);
  CHECK(r.violation->a == 0);
  CHECK(r.violation->p.empty());
  CHECK(r.violation->b == 1);
  CHECK(r.violation->c == 1);
}

TEST_CASE("parse_morphism reads rules, comments and blank lines") {
  auto f = parse_morphism("# example\n\na -> baaba\nb -> bcdab   # trailing\nc -> cdabc\nd -> dbaab");
  CHECK(f == data_morphism("example1.txt"));
  CHECK(f.domain()->symbols() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(f.image_alphabet()->symbols() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("parse_morphism errors") {
  CHECK(thrown([] { parse_morphism(""); }) == Errc::empty_rule_set);
  CHECK(thrown([] { parse_morphism("# only a comment\n"); }) == Errc::empty_rule_set);
  CHECK(thrown([] { parse_morphism("a -> x\na -> y"); }) == Errc::duplicate_rule);
  CHECK(thrown([] { parse_morphism("a -> x\nb x"); }) == Errc::syntax);
  CHECK(thrown([] { parse_morphism("ab -> x"); }) == Errc::syntax);
  try {
    parse_morphism("a -> x\n\nb = y\n");
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("image alphabet inference") {
  auto dom = Alphabet::from_chars("abc");
  CHECK(infer_image_alphabet(dom, {{"b"}, {"a", "b"}, {}})->symbols() == dom->symbols());
  CHECK(infer_image_alphabet(dom, {{"x", "a"}, {"y"}, {"x"}})->symbols()
        == std::vector<std::string>{"x", "a", "y"});
}

TEST_CASE("serialize and parse round-trip") {
  for (auto name : {"example1.txt", "example2.txt", "example3.txt", "thue.txt"}) {
    auto f = data_morphism(name);
    CHECK(parse_morphism(serialize_morphism(f)) == f);
  }
  auto tok = parse_morphism("x1 -> y1 y2\nx2 -> y2 y1\n", SymbolMode::tokens);
  CHECK(tok.domain()->symbols() == std::vector<std::string>{"x1", "x2"});
  CHECK(parse_morphism(serialize_morphism(tok, SymbolMode::tokens), SymbolMode::tokens) == tok);

  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    auto f = random_uniform_morphism(Alphabet::first_letters(3), Alphabet::first_letters(3), 1 + rng() % 4, rng());
    auto g = parse_morphism(serialize_morphism(f));
    REQUIRE(serialize_morphism(g) == serialize_morphism(f));
  }
}

TEST_CASE("morphism JSON round-trip keeps the image alphabet") {
  auto f = data_morphism("examplek3.txt");
  auto j = morphism_to_json(f);
  CHECK(morphism_from_json(j) == f);
  auto g = morphism_from_json(json::parse(R"({"alphabet":["a","b"],"rules":{"a":"ab","b":"ba"}})"));
  CHECK(g == parse_morphism("a -> ab\nb -> ba\n"));
  CHECK(thrown([] { morphism_from_json(json::parse(R"({"alphabet":["a"],"rules":{"a":"x","q":"y"}})")); }).has_value());
  CHECK(thrown([] { morphism_from_json(json::parse(R"({"alphabet":["a","b"],"rules":{"a":"x"}})")); }) == Errc::syntax);
}

TEST_CASE("ps lemma and synchronization on random morphisms") {
  auto out = props::ps_and_synchronization(500, 21);
  INFO(out.summary());
  CHECK(out.ok());
}

TEST_CASE("ps morphisms in the small exhaustive families are injective") {
  auto ab = Alphabet::from_chars("ab");
  for (std::size_t len = 1; len <= 3; ++len) {
    for_each_uniform_morphism(ab, ab, len, [&](Morphism const& f) {
      if (is_ps_morphism(f).ps_morphism) {
        REQUIRE(is_injective_uniform(f));
      }
    });
  }
}
