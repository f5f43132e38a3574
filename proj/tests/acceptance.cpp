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

// Acceptance runner: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kpf/cli.hpp"
#include "kpf/decide.hpp"
#include "kpf/decomp.hpp"
#include "kpf/json_io.hpp"
#include "kpf/oracle.hpp"
#include "kpf/testset.hpp"
#include "properties.hpp"

using namespace kpf;

namespace {

  struct Result {
    bool        ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  Morphism data(std::string const& name) {
    return load_morphism(std::string(KPF_DATA_DIR) + "/" + name);
  }

  Word over(Morphism const& f, std::string const& s) {
    return Word::parse(f.domain(), s);
  }

  Word img(Morphism const& f, std::string const& s) {
    return Word::parse(f.image_alphabet(), s);
  }

  std::optional<DirectCover> cover_with_root(Morphism const& f, Word const& w, unsigned k, Word const& u) {
    for (auto const& c : find_direct_covers(f, w, k)) {
      if (c.u == u) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool matches(Decomposition const&            d,
               Morphism const&                 f,
               std::string const&              a,
               std::vector<std::string> const& blocks,
               std::vector<std::string> const& p,
               std::vector<std::string> const& s) {
    if (d.a != over(f, a).letters()) {
      return false;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (!(d.block(i + 1) == over(f, blocks[i]))) {
        return false;
      }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(d.p[i] == img(f, p[i])) || !(d.s[i] == img(f, s[i]))) {
        return false;
      }
    }
    return true;
  }

  Result example_one() {
    Result r;
    auto   f = data("example1.txt");
    auto   w = over(f, "abcd");
    r.require(apply(f, w) == img(f, "baab") + img(f, "abcd").pow(3) + img(f, "baab"),
              "f(abcd) differs from baab(abcd)^3baab");
    auto cover = cover_with_root(f, w, 3, img(f, "abcd"));
    r.require(cover.has_value(), "no direct cover with root abcd");
    if (!cover) {
      return r;
    }
    r.require(cover->p0 == img(f, "baab") && cover->sk == img(f, "baab"), "cover margins differ");
    auto d = decompose(f, *cover);
    r.require(matches(d, f, "abcd", {"", "", ""}, {"baab", "bcd", "cd", "d"}, {"a", "ab", "abc", "baab"}),
              "decomposition values differ");
    r.require(!is_synchronized(d), "decomposition reported synchronized");
    for (auto mode : {DecideMode::testset, DecideMode::corollary}) {
      auto v = decide(f, 3, mode);
      r.require(!v.k_power_free && verify_witness(f, 3, v), "decide did not reject with a valid witness");
    }
    r.detail = r.ok ? "f(abcd) = baab(abcd)^3baab, p/s values match, not synchronized, rejected" : r.detail;
    return r;
  }

  Result example_two() {
    Result r;
    auto   f = data("example2.txt");
    auto   w = over(f, "154216322");
    auto   u = img(f, "12345123452");
    r.require(apply(f, w) == u.pow(3) + img(f, "345"), "f(154216322) differs from (12345123452)^3 345");
    auto cover = cover_with_root(f, w, 3, u);
    r.require(cover && cover->p0.empty() && cover->sk == img(f, "345"), "no direct cover (eps, u, 345)");
    if (!cover) {
      return r;
    }
    auto d = decompose(f, *cover);
    r.require(matches(d, f, "1462", {"5", "21", "32"}, {"", "452", "52", "2"}, {"1234", "1", "12", "345"}),
              "decomposition values differ");
    r.require(!is_synchronized(d), "decomposition reported synchronized");
    r.require(reduction_candidates(d).empty(), "blocks should admit no reduction");
    auto split = in_V(w, 3);
    r.require(split.has_value(), "154216322 not in V");
    if (split) {
      r.require(split->letters == over(f, "1462").letters() && split->blocks[0] == over(f, "5")
                    && split->blocks[1] == over(f, "21") && split->blocks[2] == over(f, "32"),
                "V split differs from 1|5|4|21|6|32|2");
    }
    r.detail = r.ok ? "image, decomposition and split 1|5|4|21|6|32|2 match" : r.detail;
    return r;
  }

  Result example_three() {
    Result r;
    auto   f = data("example3.txt");
    r.require(!is_ps_morphism(f).ps_morphism, "morphism reported ps");
    auto w     = over(f, "17185429a2163bc322");
    auto cover = cover_with_root(f, w, 3, img(f, "12345178123462345123452"));
    r.require(cover.has_value(), "cube (12345178123462345123452)^3 not directly covered");
    if (!cover) {
      return r;
    }
    auto d     = decompose(f, *cover);
    auto cands = reduction_candidates(d);
    r.require(cands.size() == 2, "expected two candidates, got " + std::to_string(cands.size()));
    if (cands.size() != 2) {
      return r;
    }
    auto first = reduce_step(f, d, 0);
    r.require(first.after.u == img(f, "123462345123452") && first.after.w == over(f, "1854a216c322"),
              "first reduction differs");
    r.require(cover_with_root(f, first.after.w, 3, first.after.u).has_value(),
              "first reduction not directly covered");
    r.require(reduction_edges_consistent(first), "edge remark fails on the first reduction");
    auto second = reduce_step(f, d, 1);
    r.require(second.after.u == img(f, "12345123452") && second.after.w == over(f, "154216322"),
              "second reduction differs");
    r.require(cover_with_root(f, second.after.w, 3, second.after.u).has_value(),
              "second reduction not directly covered");
    auto trace = reduce_fully(f, *cover);
    r.require(!trace.steps.empty() && trace.steps.front().after.w == first.after.w,
              "trace does not start with the first reduction");
    r.require(in_V(trace.final.w, 3).has_value(), "final word not in V");
    if (r.ok) {
      r.detail = "not ps, 2 candidates, reductions to 1854a216c322 and 154216322, final "
                 + trace.final.w.str() + " in V after " + std::to_string(trace.steps.size())
                 + " steps";
    }
    return r;
  }

  Result example_k3() {
    Result r;
    auto   f = data("examplek3.txt");
    auto   w = over(f, "1234445666789");
    auto   u = img(f, "012340125678923401234");
    r.require(apply(f, w) == img(f, "a") + u.pow(3) + img(f, "b"), "image differs from a(...)^3b");
    r.require(is_ps_morphism(f).ps_morphism, "morphism not ps");
    auto cover = cover_with_root(f, w, 3, u);
    r.require(cover.has_value(), "cube not directly covered");
    if (cover) {
      r.require(!is_synchronized(decompose(f, *cover)), "decomposition synchronized");
    }
    auto search = brute_force_search(f, 3, 7);
    if (search.counterexample) {
      auto const& c = *search.counterexample;
      r.require(false,
                "image, ps and non-synchronized checks hold, but f(" + c.test_word.str() + ") = "
                    + apply(f, c.test_word).str() + " contains (" + c.image_power.root.str()
                    + ")^3 at position " + std::to_string(c.image_power.start));
    }
    if (r.ok) {
      r.detail = "image exact, ps, not synchronized, " + std::to_string(search.words_scanned)
                 + " words up to length 7 clean";
    }
    return r;
  }

  Result sweep() {
    Result      r;
    std::size_t total = 0, free = 0, dis = 0;
    auto        ab    = Alphabet::from_chars("ab");
    for (std::size_t len = 1; len <= 3; ++len) {
      for_each_uniform_morphism(ab, ab, len, [&](Morphism const& f) {
        ++total;
        auto verdict = decide(f, 3, DecideMode::testset);
        auto search  = brute_force_search(f, 3, 13);
        free += verdict.k_power_free ? 1 : 0;
        if (verdict.k_power_free == search.counterexample.has_value()) {
          ++dis;
          r.require(false, "disagreement on " + serialize_morphism(f));
        }
      });
    }
    r.require(total == 84, "expected 84 morphisms, swept " + std::to_string(total));
    r.require(dis == 0, std::to_string(dis) + " disagreements");
    r.detail = r.ok ? "84 morphisms, " + std::to_string(free) + " cube-free, 0 disagreements at max_len 13"
                    : r.detail;
    return r;
  }

  Result testset_size() {
    Result      r;
    auto        t      = enumerate_T(Alphabet::from_chars("ab"), 3);
    std::size_t longest = 0;
    for (auto const& w : t) {
      longest = std::max(longest, w.size());
    }
    r.require(t.size() == 238, "expected 238 words, got " + std::to_string(t.size()));
    r.require(longest <= 13, "word of length " + std::to_string(longest));
    auto filter = props::testset_matches_filter(2, 3);
    r.require(filter.ok(), "filter oracle: " + filter.summary());
    r.detail = r.ok ? "238 words, longest " + std::to_string(longest) + ", equal to the filter oracle" : r.detail;
    return r;
  }

  Result properties() {
    Result r;
    struct Suite {
      char const*                     name;
      std::function<props::Outcome()> run;
    };
    std::vector<Suite> suites{
        {"power detection", [] { return props::find_power_matches_definition(2, 12, {2, 3, 4}); }},
        {"ps and synchronization", [] { return props::ps_and_synchronization(500, 0x5eed); }},
        {"reduction", [] { return props::reduction_postconditions(3000, 0x7ace); }},
        {"conjugacy", [] { return props::conjugacy_reconstruction(1000, 0xc0de); }},
        {"internal factor", [] { return props::internal_factor_reconstruction(1000, 0xface); }},
        {"common factor", [] { return props::common_factor_bound(1000, 0xbeef); }},
    };
    std::ostringstream os;
    for (auto const& s : suites) {
      auto out = s.run();
      os << s.name << " " << out.checked << (s.name == suites.back().name ? "" : ", ");
      r.require(out.ok(), std::string(s.name) + ": " + out.summary());
    }
    if (r.ok) {
      r.detail = os.str();
    }
    return r;
  }

  Result thue() {
    Result r;
    auto   f = data("thue.txt");
    auto   w = over(f, "abba");
    auto   y = apply(f, w);
    r.require(y.str() == "abcacacabc", "image is " + y.str());
    auto p = find_k_power(y, 3);
    r.require(p && p->root.str() == "ca" && p->start == 3, "find_k_power did not report (ca)^3 at 3");
    r.require(is_k_power_free(w, 3), "abba should be cube-free");
    std::ostringstream out, err;
    std::istringstream in;
    int code = cli::run({"check", "--k", "3", "--word", "abcacacabc"}, out, err, in);
    r.require(code == cli::negative, "check exit code " + std::to_string(code));
    r.require(out.str().find("(ca)^3 at position 3") != std::string::npos, "check output: " + out.str());
    r.detail = r.ok ? "abba -> abcacacabc, check reports (ca)^3 at position 3" : r.detail;
    return r;
  }

}  // namespace

int main() {
  struct Criterion {
    int                     id;
    char const*             name;
    double                  limit;
    std::function<Result()> run;
  };
  std::vector<Criterion> criteria{
      {1, "example 1 reproduction", 1.0, example_one},
      {2, "example 2 reproduction", 1.0, example_two},
      {3, "example 3 reproduction", 1.0, example_three},
      {4, "5-uniform 9-letter cube-free example", 120.0, example_k3},
      {5, "exhaustive agreement sweep", 300.0, sweep},
      {6, "test-set size and length bound", 0.0, testset_size},
      {7, "property suites", 120.0, properties},
      {8, "Thue morphism sanity", 1.0, thue},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto   start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (std::exception const& e) {
      res.ok     = false;
      res.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.ok && c.limit > 0 && secs >= c.limit) {
      res.ok     = false;
      res.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s";
    }
    std::printf("%s [%d] %s (%.3f s): %s\n",
                res.ok ? "PASS" : "FAIL",
                c.id,
                c.name,
                secs,
                res.detail.c_str());
    std::fflush(stdout);
    failed += res.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
