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
#include <tuple>
#include <utility>

#include "kpf/decomp.hpp"
#include "kpf/testset.hpp"

namespace kpf {

  namespace {
    [[noreturn]] void broken(std::string const& what) {
      fail(Errc::internal_consistency, "decomposition invariant violated: " + what);
    }

    Word letter_word(AlphabetPtr const& alphabet, Letter x) {
      return Word(alphabet, {x});
    }

    std::size_t ceil_div(std::size_t a, std::size_t b) {
      return (a + b - 1) / b;
    }

    void require_k(unsigned k) {
      if (k < 3) {
        fail(Errc::invalid_k,
             "decompositions are defined for k >= 3, got " + std::to_string(k));
      }
    }
  }  // namespace

  std::vector<DirectCover> find_direct_covers(Morphism const& f,
                                              Word const&     w,
                                              unsigned        k) {
    if (k < 2) {
      fail(Errc::invalid_k, "exponent must be at least 2");
    }
    std::size_t const L     = require_uniform_positive(f);
    Word const        image = apply(f, w);
    auto const&       img   = image.letters();
    std::size_t const n     = img.size();

    std::vector<DirectCover> out;
    for (std::size_t p0 = 0; p0 < L && p0 <= n; ++p0) {
      for (std::size_t ulen = 1; p0 + ulen * k <= n; ++ulen) {
        std::size_t const sk = n - p0 - ulen * k;
        if (sk >= L) {
          continue;
        }
        bool periodic = true;
        for (std::size_t j = p0; j + ulen < p0 + ulen * k; ++j) {
          if (img[j] != img[j + ulen]) {
            periodic = false;
            break;
          }
        }
        if (periodic) {
          out.push_back(DirectCover{w,
                                    image.sub(p0, ulen),
                                    image.sub(0, p0),
                                    image.sub(n - sk, sk),
                                    k});
        }
      }
    }
    return out;
  }

  Decomposition decompose(Morphism const& f, DirectCover const& cover) {
    require_k(cover.k);
    std::size_t const L = require_uniform_positive(f);
    unsigned const    k = cover.k;
    Word const&       w = cover.w;
    if (w.size() <= k) {
      fail(Errc::word_too_short,
           "a covered " + std::to_string(k) + "-power needs a word of length at least "
               + std::to_string(k + 1));
    }
    if (cover.u.empty() || apply(f, w) != cover.p0 + cover.u.pow(k) + cover.sk
        || cover.p0.size() >= L || cover.sk.size() >= L) {
      fail(Errc::internal_consistency, "not a direct cover");
    }

    std::size_t const        plen = cover.p0.size();
    std::size_t const        ulen = cover.u.size();
    std::vector<std::size_t> idx(k + 1);  // 1-based i_l
    for (unsigned l = 0; l <= k; ++l) {
      idx[l] = std::max<std::size_t>(1, ceil_div(plen + l * ulen, L));
      if (l > 0 && idx[l] <= idx[l - 1]) {
        broken("boundary indices are not strictly increasing");
      }
    }
    if (idx[k] != w.size()) {
      broken("last boundary index differs from |w|");
    }

    Decomposition d;
    d.k = k;
    d.w = w;
    d.u = cover.u;
    for (unsigned l = 0; l <= k; ++l) {
      Letter a = w[idx[l] - 1];
      d.a.push_back(a);
      if (l > 0) {
        d.blocks.push_back(w.sub(idx[l - 1], idx[l] - idx[l - 1] - 1));
      }
      // f(w[1..i_l - 1]) p_l = p0 u^l
      std::size_t const pl = plen + l * ulen - L * (idx[l] - 1);
      Word const&       fa = f.image(a);
      d.p.push_back(fa.sub(0, pl));
      d.s.push_back(fa.sub(pl, L - pl));
    }
    validate(f, d);
    return d;
  }

  void validate(Morphism const& f, Decomposition const& d) {
    std::size_t const L = require_uniform_positive(f);
    unsigned const    k = d.k;
    if (d.a.size() != k + 1 || d.blocks.size() != k || d.p.size() != k + 1
        || d.s.size() != k + 1) {
      broken("component counts do not match k");
    }
    if (d.u.empty()) {
      broken("empty root");
    }
    Word rebuilt = letter_word(d.w.alphabet(), d.a[0]);
    for (unsigned i = 1; i <= k; ++i) {
      rebuilt += d.blocks[i - 1];
      rebuilt += letter_word(d.w.alphabet(), d.a[i]);
    }
    if (rebuilt != d.w) {
      broken("(1) w = a_0 w_1 a_1 ... w_k a_k");
    }
    for (unsigned i = 0; i <= k; ++i) {
      if (f.image(d.a[i]) != d.p[i] + d.s[i]) {
        broken("(2) f(a_" + std::to_string(i) + ") = p_i s_i");
      }
    }
    if (d.s[0].empty()) {
      broken("(3) s_0 non-empty");
    }
    for (unsigned i = 1; i <= k; ++i) {
      if (d.p[i].empty()) {
        broken("(4) p_" + std::to_string(i) + " non-empty");
      }
      if (d.s[i - 1] + apply(f, d.blocks[i - 1]) + d.p[i] != d.u) {
        broken("(5) u = s_" + std::to_string(i - 1) + " f(w_" + std::to_string(i)
               + ") p_" + std::to_string(i));
      }
    }
    if (d.p[0].size() >= L || d.s[k].size() >= L) {
      broken("cover margins must be shorter than the uniform length");
    }
    auto [lo, hi] = std::minmax_element(
        d.blocks.begin(), d.blocks.end(), [](Word const& x, Word const& y) {
          return x.size() < y.size();
        });
    if (hi->size() - lo->size() > 1) {
      broken("block lengths differ by more than one");
    }
  }

  bool is_synchronized(Decomposition const& d) {
    for (std::size_t i = 1; i + 2 <= d.k; ++i) {
      if (d.s[i].size() == d.s[i + 1].size()) {
        return true;
      }
    }
    return false;
  }

  namespace {

    // Cuts every block against |s_{l-1} f(x_l)| = bound and
    // |s_{l-1} f(x_l y_l)| = bound2.
    std::vector<BlockCut> cut_blocks(Decomposition const& d,
                                     std::size_t          L,
                                     std::size_t          bound,
                                     std::size_t          bound2) {
      std::vector<BlockCut> cuts;
      for (std::size_t i = 1; i <= d.k; ++i) {
        Word const&       blk = d.block(i);
        std::size_t const s   = d.s[i - 1].size();
        std::size_t const xl  = s > bound ? 0 : std::min(blk.size(), (bound - s) / L);
        std::size_t const yl =
            s + L * xl > bound2 ? 0 : std::min(blk.size() - xl, (bound2 - s) / L - xl);
        cuts.push_back(
            BlockCut{blk.sub(0, xl), blk.sub(xl, yl), blk.sub(xl + yl, blk.size() - xl - yl)});
      }
      return cuts;
    }

    bool same_result(std::vector<BlockCut> const& x, std::vector<BlockCut> const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].x + x[i].z != y[i].x + y[i].z) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<ReductionCandidate> reduction_candidates(Decomposition const& d) {
    std::size_t const L = d.p[0].size() + d.s[0].size();
    std::vector<ReductionCandidate> out;
    for (std::size_t ell = 1; ell <= d.k; ++ell) {
      Word const& blk = d.block(ell);
      // With p_0 empty, f(a_0) = s_0 ends the reading before block 1, so a_0
      // can stand as the first occurrence.
      bool const lead = ell == 1 && d.p[0].empty();
      if (blk.empty()) {
        continue;
      }
      std::size_t const q = blk.alphabet()->size();
      for (Letter x = 0; x < q; ++x) {
        std::size_t first = blk.size(), second = blk.size();
        for (std::size_t j = 0; j < blk.size(); ++j) {
          if (blk[j] != x) {
            continue;
          }
          if (first == blk.size()) {
            first = j;
          } else {
            second = j;
            break;
          }
        }
        if (lead && x == d.a[0] && first < blk.size()) {
          out.push_back(ReductionCandidate{ell,
                                           x,
                                           blk.sub(0, 0),
                                           blk.sub(0, first + 1),
                                           blk.sub(first + 1, blk.size() - first - 1),
                                           d.s[0].size()});
          continue;
        }
        if (second == blk.size()) {
          continue;
        }
        out.push_back(ReductionCandidate{ell,
                                         x,
                                         blk.sub(0, first + 1),
                                         blk.sub(first + 1, second - first),
                                         blk.sub(second + 1, blk.size() - second - 1),
                                         d.s[ell - 1].size() + L * (first + 1)});
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return std::tie(x.key, x.ell, x.letter) < std::tie(y.key, y.ell, y.letter);
    });
    if (L == 0) {
      return out;
    }
    // Candidates leaving the same blocks x_i z_i are one reduction.
    std::vector<ReductionCandidate>    unique;
    std::vector<std::vector<BlockCut>> seen;
    for (auto& c : out) {
      auto cuts = cut_blocks(d, L, c.key, c.key + L * c.y.size());
      bool dup  = std::any_of(seen.begin(), seen.end(), [&](auto const& s) { return same_result(s, cuts); });
      if (!dup) {
        seen.push_back(std::move(cuts));
        unique.push_back(std::move(c));
      }
    }
    return unique;
  }

  ReductionStep reduce_step(Morphism const&      f,
                            Decomposition const& d,
                            std::size_t          candidate) {
    std::size_t const L = require_uniform_positive(f);
    if (!is_injective_uniform(f)) {
      fail(Errc::not_injective, "reduction needs an injective morphism");
    }
    auto cands = reduction_candidates(d);
    if (candidate >= cands.size()) {
      fail(Errc::no_candidate,
           cands.empty() ? "every block has pairwise distinct letters"
                         : "candidate index out of range");
    }
    auto const&       c      = cands[candidate];
    std::size_t const ell    = c.ell;
    std::size_t const bound  = c.key;                     // |s_{l-1} f(x_l)|
    std::size_t const bound2 = bound + L * c.y.size();    // |s_{l-1} f(x_l y_l)|

    if (c.x.empty() ? !(ell == 1 && d.p[0].empty() && d.a[0] == c.letter)
                    : c.x[c.x.size() - 1] != c.letter) {
      broken("x_l does not end with the letter");
    }
    if (c.y.empty() || c.y[c.y.size() - 1] != c.letter) {
      broken("y_l does not end with the letter");
    }

    ReductionStep step{ell, c.letter, cut_blocks(d, L, bound, bound2), d, d};
    Decomposition& out = step.after;
    out.blocks.clear();
    for (std::size_t i = 1; i <= d.k; ++i) {
      auto const&       cut = step.cuts[i - 1];
      std::size_t const s   = d.s[i - 1].size();
      if (s > bound) {
        broken("reduction bound below |s_{i-1}|");
      }
      if (cut.y.size() != c.y.size()) {
        broken("|y_" + std::to_string(i) + "| != |y_l|");
      }
      std::size_t const reach = s + L * cut.x.size();
      if (!(reach + L > bound && reach <= bound)) {
        broken("|s_{l-1} f(x_l)| - L < |s_{i-1} f(x_i)| <= |s_{l-1} f(x_l)| fails");
      }
      out.blocks.push_back(cut.x + cut.z);
    }
    auto const& own = step.cuts[ell - 1];
    if (own.x != c.x || own.y != c.y || own.z != c.z) {
      broken("recomputed cut of block l disagrees with the candidate");
    }

    Word w2 = letter_word(d.w.alphabet(), d.a[0]);
    for (std::size_t i = 1; i <= d.k; ++i) {
      w2 += out.blocks[i - 1];
      w2 += letter_word(d.w.alphabet(), d.a[i]);
    }
    out.w = std::move(w2);
    out.u = d.s[ell - 1] + apply(f, own.x + own.z) + d.p[ell];
    validate(f, out);
    if (apply(f, out.w) != d.p[0] + out.u.pow(d.k) + d.s[d.k]) {
      broken("f(w') != p_0 u'^k s_k");
    }
    if (out.w.size() >= d.w.size()) {
      broken("|w'| >= |w|");
    }
    return step;
  }

  ReductionTrace reduce_fully(Morphism const& f, Decomposition d) {
    ReductionTrace trace;
    std::size_t    limit = d.w.size();
    while (!reduction_candidates(d).empty()) {
      auto step = reduce_step(f, d);
      d         = step.after;
      trace.steps.push_back(std::move(step));
      if (trace.steps.size() >= limit) {
        broken("reduction did not terminate within |w| steps");
      }
    }
    if (!in_V(d.w.view(), d.k)) {
      broken("fully reduced word does not split into distinct-letter blocks");
    }
    trace.final = std::move(d);
    return trace;
  }

  ReductionTrace reduce_fully(Morphism const& f, DirectCover const& cover) {
    return reduce_fully(f, decompose(f, cover));
  }

  bool reduction_edges_consistent(ReductionStep const& step) {
    auto const&       d    = step.before;
    std::size_t const ell  = step.ell;
    auto const&       own  = step.cuts[ell - 1];
    bool const        lead = own.x.empty();
    // A leading step reads a_0 as x_l and the empty word as s_{l-1}.
    bool const        x_is_letter =
        lead || (own.x.size() == 1 && own.x[0] == step.letter);
    std::size_t const s_before = lead ? 0 : d.s[ell - 1].size();
    for (std::size_t q = 1; q <= step.cuts.size(); ++q) {
      auto const& cut = step.cuts[q - 1];
      if (cut.x.empty() && q != ell) {
        if (!x_is_letter || !(s_before < d.s[q - 1].size())) {
          return false;
        }
      }
      if (cut.z.empty()) {
        if (!own.z.empty() || !(d.p[ell].size() <= d.p[q].size())) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace kpf
