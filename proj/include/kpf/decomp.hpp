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

// Alignment of a k-power u^k inside the image f(w) of a uniform morphism
// against the letter-image boundaries, and the length-reducing rewrite of
// such alignments.
//
// Notation, with L the uniform length of f:
//
//   w    = a_0 w_1 a_1 ... w_k a_k
//   f(a_i) = p_i s_i
//   u    = s_{i-1} f(w_i) p_i           (1 <= i <= k)
//   f(w) = p_0 u^k s_k,  |p_0| < L,  |s_k| < L
//
// with s_0 and every p_i (i >= 1) non-empty.

#ifndef KPF_DECOMP_HPP_
#define KPF_DECOMP_HPP_

#include <cstddef>
#include <vector>

#include "kpf/morphisms.hpp"
#include "kpf/words.hpp"

namespace kpf {

  //! f(w) = p0 u^k sk with |p0| < L and |sk| < L.
  struct DirectCover {
    Word     w;
    Word     u;
    Word     p0;
    Word     sk;
    unsigned k = 0;
  };

  struct Decomposition {
    unsigned            k = 0;
    Word                w;
    Word                u;
    std::vector<Letter> a;       // a_0 .. a_k
    std::vector<Word>   blocks;  // w_1 .. w_k
    std::vector<Word>   p;       // p_0 .. p_k
    std::vector<Word>   s;       // s_0 .. s_k

    Word const& block(std::size_t i) const {
      return blocks.at(i - 1);
    }
  };

  //! Every direct cover of a k-power by f(w), by |p0| then |u|.
  std::vector<DirectCover> find_direct_covers(Morphism const& f,
                                              Word const&     w,
                                              unsigned        k);

  //! Builds the decomposition of a direct cover, taking i_l as the least
  //! non-zero index with p0 u^l a prefix of f(w[1..i_l]). Needs k >= 3 and
  //! f uniform; throws Errc::word_too_short when |w| <= k.
  Decomposition decompose(Morphism const& f, DirectCover const& cover);

  //! Throws Errc::internal_consistency naming the first violated condition:
  //! the five defining identities, the direct-cover margins, and the block
  //! length spread of at most one.
  void validate(Morphism const& f, Decomposition const& d);

  //! |s_i| = |s_{i+1}| for some 1 <= i <= k - 2.
  bool is_synchronized(Decomposition const& d);

  //! A repeated letter inside block l: w_l = x y z where x ends at the
  //! first occurrence of the letter and y at the second. When p_0 is empty
  //! the letter a_0 counts as an occurrence in front of block 1, giving
  //! x = ε and y ending at the first occurrence inside w_1.
  struct ReductionCandidate {
    std::size_t ell;
    Letter      letter;
    Word        x;
    Word        y;
    Word        z;
    std::size_t key;  // |s_{l-1} f(x)|
  };

  //! Sorted by key, then l, then letter: the first entry is the leftmost
  //! reduction. Candidates leaving identical blocks x_i z_i are kept once.
  //! Empty iff every block (a_0 w_1 for block 1 when p_0 is empty) has
  //! pairwise distinct letters.
  std::vector<ReductionCandidate> reduction_candidates(Decomposition const& d);

  struct BlockCut {
    Word x;
    Word y;
    Word z;
  };

  struct ReductionStep {
    std::size_t           ell;
    Letter                letter;
    std::vector<BlockCut> cuts;  // for blocks 1 .. k
    Decomposition         before;
    Decomposition         after;
  };

  //! Removes a segment y_i of equal length from every block, keyed on
  //! reduction_candidates(d)[candidate]. Every postcondition (equal |y_i|,
  //! the length bounds on s_{i-1} f(x_i), the decomposition identities for
  //! the new pair, strict shrinking) is re-checked and reported as
  //! Errc::internal_consistency. Requires f uniform and injective.
  ReductionStep reduce_step(Morphism const&      f,
                            Decomposition const& d,
                            std::size_t          candidate = 0);

  struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Decomposition              final;
  };

  //! Repeats the leftmost reduction until every block has distinct letters.
  //! The final word then splits as required for the test-set.
  ReductionTrace reduce_fully(Morphism const& f, DirectCover const& cover);
  ReductionTrace reduce_fully(Morphism const& f, Decomposition d);

  //! If some x_q is empty then x_l = a and |s_{l-1}| < |s_{q-1}|; if some z_q
  //! is empty then z_l is empty and |p_l| <= |p_q|. A step keyed on a_0
  //! counts as x_l = a with s_{l-1} read as empty.
  bool reduction_edges_consistent(ReductionStep const& step);

}  // namespace kpf

#endif  // KPF_DECOMP_HPP_
