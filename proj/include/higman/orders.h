/* Copyright 2026 The Higman Extract Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
// Word embedding, the strict prefix order, badness of finite lists of words
// and the lexicographic extension of a strict order to infinite sequences.

#ifndef HIGMAN_ORDERS_H_
#define HIGMAN_ORDERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "higman/seq.h"

namespace higman {

template <class X>
using Word = std::vector<X>;

// A decidable quasi-order on letters: leq(a, b) means a ≼ b.
template <class X>
using QuasiOrder = std::function<bool(const X&, const X&)>;

// A decidable strict order: lhd(a, b) means a ⊲ b.
template <class X>
using StrictOrder = std::function<bool(const X&, const X&)>;

// Increasing map from positions of the embedded word to positions of the
// host word: witness[i] = f(i).
using Embedding = std::vector<std::size_t>;

// Greedy left-to-right embedding; matching each letter at the earliest
// admissible host position never rules out a later match.
template <class X>
std::optional<Embedding> embeds(const Word<X>& a, const Word<X>& b,
                                const QuasiOrder<X>& leq) {
  Embedding witness;
  witness.reserve(a.size());
  std::size_t pos = 0;
  for (const X& letter : a) {
    while (pos < b.size() && !leq(letter, b[pos])) ++pos;
    if (pos == b.size()) return std::nullopt;
    witness.push_back(pos++);
  }
  return witness;
}

namespace detail {

template <class X>
bool brute_embeds_from(const Word<X>& a, const Word<X>& b,
                       const QuasiOrder<X>& leq, std::size_t i,
                       std::size_t from) {
  if (i == a.size()) return true;
  for (std::size_t p = from; p < b.size(); ++p) {
    if (leq(a[i], b[p]) && brute_embeds_from(a, b, leq, i + 1, p + 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Reference semantics for embeds: tries every strictly increasing map.
// Exponential; only for oracles over short words.
template <class X>
bool brute_embeds(const Word<X>& a, const Word<X>& b,
                  const QuasiOrder<X>& leq) {
  if (a.size() > b.size()) return false;
  return detail::brute_embeds_from(a, b, leq, 0, 0);
}

template <class X>
bool is_strict_prefix(const Word<X>& a, const Word<X>& b) {
  if (a.size() >= b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

template <class X>
StrictOrder<Word<X>> prefix_order() {
  return [](const Word<X>& a, const Word<X>& b) {
    return is_strict_prefix(a, b);
  };
}

// P(s): no pair i < j < |s| with s_i ≼* s_j.
template <class X>
bool is_bad(std::span<const Word<X>> s, const QuasiOrder<X>& leq) {
  for (std::size_t j = 1; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (embeds(s[i], s[j], leq)) return false;
    }
  }
  return true;
}

// w ↦ (all but the last letter, last letter); the empty word maps to
// (⟨⟩, 0_X).
template <class X>
std::pair<Word<X>, X> decompose(const Word<X>& w) {
  if (w.empty()) return {Word<X>{}, zero_of<X>()};
  return {Word<X>(w.begin(), w.end() - 1), w.back()};
}

// Least n < bound with u|n = v|n and u_n ⊲ v_n, i.e. a witness that u lies
// lexicographically below v, found within the first `bound` positions.
template <class X>
std::optional<std::uint64_t> lex_less_witnessed(const InfSeq<X>& u,
                                                const InfSeq<X>& v,
                                                std::uint64_t bound,
                                                const StrictOrder<X>& lhd) {
  for (std::uint64_t n = 0; n < bound; ++n) {
    const X un = u.at(n);
    const X vn = v.at(n);
    if (un == vn) continue;
    if (lhd(un, vn)) return n;
    return std::nullopt;
  }
  return std::nullopt;
}

template <class X>
std::optional<std::uint64_t> lex_less_witnessed(const InfSeq<Word<X>>& u,
                                                const InfSeq<Word<X>>& v,
                                                std::uint64_t bound) {
  return lex_less_witnessed<Word<X>>(u, v, bound, prefix_order<X>());
}

// The boolean alphabet. Letters are 0/1 bytes; 0 is the canonical zero.
using Bit = std::uint8_t;
using BitWord = Word<Bit>;

QuasiOrder<Bit> bit_equality();

// "0110" <-> {0,1,1,0}. Throws std::invalid_argument on other characters.
BitWord parse_bits(const std::string& text);
std::string format_bits(const BitWord& w);

}  // namespace higman

#endif  // HIGMAN_ORDERS_H_
