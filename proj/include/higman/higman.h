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
// Good pairs in infinite sequences of words.
//
// Given a quasi-order ≼ on letters and a realizer G for the approximate
// monotone-subsequence principle over ≼, phi_bound computes a number Φ(u)
// such that some i < j < Φ(u) has u_i ≼* u_j, and find_good_pair scans below
// that bound. Φ is Ψ^N for the counterexample functional
//
//   N v γ = H(γ(H(0), ṽ_H)) + 2,   H = G(v̄, λg. γ(g(0), ṽ_g)),
//
// where v̄ and ṽ are the last letters and the remaining prefixes of the
// words of v.

#ifndef HIGMAN_HIGMAN_H_
#define HIGMAN_HIGMAN_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "higman/fuel.h"
#include "higman/orders.h"
#include "higman/selection.h"
#include "higman/seq.h"
#include "higman/zorn.h"

namespace higman {

template <class X>
using WordSeq = InfSeq<Word<X>>;

// G(x, ω): an index map that is increasing with ≼-increasing letters on
// 0..ω(G(x, ω)).
template <class X>
using SwqoRealizer =
    std::function<IndexMap(const InfSeq<X>&, const Omega&, Fuel&)>;

template <class X>
struct HigmanInstance {
  QuasiOrder<X> base;
  SwqoRealizer<X> G;
};

struct GoodPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  Embedding witness;
  std::uint64_t bound = 0;
};

using IndexPair = std::pair<std::uint64_t, std::uint64_t>;

// Applies fn pointwise. A finitely supported input stays finitely supported,
// provided fn maps 0_T to 0_U.
template <class T, class U>
InfSeq<U> map_seq(const InfSeq<T>& s, const std::string& name,
                  std::function<U(const T&)> fn) {
  if (s.finitely_supported()) {
    std::vector<U> prefix;
    prefix.reserve(s.prefix().size());
    for (const T& t : s.prefix()) prefix.push_back(fn(t));
    return InfSeq<U>::finite(std::move(prefix));
  }
  return InfSeq<U>::generator({}, name, [s, fn](std::uint64_t n) {
    return fn(s.at(n));
  });
}

// v̄: the last letter of each word, 0_X for the empty word.
template <class X>
InfSeq<X> last_letters(const WordSeq<X>& v) {
  return map_seq<Word<X>, X>(v, "last_letters", [](const Word<X>& w) {
    return w.empty() ? zero_of<X>() : w.back();
  });
}

// ṽ: each word without its last letter.
template <class X>
WordSeq<X> initial_parts(const WordSeq<X>& v) {
  return map_seq<Word<X>, Word<X>>(v, "initial_parts", [](const Word<X>& w) {
    return decompose(w).first;
  });
}

// ṽ_g = λn. ṽ_{g(n)}. Lazy, since every point costs an evaluation of g.
template <class X>
WordSeq<X> initial_parts_along(const WordSeq<X>& v, const IndexMap& g) {
  return WordSeq<X>::generator({}, "initial_parts_along",
                               [v, g](std::uint64_t n) {
                                 Word<X> w = v.at(g(n));
                                 if (!w.empty()) w.pop_back();
                                 return w;
                               });
}

// The case analysis turning a good pair of w = v|g(0) ∗ ṽ_g below k into a
// good pair of v below g(k) + 2. `inner` may be absent only when v_{g(0)} is
// empty. Throws ContractViolation if the result fails validation, which
// means the hypotheses on g, k and inner did not hold.
template <class X>
IndexPair resolve_pair(const WordSeq<X>& v, const IndexMap& g, std::uint64_t k,
                       const std::optional<IndexPair>& inner,
                       const QuasiOrder<X>& leq) {
  const std::uint64_t g0 = g(0);
  auto empty_at = [&v](std::uint64_t n) { return v.at(n).empty(); };
  IndexPair out;
  if (empty_at(g0)) {
    out = {g0, g0 + 1};
  } else {
    if (!inner) throw ContractViolation("resolve_pair needs an inner pair");
    const auto [i, j] = *inner;
    if (j < g0) {
      out = {i, j};
    } else if (i < g0) {
      const std::uint64_t gj = g(j - g0);
      out = empty_at(gj) ? IndexPair{gj, gj + 1} : IndexPair{i, gj};
    } else {
      const std::uint64_t gi = g(i - g0);
      const std::uint64_t gj = g(j - g0);
      if (empty_at(gi)) {
        out = {gi, gi + 1};
      } else if (empty_at(gj)) {
        out = {gj, gj + 1};
      } else {
        out = {gi, gj};
      }
    }
  }
  if (!(out.first < out.second) || out.second >= g(k) + 2 ||
      !embeds(v.at(out.first), v.at(out.second), leq)) {
    throw ContractViolation("resolve_pair produced an invalid pair");
  }
  return out;
}

// H_{v,γ} = G(v̄, ω_{v,γ}) with ω_{v,γ}(g) = γ(g(0), ṽ_g).
template <class X>
IndexMap make_H(const WordSeq<X>& v, const GammaFn<Word<X>>& gamma,
                const HigmanInstance<X>& inst, Fuel& fuel) {
  Omega omega = [v, gamma](const IndexMap& g) {
    return gamma(g(0), initial_parts_along(v, g));
  };
  return inst.G(last_letters(v), omega, fuel);
}

template <class X>
struct HigmanFunctionals {
  SeqFunctional<Word<X>> N;
  SeqFunctional<Word<X>> M;
  SeqTransform<Word<X>> W;
};

// N v γ = H(γ(H(0), ṽ_H)) + 2, M v γ = H(0), W v γ = ṽ_H for H = H_{v,γ}.
// `fuel` must outlive the returned functionals.
template <class X>
HigmanFunctionals<X> make_NMW(const HigmanInstance<X>& inst, Fuel& fuel) {
  Fuel* meter = &fuel;
  HigmanFunctionals<X> out;
  out.N = [inst, meter](const WordSeq<X>& v, const GammaFn<Word<X>>& gamma) {
    const IndexMap h = make_H(v, gamma, inst, *meter);
    return h(gamma(h(0), initial_parts_along(v, h))) + 2;
  };
  out.M = [inst, meter](const WordSeq<X>& v, const GammaFn<Word<X>>& gamma) {
    return make_H(v, gamma, inst, *meter)(0);
  };
  out.W = [inst, meter](const WordSeq<X>& v, const GammaFn<Word<X>>& gamma) {
    return initial_parts_along(v, make_H(v, gamma, inst, *meter));
  };
  return out;
}

template <class X>
PsiN<Word<X>> higman_psi(const HigmanInstance<X>& inst, Fuel& fuel) {
  return PsiN<Word<X>>(make_NMW(inst, fuel).N, prefix_order<X>(), fuel);
}

// Φ(u) = Ψ^N(u): some i < j < Φ(u) has u_i ≼* u_j.
template <class X>
std::uint64_t phi_bound(const WordSeq<X>& u, const HigmanInstance<X>& inst,
                        Fuel& fuel) {
  return higman_psi(inst, fuel)(u);
}

// The first (j, then i) ordered pair below `bound` with u_i ≼* u_j.
template <class X>
std::optional<GoodPair> scan_good_pair(const WordSeq<X>& u,
                                       std::uint64_t bound,
                                       const QuasiOrder<X>& leq) {
  std::vector<Word<X>> words = u.take(bound);
  for (std::uint64_t j = 1; j < bound; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (auto witness = embeds(words[i], words[j], leq)) {
        return GoodPair{i, j, std::move(*witness), bound};
      }
    }
  }
  return std::nullopt;
}

// The full realizer run for the Higman instance of Zorn's lemma, with
// P(s) = "s is bad". Its certificate is checked before returning.
template <class X>
ZLCertificate<Word<X>> higman_certificate(const WordSeq<X>& u,
                                          const HigmanInstance<X>& inst,
                                          const PsiN<Word<X>>& psi) {
  const HigmanFunctionals<X> nmw = make_NMW(inst, psi.fuel());
  ZLInputs<Word<X>> in;
  in.u_bar = u;
  in.N = nmw.N;
  in.M = nmw.M;
  in.W = nmw.W;
  QuasiOrder<X> leq = inst.base;
  in.P = [leq](const std::vector<Word<X>>& s) {
    return is_bad<X>(std::span<const Word<X>>(s), leq);
  };
  in.lhd = prefix_order<X>();
  return zl_realizer(in, psi);
}

template <class X>
ZLCertificate<Word<X>> higman_certificate(const WordSeq<X>& u,
                                          const HigmanInstance<X>& inst,
                                          Fuel& fuel) {
  return higman_certificate(u, inst, higman_psi(inst, fuel));
}

struct FindOptions {
  // Also run the full realizer and check its certificate.
  bool check_certificate = true;
};

// bound = Φ(u), then the first good pair below it. Throws GuaranteeViolated
// if there is none.
template <class X>
GoodPair find_good_pair(const WordSeq<X>& u, const HigmanInstance<X>& inst,
                        Fuel& fuel, FindOptions options = {}) {
  const PsiN<Word<X>> psi = higman_psi(inst, fuel);
  const std::uint64_t bound = psi(u);
  if (options.check_certificate) higman_certificate(u, inst, psi);
  auto pair = scan_good_pair(u, bound, inst.base);
  if (!pair) {
    throw GuaranteeViolated("no good pair below the bound " +
                            std::to_string(bound));
  }
  return *pair;
}

// Boolean letters under equality, with the selection-function realizer.
HigmanInstance<Bit> boolean_instance();

// A single letter; any two letters are related and the identity map is a
// valid G for every ω.
struct Unary {
  friend auto operator<=>(const Unary&, const Unary&) = default;
};
using UnaryWord = Word<Unary>;

HigmanInstance<Unary> unary_instance();
UnaryWord unary_word(std::size_t length);

}  // namespace higman

#endif  // HIGMAN_HIGMAN_H_
