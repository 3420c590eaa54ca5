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
// Realizers for the boolean monotone-subsequence principle: the binary
// product of selection functions, the Σ⁰₂ excluded-middle witness, the
// eventually-constant-value realizer and the assembled realizer G that, for a
// boolean sequence x and a counterexample functional ω, returns an index map
// g that is increasing with constant x-values on 0..ω(g).

#ifndef HIGMAN_SELECTION_H_
#define HIGMAN_SELECTION_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "higman/fuel.h"
#include "higman/orders.h"
#include "higman/seq.h"

namespace higman {

using NatFn = std::function<std::uint64_t(std::uint64_t)>;
using SelectionFn = std::function<std::uint64_t(const NatFn&)>;
using Outcome2 = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

// A memoized function ℕ→ℕ. `inflationary` records the promise f(n) ≥ n for
// every n, which lets callers bound the support of sequences indexed by f.
class IndexMap {
 public:
  IndexMap(NatFn fn, bool inflationary);

  static IndexMap identity();

  std::uint64_t operator()(std::uint64_t n) const;
  bool inflationary() const { return inflationary_; }

 private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  // Arguments below kInline are cached in place, those below kDenseLimit in
  // `dense`, the rest in `sparse`.
  static constexpr std::uint64_t kInline = 32;
  static constexpr std::uint64_t kDenseLimit = 1 << 16;

  struct State {
    NatFn fn;
    std::array<std::uint64_t, kInline> small;
    std::vector<std::uint64_t> dense;
    std::map<std::uint64_t, std::uint64_t> sparse;
  };
  std::shared_ptr<State> state_;
  bool inflationary_;
};

// Counterexample functional ω : (ℕ→ℕ)→ℕ.
using Omega = std::function<std::uint64_t(const IndexMap&)>;

// Result of (ε ⊗ δ)(q). `b` is the second player's memoized reply b[i].
struct SelectionOutcome {
  std::uint64_t a = 0;
  std::uint64_t b_at_a = 0;
  NatFn b;
};

// b[i] := δ(λj.q(i,j)); a := ε(λi.q(i,b[i])); returns (a, b[a]).
SelectionOutcome sel_product(const SelectionFn& eps, const SelectionFn& delta,
                             const Outcome2& q);

// A witness (b, n, h) for the functional interpretation of Σ⁰₂ excluded
// middle against counterexample functionals φ, ψ.
struct LemWitness {
  bool b = false;
  std::uint64_t n = 0;
  NatFn h;
};

using NatPredicate2 = std::function<bool(std::uint64_t, std::uint64_t)>;
using LemCounter =
    std::function<std::uint64_t(bool, std::uint64_t, const NatFn&)>;

LemWitness lem_sigma2(const NatPredicate2& P, const LemCounter& phi,
                      const LemCounter& psi);

// b = 0 → P(n, φ 0 n h);  b = 1 → ¬P(ψ 1 n h, h(ψ 1 n h)).
bool lem_contract_holds(const NatPredicate2& P, const LemCounter& phi,
                        const LemCounter& psi, const LemWitness& w);

// ξ : 𝔹 → (ℕ→ℕ) → ℕ, probing a candidate (c, f).
using ValueProbe = std::function<std::uint64_t(Bit, const IndexMap&)>;

struct EventuallyConstant {
  Bit c = 0;
  IndexMap f = IndexMap::identity();
  std::uint64_t a = 0;
  std::uint64_t b_at_a = 0;
};

// Returns (c, f) with f(ξcf) ≥ ξcf and x_{f(ξcf)} = c. Both candidate maps
// satisfy f(n) ≥ n everywhere, so f is always inflationary.
EventuallyConstant eventually_constant_realizer(const InfSeq<Bit>& x,
                                                const ValueProbe& xi);

// g(0) = f(0), g(n+1) = f(g(n)+1). Inflationary whenever f is.
IndexMap monotone_from_pointwise(const IndexMap& f);

// G(x, ω): g with g(i) < g(j) and x_{g(i)} = x_{g(j)} for all i < j ≤ ω(g).
// Every ω call and every point ω reads from g costs one unit of fuel.
IndexMap swqo_bool_realizer(const InfSeq<Bit>& x, const Omega& omega,
                            Fuel& fuel);

// Direct check of the realizer contract: for all i < j ≤ ω(g),
// g(i) < g(j) and leq(x_{g(i)}, x_{g(j)}).
template <class X>
bool swqo_contract_holds(const InfSeq<X>& x, const Omega& omega,
                         const IndexMap& g, const QuasiOrder<X>& leq) {
  const std::uint64_t k = omega(g);
  for (std::uint64_t j = 1; j <= k; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (!(g(i) < g(j)) || !leq(x.at(g(i)), x.at(g(j)))) return false;
    }
  }
  return true;
}

}  // namespace higman

#endif  // HIGMAN_SELECTION_H_
