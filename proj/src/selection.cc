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
#include "higman/selection.h"

#include <algorithm>
#include <utility>

namespace higman {

IndexMap::IndexMap(NatFn fn, bool inflationary)
    : state_(std::make_shared<State>()), inflationary_(inflationary) {
  state_->fn = std::move(fn);
  state_->small.fill(kUnset);
}

IndexMap IndexMap::identity() {
  return IndexMap([](std::uint64_t n) { return n; }, true);
}

std::uint64_t IndexMap::operator()(std::uint64_t n) const {
  State& st = *state_;
  if (n < kInline) {
    if (st.small[n] == kUnset) st.small[n] = st.fn(n);
    return st.small[n];
  }
  if (n < kDenseLimit) {
    const std::uint64_t slot = n - kInline;
    if (slot < st.dense.size() && st.dense[slot] != kUnset) {
      return st.dense[slot];
    }
    const std::uint64_t value = st.fn(n);
    if (st.dense.size() <= slot) {
      st.dense.resize(std::max<std::uint64_t>(slot + 1, 2 * st.dense.size()),
                      kUnset);
    }
    st.dense[slot] = value;
    return value;
  }
  auto it = st.sparse.find(n);
  if (it != st.sparse.end()) return it->second;
  const std::uint64_t value = st.fn(n);
  st.sparse.emplace(n, value);
  return value;
}

SelectionOutcome sel_product(const SelectionFn& eps, const SelectionFn& delta,
                             const Outcome2& q) {
  const IndexMap replies(
      [delta, q](std::uint64_t i) {
        return delta([&q, i](std::uint64_t j) { return q(i, j); });
      },
      false);
  NatFn b = [replies](std::uint64_t i) { return replies(i); };
  const std::uint64_t a = eps([&](std::uint64_t i) { return q(i, b(i)); });
  return {a, b(a), b};
}

LemWitness lem_sigma2(const NatPredicate2& P, const LemCounter& phi,
                      const LemCounter& psi) {
  const NatFn zero = zero_of<NatFn>();
  NatFn h_right = [phi, zero](std::uint64_t i) { return phi(false, i, zero); };
  const std::uint64_t n_left = psi(true, 0, h_right);
  if (P(n_left, phi(false, n_left, zero))) return {false, n_left, zero};
  return {true, 0, h_right};
}

bool lem_contract_holds(const NatPredicate2& P, const LemCounter& phi,
                        const LemCounter& psi, const LemWitness& w) {
  if (!w.b) return P(w.n, phi(false, w.n, w.h));
  const std::uint64_t m = psi(true, w.n, w.h);
  return !P(m, w.h(m));
}

EventuallyConstant eventually_constant_realizer(const InfSeq<Bit>& x,
                                                const ValueProbe& xi) {
  // Both players see maps of the form j ↦ max(i, j) or i ↦ max(i, b[i]),
  // which never go below their argument. The returned f keeps b alive and b
  // calls back into ξ, so the closures capture by value.
  SelectionFn eps = [xi](const NatFn& p) { return xi(1, IndexMap(p, true)); };
  SelectionFn delta = [xi](const NatFn& p) {
    return xi(0, IndexMap(p, true));
  };
  Outcome2 q = [](std::uint64_t i, std::uint64_t j) { return std::max(i, j); };
  SelectionOutcome played = sel_product(eps, delta, q);

  EventuallyConstant out;
  out.a = played.a;
  out.b_at_a = played.b_at_a;
  if (x.at(std::max(played.a, played.b_at_a)) == 0) {
    const std::uint64_t a = played.a;
    out.c = 0;
    out.f = IndexMap([a](std::uint64_t i) { return std::max(a, i); }, true);
  } else {
    NatFn b = played.b;
    out.c = 1;
    out.f =
        IndexMap([b](std::uint64_t i) { return std::max(i, b(i)); }, true);
  }
  return out;
}

IndexMap monotone_from_pointwise(const IndexMap& f) {
  auto values = std::make_shared<std::vector<std::uint64_t>>();
  return IndexMap(
      [f, values](std::uint64_t n) {
        if (values->empty()) values->push_back(f(0));
        while (values->size() <= n) values->push_back(f(values->back() + 1));
        return (*values)[n];
      },
      f.inflationary());
}

IndexMap swqo_bool_realizer(const InfSeq<Bit>& x, const Omega& omega,
                            Fuel& fuel) {
  // ξ(c, f): the first test point among 0, g(0)+1, ..., g(k−1)+1 where f
  // fails to hit a c-valued index at or beyond it, k = ω(g) for
  // g = monotone_from_pointwise(f). 0 when every test point passes.
  Fuel* meter = &fuel;
  ValueProbe xi = [x, omega, meter](Bit c,
                                    const IndexMap& f) -> std::uint64_t {
    const IndexMap g = monotone_from_pointwise(f);
    const IndexMap metered(
        [meter, g](std::uint64_t n) {
          meter->consume();
          return g(n);
        },
        g.inflationary());
    meter->consume();
    const std::uint64_t k = omega(metered);
    auto fails = [&](std::uint64_t n) {
      const std::uint64_t fn = f(n);
      return !(fn >= n && x.at(fn) == c);
    };
    if (fails(0)) return 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      meter->consume();
      const std::uint64_t n = g(i) + 1;
      if (fails(n)) return n;
    }
    return 0;
  };
  EventuallyConstant ec = eventually_constant_realizer(x, xi);
  return monotone_from_pointwise(ec.f);
}

}  // namespace higman
