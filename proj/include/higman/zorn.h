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
// A realizer for the approximate form of Zorn's lemma over the lexicographic
// order on sequences: given ū and counterexample functionals N, M, W it
// returns n, v, γ with
//
//   P̄(ū, n) → P̄(v, N v γ) ∧ C(v, γ, M v γ, W v γ),
//   C(v, γ, m, w) :≡ w_0 ⊲ v_m → ¬P̄(v|m ∗ w, γ m w),
//
// where P̄(u, n) = P(u|n). The bound n is Ψ^N(ū), an explicitly controlled
// recursion with body and control N(α_0, α_1); v is the limit of a controlled
// learning procedure started at ū.

#ifndef HIGMAN_ZORN_H_
#define HIGMAN_ZORN_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "higman/fuel.h"
#include "higman/learning.h"
#include "higman/open_rec.h"
#include "higman/orders.h"
#include "higman/seq.h"

namespace higman {

// γ : ℕ → X^ℕ → ℕ.
template <class X>
using GammaFn = std::function<std::uint64_t(std::uint64_t, const InfSeq<X>&)>;

// Shapes of N, M and of W.
template <class X>
using SeqFunctional =
    std::function<std::uint64_t(const InfSeq<X>&, const GammaFn<X>&)>;
template <class X>
using SeqTransform =
    std::function<InfSeq<X>(const InfSeq<X>&, const GammaFn<X>&)>;

// A decidable predicate on finite sequences.
template <class X>
using FinitePredicate = std::function<bool(const std::vector<X>&)>;

template <class X>
bool prefix_holds(const FinitePredicate<X>& P, const InfSeq<X>& u,
                  std::uint64_t n) {
  return P(u.take(n));
}

template <class X>
bool minimality_holds(const FinitePredicate<X>& P, const StrictOrder<X>& lhd,
                      const InfSeq<X>& v, const GammaFn<X>& gamma,
                      std::uint64_t m, const InfSeq<X>& w) {
  if (!lhd(w.at(0), v.at(m))) return true;
  return !prefix_holds(P, InfSeq<X>::splice(v, m, w), gamma(m, w));
}

// Ψ^N together with the γ_u and φ built from it. Copies share one memo.
// Requires 0_X to be ⊲-minimal.
template <class X>
class PsiN {
 public:
  PsiN(SeqFunctional<X> N, StrictOrder<X> lhd, Fuel& fuel)
      : N_(std::move(N)), lhd_(std::move(lhd)), rec_(make_body(N_), lhd_, fuel) {}

  std::uint64_t operator()(const InfSeq<X>& u) const { return rec_(u); }

  // γ_u(m, w) = Ψ^N(u|m ∗ w) if w_0 ⊲ u_m, else 0.
  GammaFn<X> gamma(const InfSeq<X>& u) const {
    auto rec = rec_;
    auto lhd = lhd_;
    return [rec, lhd, u](std::uint64_t m, const InfSeq<X>& w) -> std::uint64_t {
      if (!lhd(w.at(0), u.at(m))) return 0;
      Fuel::Frame frame(rec.fuel(), m);
      return rec(InfSeq<X>::splice(u, m, w));
    };
  }

  // φ(u) = N u γ_u. On a finitely supported u this is exactly the control
  // probe at ext(u, |prefix|), so it shares the recursor's cache.
  std::uint64_t phi(const InfSeq<X>& u) const {
    if (u.finitely_supported()) return rec_.control(u);
    return N_(u, gamma(u));
  }

  // spec(u, φ) with its threshold.
  SpecResult<X> spec_phi(const InfSeq<X>& u) const { return rec_.spec_of(u); }

  const SeqFunctional<X>& N() const { return N_; }
  const StrictOrder<X>& lhd() const { return lhd_; }
  Fuel& fuel() const { return rec_.fuel(); }

 private:
  static OpenRecBody<X, std::uint64_t> make_body(const SeqFunctional<X>& N) {
    // Ñα = N α_0 α_1.
    auto tilde = [N](const PairedSeq<X, std::uint64_t>& alpha) {
      return N(alpha.first(),
               [alpha](std::uint64_t m, const InfSeq<X>& w) {
                 return alpha.call(m, w);
               });
    };
    OpenRecBody<X, std::uint64_t> body;
    body.H = tilde;
    body.F = tilde;
    return body;
  }

  SeqFunctional<X> N_;
  StrictOrder<X> lhd_;
  ExplicitRecursor<X, std::uint64_t> rec_;
};

template <class X>
std::uint64_t psi_N(const SeqFunctional<X>& N, const StrictOrder<X>& lhd,
                    const InfSeq<X>& u, Fuel& fuel) {
  return PsiN<X>(N, lhd, fuel)(u);
}

template <class X>
GammaFn<X> make_gamma(const PsiN<X>& psi, const InfSeq<X>& u) {
  return psi.gamma(u);
}

template <class X>
struct ZLInputs {
  InfSeq<X> u_bar;
  SeqFunctional<X> N;
  SeqFunctional<X> M;
  SeqTransform<X> W;
  FinitePredicate<X> P;
  StrictOrder<X> lhd;
};

// n, v, γ together with everything the defining implication mentions.
// `gamma` reads through the Ψ^N recursor and so through the Fuel the
// realizer ran with.
template <class X>
struct ZLCertificate {
  std::uint64_t n = 0;
  InfSeq<X> v;
  GammaFn<X> gamma;
  ControlledTrace<X> trace;

  bool premise = false;  // P̄(ū, n)
  std::uint64_t N_v = 0;
  std::uint64_t M_v = 0;
  InfSeq<X> W_v;
  bool bad_at_N = false;  // P̄(v, N v γ)
  bool minimal = false;   // C(v, γ, M v γ, W v γ)

  bool holds() const { return !premise || (bad_at_N && minimal); }
};

// The learning parameters φ, ξ0, ξ1, C0 induced by N, M, W through Ψ^N.
// M v γ_v and W v γ_v are cached per support so that ξ0, ξ1 and C0 agree and
// are computed once per state.
template <class X>
ControlledParams<X> zl_learning_params(const ZLInputs<X>& in,
                                       const PsiN<X>& psi) {
  struct Move {
    std::uint64_t m;
    InfSeq<X> w;
  };
  auto cache = std::make_shared<std::map<std::vector<X>, Move>>();
  auto move_of = [in, psi, cache](const InfSeq<X>& s) -> Move {
    const bool keyed = s.finitely_supported();
    if (keyed) {
      auto it = cache->find(support_key(s));
      if (it != cache->end()) return it->second;
    }
    const GammaFn<X> g = psi.gamma(s);
    Move move{in.M(s, g), in.W(s, g)};
    if (keyed) cache->emplace(support_key(s), move);
    return move;
  };
  ControlledParams<X> params;
  params.phi = [psi](const InfSeq<X>& s) { return psi.phi(s); };
  params.xi0 = [move_of](const InfSeq<X>& s) { return move_of(s).m; };
  params.xi1 = [move_of](const InfSeq<X>& s) { return move_of(s).w; };
  params.C0 = [in, psi, move_of](const InfSeq<X>& s) {
    const Move move = move_of(s);
    return minimality_holds(in.P, in.lhd, s, psi.gamma(s), move.m, move.w);
  };
  return params;
}

// Runs the realizer on an existing Ψ^N, which must be built from in.N and
// in.lhd, and checks the certificate; a failing certificate throws
// ContractViolation.
template <class X>
ZLCertificate<X> zl_realizer(const ZLInputs<X>& in, const PsiN<X>& psi) {
  ZLCertificate<X> cert;
  cert.n = psi(in.u_bar);
  cert.trace = learn_controlled(zl_learning_params(in, psi), in.lhd,
                                in.u_bar, psi.fuel());
  cert.v = cert.trace.limit();
  cert.gamma = psi.gamma(cert.v);

  cert.premise = prefix_holds(in.P, in.u_bar, cert.n);
  cert.N_v = in.N(cert.v, cert.gamma);
  cert.M_v = in.M(cert.v, cert.gamma);
  cert.W_v = in.W(cert.v, cert.gamma);
  cert.bad_at_N = prefix_holds(in.P, cert.v, cert.N_v);
  cert.minimal = minimality_holds(in.P, in.lhd, cert.v, cert.gamma, cert.M_v,
                                  cert.W_v);
  if (!cert.holds()) {
    throw ContractViolation("realizer certificate failed");
  }
  return cert;
}

template <class X>
ZLCertificate<X> zl_realizer(const ZLInputs<X>& in, Fuel& fuel) {
  return zl_realizer(in, PsiN<X>(in.N, in.lhd, fuel));
}

}  // namespace higman

#endif  // HIGMAN_ZORN_H_
