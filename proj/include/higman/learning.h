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
// Learning procedures: iterate an improvement step until a candidate passes
// its acceptance check.
//
// learn_wf runs over an arbitrary state type with a step that must decrease a
// wellfounded order. learn_controlled runs over infinite sequences ordered
// lexicographically; each state is first truncated with spec(·, φ), which is
// what makes the iteration terminate even though the lexicographic order is
// not wellfounded.

#ifndef HIGMAN_LEARNING_H_
#define HIGMAN_LEARNING_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "higman/fuel.h"
#include "higman/open_rec.h"
#include "higman/orders.h"
#include "higman/seq.h"

namespace higman {

template <class S>
struct LearningTrace {
  std::vector<S> states;
  const S& limit() const { return states.back(); }
};

// x_{i+1} = ξ(x_i) while ¬C0(x_i). `below(y, x)` is the wellfounded strict
// order; a step with ¬below(ξ(x), x) throws ContractViolation. One fuel unit
// per visited state.
template <class S>
LearningTrace<S> learn_wf(const std::function<bool(const S&)>& C0,
                          const std::function<S(const S&)>& xi, S x0,
                          const std::function<bool(const S&, const S&)>& below,
                          Fuel& fuel) {
  LearningTrace<S> trace;
  trace.states.push_back(std::move(x0));
  for (;;) {
    fuel.consume();
    const S& current = trace.states.back();
    if (C0(current)) return trace;
    S next = xi(current);
    if (!below(next, current)) {
      throw ContractViolation("learning step did not decrease the order");
    }
    trace.states.push_back(std::move(next));
  }
}

template <class X>
struct ControlledParams {
  std::function<std::uint64_t(const InfSeq<X>&)> phi;
  std::function<std::uint64_t(const InfSeq<X>&)> xi0;
  std::function<InfSeq<X>(const InfSeq<X>&)> xi1;
  std::function<bool(const InfSeq<X>&)> C0;
};

// ξ(u) = u|ξ0(u) ∗ ξ1(u).
template <class X>
InfSeq<X> improve(const ControlledParams<X>& params, const InfSeq<X>& u) {
  return InfSeq<X>::splice(u, params.xi0(u), params.xi1(u));
}

template <class X>
struct ControlledStep {
  InfSeq<X> start;             // u_i
  SpecResult<X> truncated;     // spec(u_i, φ) and its threshold
  bool accepted = false;       // C0(spec(u_i, φ))
  std::uint64_t position = 0;  // ξ0(spec(u_i, φ)) when rejected
};

template <class X>
struct ControlledTrace {
  std::vector<ControlledStep<X>> steps;
  const InfSeq<X>& limit() const { return steps.back().truncated.seq; }
  std::vector<InfSeq<X>> states() const {
    std::vector<InfSeq<X>> out;
    for (const auto& step : steps) out.push_back(step.truncated.seq);
    return out;
  }
};

// Direct loop: s_i = spec(u_i, φ); stop at the first s_i with C0(s_i), else
// u_{i+1} = ξ(s_i). A rejected step whose replacement does not start below
// s_i at ξ0(s_i) throws ContractViolation.
template <class X>
ControlledTrace<X> learn_controlled(const ControlledParams<X>& params,
                                    const StrictOrder<X>& lhd,
                                    const InfSeq<X>& u0, Fuel& fuel) {
  ControlledTrace<X> trace;
  InfSeq<X> u = u0;
  for (;;) {
    fuel.consume();
    ControlledStep<X> step{u, spec(u, params.phi, fuel), false, 0};
    const InfSeq<X>& s = step.truncated.seq;
    if (params.C0(s)) {
      step.accepted = true;
      trace.steps.push_back(std::move(step));
      return trace;
    }
    const std::uint64_t k = params.xi0(s);
    const InfSeq<X> w = params.xi1(s);
    if (!lhd(w.at(0), s.at(k))) {
      throw ContractViolation("rejected learning step does not improve");
    }
    step.position = k;
    u = InfSeq<X>::splice(s, k, w);
    trace.steps.push_back(std::move(step));
  }
}

// The same procedure as a single explicitly controlled recursion returning
// the list of truncated states: F(α) = φ(α_0), and
// H(α) = ⟨α_0⟩ if C0(α_0), else ⟨α_0⟩ ∗ α_1(ξ0(α_0), ξ1(α_0)).
template <class X>
std::vector<InfSeq<X>> learn_controlled_by_recursion(
    const ControlledParams<X>& params, const StrictOrder<X>& lhd,
    const InfSeq<X>& u0, Fuel& fuel) {
  using List = std::vector<InfSeq<X>>;
  OpenRecBody<X, List> body;
  body.control_reads_first_only = true;
  body.F = [params](const PairedSeq<X, List>& alpha) {
    return params.phi(alpha.first());
  };
  body.H = [params](const PairedSeq<X, List>& alpha) {
    const InfSeq<X>& s = alpha.first();
    List out{s};
    if (params.C0(s)) return out;
    List rest = alpha.call(params.xi0(s), params.xi1(s));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  };
  return eorec(body, lhd, u0, fuel);
}

}  // namespace higman

#endif  // HIGMAN_LEARNING_H_
