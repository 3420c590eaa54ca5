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
// Open recursion over the lexicographic extension of a wellfounded letter
// relation ⊳.
//
// The recursion body sees a paired sequence α_n = ⟨u_n, k_n⟩ where the
// continuation k_n(v) recurses on u|n ∗ v when v_0 ⊲ u_n and returns 0_Y
// otherwise. naive_orec hands the body the whole of α and is only total for
// some bodies; it exists to demonstrate divergence under a step budget.
// ExplicitRecursor (eorec) first truncates α with spec(α, F) and hands the
// body only the truncation.

#ifndef HIGMAN_OPEN_REC_H_
#define HIGMAN_OPEN_REC_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "higman/fuel.h"
#include "higman/orders.h"
#include "higman/seq.h"

namespace higman {

template <class X, class Y>
class PairedSeq {
 public:
  // Recursive call on u|n ∗ v, entered at position n. Receives v unspliced.
  using Recurse = std::function<Y(std::uint64_t, const InfSeq<X>&)>;

  static constexpr std::uint64_t kNoCutoff =
      std::numeric_limits<std::uint64_t>::max();

  PairedSeq(InfSeq<X> first, StrictOrder<X> lhd, Recurse recurse,
            std::uint64_t cutoff = kNoCutoff)
      : first_(std::move(first)),
        lhd_(std::move(lhd)),
        recurse_(std::move(recurse)),
        cutoff_(cutoff) {}

  // α_0 = λn.u_n.
  const InfSeq<X>& first() const { return first_; }

  // α_1 n v: the guarded continuation at index n.
  Y call(std::uint64_t n, const InfSeq<X>& v) const {
    if (blocked_) {
      throw ContractViolation(
          "control functional declared first-component-only read a "
          "continuation");
    }
    if (n >= cutoff_) return zero_of<Y>();
    if (!lhd_(v.at(0), first_.at(n))) return zero_of<Y>();
    return recurse_(n, v);
  }

  // ext(α, m): both components truncated at m.
  PairedSeq truncated(std::uint64_t m) const {
    PairedSeq out(ext(first_, m), lhd_, recurse_, std::min(cutoff_, m));
    out.blocked_ = blocked_;
    return out;
  }

  // A copy whose continuations throw ContractViolation when invoked.
  PairedSeq first_only() const {
    PairedSeq out = *this;
    out.blocked_ = true;
    return out;
  }

  std::uint64_t cutoff() const { return cutoff_; }

 private:
  InfSeq<X> first_;
  StrictOrder<X> lhd_;
  Recurse recurse_;
  std::uint64_t cutoff_;
  bool blocked_ = false;
};

template <class X, class Y>
struct OpenRecBody {
  std::function<Y(const PairedSeq<X, Y>&)> H;
  // Control functional. Only eorec reads it.
  std::function<std::uint64_t(const PairedSeq<X, Y>&)> F;
  // When set, F is probed on sequences whose continuations throw, which
  // enforces that F depends on the first component alone.
  bool control_reads_first_only = false;
};

// orec(u) = H(λn.⟨u_n, λv. orec(u|n ∗ v) if v_0 ⊲ u_n⟩), one fuel unit per
// unfolding. Values returned by H may hold continuations, so `fuel` must
// outlive them.
template <class X, class Y>
Y naive_orec(const std::function<Y(const PairedSeq<X, Y>&)>& H,
             const StrictOrder<X>& lhd, const InfSeq<X>& u, Fuel& fuel) {
  fuel.consume();
  Fuel* meter = &fuel;
  auto body = H;
  auto order = lhd;
  typename PairedSeq<X, Y>::Recurse recurse =
      [body, order, meter, u](std::uint64_t n, const InfSeq<X>& v) {
        Fuel::Frame frame(*meter, n);
        return naive_orec<X, Y>(body, order, InfSeq<X>::splice(u, n, v),
                                *meter);
      };
  return H(PairedSeq<X, Y>(u, lhd, std::move(recurse)));
}

// eorec(u) = H(spec(α, F)). Results are memoized per recursor: the value at
// u depends only on u|m₀ for the threshold m₀ of spec(α, F), and each probe
// F(ext(α, m)) depends only on u|m, so both are cached in a prefix trie.
//
// Continuations handed to H and F refer back to this recursor; they must not
// be invoked after it is destroyed.
template <class X, class Y>
class ExplicitRecursor {
 public:
  ExplicitRecursor(OpenRecBody<X, Y> body, StrictOrder<X> lhd, Fuel& fuel)
      : impl_(std::make_shared<Impl>(std::move(body), std::move(lhd), fuel)) {}

  Y operator()(const InfSeq<X>& u) const { return impl_->eval(u); }

  // spec(α, F) projected to the first component, with its threshold.
  SpecResult<X> spec_of(const InfSeq<X>& u) const {
    const Node* node = impl_->threshold(u);
    return {InfSeq<X>::finite(node->path()), node->depth};
  }

  // F(ext(α, m)) for the finitely supported s = ext(u, m), m = |s.prefix()|.
  std::uint64_t control(const InfSeq<X>& s) const {
    return impl_->probe(impl_->locate(s.prefix()));
  }

  // ext(α, m) as a paired sequence, for m = |s.prefix()|.
  PairedSeq<X, Y> paired(const InfSeq<X>& s) const {
    return impl_->paired(impl_->locate(s.prefix()));
  }

  Fuel& fuel() const { return *impl_->fuel; }

 private:
  // Prefix trie: the node reached by u|m holds F(ext(α, m)) and, when m is
  // the threshold, eorec(u). A node is `open` once a threshold walk has
  // passed through it, so every control on its path is at least its depth.
  struct Node {
    Node* parent = nullptr;
    std::uint64_t depth = 0;
    X letter{};
    bool open = false;
    std::map<X, std::unique_ptr<Node>> children;
    std::optional<std::uint64_t> control;
    std::optional<Y> result;

    Node* child(const X& x) {
      auto it = children.find(x);
      if (it != children.end()) return it->second.get();
      auto node = std::make_unique<Node>();
      node->parent = this;
      node->depth = depth + 1;
      node->letter = x;
      return children.emplace(x, std::move(node)).first->second.get();
    }

    Node* ancestor(std::uint64_t d) {
      Node* node = this;
      while (node->depth > d) node = node->parent;
      return node;
    }

    std::vector<X> path() const {
      std::vector<X> out(depth);
      const Node* node = this;
      for (; node->parent != nullptr; node = node->parent) {
        out[node->depth - 1] = node->letter;
      }
      return out;
    }
  };

  struct Impl {
    Impl(OpenRecBody<X, Y> b, StrictOrder<X> l, Fuel& f)
        : body(std::move(b)), lhd(std::move(l)), fuel(&f) {}

    // ext(α, m) for the sequence whose prefix u|m leads to `node`.
    PairedSeq<X, Y> paired(Node* node) {
      Impl* self = this;
      typename PairedSeq<X, Y>::Recurse recurse =
          [self, node](std::uint64_t n, const InfSeq<X>& v) {
            Fuel::Frame frame(*self->fuel, n);
            return self->eval_spliced(node, n, v);
          };
      return PairedSeq<X, Y>(InfSeq<X>::finite(node->path()), lhd,
                             std::move(recurse), node->depth);
    }

    Node* locate(const std::vector<X>& prefix) {
      Node* node = &root;
      for (const X& x : prefix) node = node->child(x);
      return node;
    }

    std::uint64_t probe(Node* node) {
      if (node->control) return *node->control;
      PairedSeq<X, Y> alpha = paired(node);
      const std::uint64_t value = body.control_reads_first_only
                                      ? body.F(alpha.first_only())
                                      : body.F(alpha);
      node->control = value;
      return value;
    }

    // Continues a threshold walk from `node` at depth m, reading the entry at
    // each further index i from `next(i)`; stops at the least depth whose
    // control is below it.
    template <class Next>
    Node* walk(Node* node, const Next& next) {
      for (std::uint64_t m = node->depth;; ++m) {
        fuel->consume();
        if (m > node->depth) node = node->child(next(m - 1));
        if (probe(node) < m) return node;
        node->open = true;
      }
    }

    Node* threshold(const InfSeq<X>& u) {
      return walk(&root, [&u](std::uint64_t i) { return u.at(i); });
    }

    Y result_at(Node* node) {
      if (node->result) return *node->result;
      Y value = body.H(paired(node));
      node->result = value;
      return value;
    }

    Y eval(const InfSeq<X>& u) {
      fuel->consume();
      return result_at(threshold(u));
    }

    // eval(u|n ∗ v) where u|m leads to `base`, n < m. When the walk along
    // u|n has already been taken, its probes are charged without being
    // repeated.
    Y eval_spliced(Node* base, std::uint64_t n, const InfSeq<X>& v) {
      fuel->consume();
      Node* start = base->ancestor(n);
      auto tail = [&v, n](std::uint64_t i) { return v.at(i - n); };
      if (start->open) {
        fuel->consume(n);
        return result_at(walk(start, tail));
      }
      const std::vector<X> head = start->path();
      return result_at(walk(&root, [&](std::uint64_t i) {
        return i < n ? head[i] : tail(i);
      }));
    }

    OpenRecBody<X, Y> body;
    StrictOrder<X> lhd;
    Fuel* fuel;
    Node root;
  };

  std::shared_ptr<Impl> impl_;
};

// One-shot eorec^{H,F}(u). Y must not hold continuations, since the
// recursor they point into is gone once this returns.
template <class X, class Y>
Y eorec(const OpenRecBody<X, Y>& body, const StrictOrder<X>& lhd,
        const InfSeq<X>& u, Fuel& fuel) {
  return ExplicitRecursor<X, Y>(body, lhd, fuel)(u);
}

}  // namespace higman

#endif  // HIGMAN_OPEN_REC_H_
