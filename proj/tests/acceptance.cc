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
// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "higman/fuel.h"
#include "higman/harness.h"
#include "higman/higman.h"
#include "higman/learning.h"
#include "higman/open_rec.h"
#include "higman/orders.h"
#include "higman/selection.h"
#include "higman/seq.h"
#include "higman/zorn.h"
#include "oracles.h"

namespace {

using namespace higman;  // NOLINT
using Nat = std::uint64_t;
using higman_test::subset_embeds;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// ---------------------------------------------------------------------------
// 1, 2 and the inline part of 7: the boolean pipeline on the corpus.

struct CorpusRun {
  std::size_t specs = 0;
  std::size_t valid = 0;
  std::size_t exhausted = 0;
  std::size_t guarantee = 0;
  std::size_t certificate = 0;  // ContractViolation from the inline check
  std::size_t invalid = 0;      // a returned pair failed validation
  double seconds = 0;
  std::map<std::string, std::size_t> exhausted_by_family;
  std::string first_problem;
  // Φ(u) and the returned pair, for specs that completed.
  std::vector<std::optional<GoodPair>> results;
};

bool witness_ok(const BitWord& a, const BitWord& b, const Embedding& f) {
  if (f.size() != a.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= b.size() || a[i] != b[f[i]]) return false;
    if (i > 0 && f[i - 1] >= f[i]) return false;
  }
  return true;
}

CorpusRun run_corpus(const std::vector<CorpusEntry>& corpus) {
  CorpusRun run;
  const HigmanInstance<Bit> inst = boolean_instance();
  const QuasiOrder<Bit> eq = bit_equality();
  const auto t0 = Clock::now();
  for (const CorpusEntry& entry : corpus) {
    ++run.specs;
    const WordSeq<Bit> u = build_sequence(entry.spec);
    Fuel fuel;
    std::optional<GoodPair> result;
    auto note = [&](const std::string& what) {
      if (run.first_problem.empty()) {
        run.first_problem =
            what + " on " + spec_to_json(entry.spec).dump();
      }
    };
    try {
      GoodPair p = find_good_pair(u, inst, fuel);
      const BitWord ui = u.at(p.i), uj = u.at(p.j);
      if (p.i < p.j && p.j < p.bound && brute_embeds(ui, uj, eq) &&
          witness_ok(ui, uj, p.witness)) {
        ++run.valid;
        result = p;
      } else {
        ++run.invalid;
        note("invalid pair");
      }
    } catch (const FuelExhausted&) {
      ++run.exhausted;
      ++run.exhausted_by_family[entry.family];
    } catch (const GuaranteeViolated&) {
      ++run.guarantee;
      note("GuaranteeViolated");
    } catch (const ContractViolation& e) {
      ++run.certificate;
      note(std::string("ContractViolation (") + e.what() + ")");
    }
    run.results.push_back(result);
  }
  run.seconds = seconds_since(t0);
  return run;
}

void criterion1(const CorpusRun& run) {
  std::ostringstream d;
  d << run.valid << "/" << run.specs << " specs returned a validated pair; "
    << run.guarantee << " GuaranteeViolated; " << run.exhausted
    << " FuelExhausted at the default budget of " << kDefaultFuel;
  if (!run.exhausted_by_family.empty()) {
    d << " (";
    bool first = true;
    for (const auto& [family, n] : run.exhausted_by_family) {
      d << (first ? "" : ", ") << family << " " << n;
      first = false;
    }
    d << ")";
  }
  d << "; " << run.invalid << " invalid; total " << run.seconds
    << " s (limit 60 s)";
  if (!run.first_problem.empty()) d << "; first problem: " << run.first_problem;
  const bool pass = run.specs >= 500 && run.valid == run.specs &&
                    run.guarantee == 0 && run.seconds < 60.0;
  report(1, "end-to-end Higman guarantee", pass, d.str());
}

// Minimal (j, then i) good pair by subset enumeration, doubling the horizon.
std::optional<IndexPair> oracle_pair(const WordSeq<Bit>& u) {
  for (Nat horizon = 2; horizon <= 4096; horizon *= 2) {
    if (auto p = higman_test::scan_pairs(u.take(horizon))) {
      return IndexPair{p->first, p->second};
    }
  }
  return std::nullopt;
}

void criterion2(const std::vector<CorpusEntry>& corpus, const CorpusRun& run) {
  std::size_t dominated = 0, same_pair = 0, no_bound = 0, no_oracle = 0;
  std::string first_miss;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const WordSeq<Bit> u = build_sequence(corpus[k].spec);
    const auto star = oracle_pair(u);
    if (!star) {
      ++no_oracle;
      continue;
    }
    const auto& result = run.results[k];
    if (!result) {
      ++no_bound;
      continue;
    }
    if (star->second < result->bound) {
      ++dominated;
    } else if (first_miss.empty()) {
      first_miss = spec_to_json(corpus[k].spec).dump();
    }
    if (star->first == result->i && star->second == result->j) ++same_pair;
  }
  std::ostringstream d;
  d << "j* < Φ(u) on " << dominated << "/" << corpus.size()
    << " specs; find-pair equals the oracle pair on " << same_pair << "; "
    << no_bound << " specs have no Φ (fuel exhausted); " << no_oracle
    << " without an oracle pair below 4096";
  if (!first_miss.empty()) d << "; first miss: " << first_miss;
  report(2, "oracle dominance", dominated == corpus.size(), d.str());
}

// ---------------------------------------------------------------------------
// 3. Embedding equivalence.

void criterion3() {
  const auto t0 = Clock::now();
  const auto words = higman_test::all_words(6);
  const QuasiOrder<Bit> eq = bit_equality();
  std::size_t pairs = 0, agree = 0;
  for (const auto& a : words) {
    for (const auto& b : words) {
      ++pairs;
      const auto w = embeds(a, b, eq);
      const bool brute = brute_embeds(a, b, eq);
      const bool ok = w.has_value() == brute &&
                      brute == subset_embeds(a, b) &&
                      (!w || witness_ok(a, b, *w));
      agree += ok;
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << pairs << " pairs of words of length <= 6 agree ("
    << words.size() << " words), " << s << " s (limit 30 s)";
  report(3, "embedding equivalence", agree == pairs && s < 30.0, d.str());
}

// ---------------------------------------------------------------------------
// 4. spec laws.

struct LinearControl {
  std::vector<Nat> weights;
  Nat c = 0;
  Nat R = 1;
  Nat operator()(const InfSeq<Nat>& b) const {
    Nat sum = c;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      sum += weights[i] * b.at(i);
    }
    return sum % R;
  }
};

InfSeq<Nat> random_nat_seq(std::mt19937_64& rng, Nat max_letter) {
  std::vector<Nat> prefix(rng() % 7);
  for (auto& x : prefix) x = rng() % (max_letter + 1);
  switch (rng() % 4) {
    case 0:
      return InfSeq<Nat>::finite(prefix);
    case 1:
      prefix.push_back(rng() % (max_letter + 1));
      return InfSeq<Nat>::repeat_last(prefix);
    case 2: {
      std::vector<Nat> block(1 + rng() % 3);
      for (auto& x : block) x = rng() % (max_letter + 1);
      return InfSeq<Nat>::periodic(prefix, block);
    }
    default: {
      const Nat a = rng() % 5, m = 1 + max_letter;
      return InfSeq<Nat>::generator(prefix, "affine",
                                    [a, m](Nat n) { return (a * n + 1) % m; });
    }
  }
}

void criterion4() {
  std::mt19937_64 rng(4);
  const int trials = 2000;
  int ok = 0;
  for (int t = 0; t < trials; ++t) {
    const InfSeq<Nat> alpha = random_nat_seq(rng, 9);
    LinearControl F;
    F.weights.resize(rng() % 6);
    for (auto& w : F.weights) w = rng() % 5;
    F.c = rng() % 5;
    F.R = 1 + rng() % 12;
    // Oracle threshold on plain vectors.
    Nat m0 = 0;
    for (;; ++m0) {
      Nat sum = F.c;
      for (std::size_t i = 0; i < F.weights.size(); ++i) {
        sum += F.weights[i] * (i < m0 ? alpha.at(i) : 0);
      }
      if (sum % F.R < m0) break;
    }
    Fuel fuel(100000);
    const auto r = spec(alpha, F, fuel);
    const bool shape = r.threshold == m0 &&
                       same_sequence(r.seq, ext(alpha, m0)) &&
                       F(r.seq) < m0;
    const InfSeq<Nat> beta =
        InfSeq<Nat>::splice(alpha, m0, random_nat_seq(rng, 9));
    const auto rb = spec(beta, F, fuel);
    const bool local = rb.threshold == m0 && same_sequence(rb.seq, r.seq);
    const auto rr = spec(r.seq, F, fuel);
    const bool idem = rr.threshold == m0 && same_sequence(rr.seq, r.seq);
    ok += shape && local && idem;
  }
  std::ostringstream d;
  d << "shape, locality and idempotence hold on " << ok << "/" << trials
    << " random (alpha, F) with F reading at most the first 5 entries";
  report(4, "spec-operator laws", ok == trials && trials >= 1000, d.str());
}

// ---------------------------------------------------------------------------
// 5. Divergence of the naive recursor.

using Bool = std::uint8_t;
using NatToNat = std::function<Nat(Nat)>;

std::optional<Nat> first_one(const InfSeq<Bool>& u) {
  const auto& prefix = u.prefix();
  for (Nat n = 0; n < prefix.size(); ++n) {
    if (prefix[n] == 1) return n;
  }
  if (std::holds_alternative<RepeatLastTail>(u.tail()) && prefix.back() == 1) {
    return prefix.size();
  }
  if (!u.finitely_supported() &&
      !std::holds_alternative<RepeatLastTail>(u.tail())) {
    throw std::logic_error("unexpected tail");
  }
  return std::nullopt;
}

void criterion5() {
  const StrictOrder<Bool> lhd = [](const Bool& a, const Bool& b) {
    return a < b;
  };
  const InfSeq<Bool> ones = InfSeq<Bool>::repeat_last({1});
  const InfSeq<Bool> zero_ones = InfSeq<Bool>::repeat_last({0, 1});
  auto H = [&zero_ones](const PairedSeq<Bool, Nat>& a) -> Nat {
    const auto n = first_one(a.first());
    if (!n) return 0;
    return 1 + a.call(*n, zero_ones);
  };
  bool pass = true;
  std::ostringstream d;
  Nat last_h = 0, last_g = 0;
  for (Nat budget : {Nat{100}, Nat{1000}, Nat{10000}}) {
    Fuel f1(budget);
    bool ex1 = false;
    try {
      naive_orec<Bool, Nat>(H, lhd, ones, f1);
    } catch (const FuelExhausted&) {
      ex1 = true;
    }
    const Nat depth = f1.deepest_depth();

    Fuel f2(budget);
    auto applied = std::make_shared<Nat>(0);
    auto G = [&zero_ones, applied](const PairedSeq<Bool, NatToNat>& a) {
      return NatToNat([a, applied, &zero_ones](Nat n) {
        ++*applied;
        return 1 + a.call(n, zero_ones)(n + 1);
      });
    };
    bool ex2 = false;
    try {
      naive_orec<Bool, NatToNat>(G, lhd, ones, f2)(0);
    } catch (const FuelExhausted&) {
      ex2 = true;
    }
    const bool ok = ex1 && ex2 && f1.consumed() == budget &&
                    f2.consumed() == budget && depth > last_h &&
                    *applied > last_g;
    pass &= ok;
    d << "budget " << budget << ": H exhausted=" << ex1 << " depth " << depth
      << ", G exhausted=" << ex2 << " unfoldings " << *applied << "; ";
    last_h = depth;
    last_g = *applied;
  }
  Fuel f3(100);
  const Nat zero = naive_orec<Bool, Nat>(H, lhd, InfSeq<Bool>::zeros(), f3);
  pass &= zero == 0;
  d << "all-zero input returns " << zero;
  report(5, "divergence demonstrations", pass, d.str());
}

// ---------------------------------------------------------------------------
// 6. Learning procedures.

bool learn_wf_instance(std::mt19937_64& rng) {
  // States are pairs (a, b) under the lexicographic order on ℕ²; P0 says
  // a + b ≡ r (mod 3). A step either lowers b by 3 or lowers a by 1 and
  // resets b to a value in the same residue class.
  using S = std::pair<Nat, Nat>;
  const Nat r = rng() % 3, t = rng() % 5;
  S x0{rng() % 6, 0};
  x0.second = (3 + r - x0.first % 3) % 3 + 3 * (rng() % 5);
  auto P0 = [r](const S& s) { return (s.first + s.second) % 3 == r; };
  std::function<bool(const S&)> C0 = [t](const S& s) {
    return (s.first == 0 && s.second < 3) || (s.first + s.second) % 5 == t;
  };
  std::function<S(const S&)> xi = [](const S& s) -> S {
    if (s.second >= 3) return {s.first, s.second - 3};
    return {s.first - 1, s.second + 1 + 9};
  };
  std::function<bool(const S&, const S&)> below = [](const S& a, const S& b) {
    return a < b;
  };
  Fuel fuel(10000);
  const auto trace = learn_wf(C0, xi, x0, below, fuel);
  for (std::size_t i = 0; i + 1 < trace.states.size(); ++i) {
    if (!(trace.states[i + 1] < trace.states[i])) return false;
    if (C0(trace.states[i])) return false;
  }
  return P0(x0) && P0(trace.limit()) && C0(trace.limit());
}

struct ControlledInstance {
  ControlledParams<Nat> params;
  std::function<bool(const InfSeq<Nat>&)> P0;
  InfSeq<Nat> u0;
};

// Letters 0..B under <. C0(u): u_0..u_{L-1} are all even. Otherwise ξ lowers
// the first odd one by one and overwrites the next position with a value
// below B. P0(u): u_n ≤ B for n < L.
ControlledInstance controlled_instance(std::mt19937_64& rng) {
  const Nat B = 1 + rng() % 6, L = 1 + rng() % 5, R = 1 + rng() % 7,
            c = rng() % 4, fill = rng() % (B + 1);
  std::vector<Nat> w(rng() % 5);
  for (auto& x : w) x = rng() % 3;
  ControlledInstance in;
  in.params.phi = [w, c, R](const InfSeq<Nat>& u) {
    Nat sum = c;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * u.at(i);
    return sum % R;
  };
  auto first_odd = [L](const InfSeq<Nat>& u) {
    Nat n = 0;
    while (n < L && u.at(n) % 2 == 0) ++n;
    return n;
  };
  in.params.C0 = [first_odd, L](const InfSeq<Nat>& u) {
    return first_odd(u) == L;
  };
  in.params.xi0 = first_odd;
  in.params.xi1 = [first_odd, fill](const InfSeq<Nat>& u) {
    return InfSeq<Nat>::finite({u.at(first_odd(u)) - 1, fill});
  };
  in.P0 = [L, B](const InfSeq<Nat>& u) {
    for (Nat n = 0; n < L; ++n) {
      if (u.at(n) > B) return false;
    }
    return true;
  };
  std::vector<Nat> prefix(rng() % 7);
  for (auto& x : prefix) x = rng() % (B + 1);
  in.u0 = (rng() & 1) ? InfSeq<Nat>::finite(prefix)
                      : InfSeq<Nat>::repeat_last(prefix);
  return in;
}

void criterion6() {
  std::mt19937_64 rng(6);
  const int trials = 1000;
  int wf_ok = 0, ctl_ok = 0, dual_ok = 0;
  for (int t = 0; t < trials; ++t) wf_ok += learn_wf_instance(rng);
  const StrictOrder<Nat> lhd = [](const Nat& a, const Nat& b) {
    return a < b;
  };
  for (int t = 0; t < trials; ++t) {
    const ControlledInstance in = controlled_instance(rng);
    Fuel f1(1000000), f2(1000000);
    const auto trace = learn_controlled(in.params, lhd, in.u0, f1);
    const auto& v = trace.limit();
    bool ok = in.P0(in.u0) && in.P0(v) && in.params.C0(v);
    for (std::size_t i = 0; i + 1 < trace.steps.size() && ok; ++i) {
      const auto& s = trace.steps[i].truncated.seq;
      const auto& next = trace.steps[i + 1].start;
      const Nat bound = std::max(s.support_bound(), next.support_bound()) + 1;
      ok = lex_less_witnessed(next, s, bound, lhd) ==
           std::optional<Nat>(trace.steps[i].position);
    }
    ctl_ok += ok;
    const auto loop = trace.states();
    const auto rec =
        learn_controlled_by_recursion(in.params, lhd, in.u0, f2);
    bool same = loop.size() == rec.size();
    for (std::size_t i = 0; same && i < loop.size(); ++i) {
      same = support_key(loop[i]) == support_key(rec[i]);
    }
    dual_ok += same;
  }
  std::ostringstream d;
  d << "wellfounded limit has P0 and C0 on " << wf_ok << "/" << trials
    << "; controlled limit has P0 and C0 on " << ctl_ok << "/" << trials
    << "; recursion and loop traces identical on " << dual_ok << "/"
    << trials;
  report(6, "learning-procedure contracts",
         wf_ok == trials && ctl_ok == trials && dual_ok == trials, d.str());
}

// ---------------------------------------------------------------------------
// 7. ZL certificate.

using Seq = InfSeq<Nat>;

ZLInputs<Nat> zl_instance(std::mt19937_64& rng) {
  ZLInputs<Nat> in;
  in.lhd = [](const Nat& a, const Nat& b) { return a < b; };
  std::vector<Nat> prefix(rng() % 5);
  for (auto& x : prefix) x = rng() % 3;
  in.u_bar = (rng() & 1) ? Seq::finite(prefix) : Seq::repeat_last(prefix);
  const Nat c = rng() % 3, k = rng() % 3, m = rng() % 3, e = rng() % 3,
            R = 1 + rng() % 4, dN = rng() % 3;
  in.N = [=](const Seq& v, const GammaFn<Nat>& gamma) {
    const Nat vm = v.at(m);
    const Nat rec = vm == 0 ? 0 : gamma(m, Seq::finite({vm - 1, e}));
    return (c + v.at(k) + rec) % R + dN;
  };
  const Nat L = 1 + rng() % 3;
  in.M = [L](const Seq& v, const GammaFn<Nat>& gamma) {
    for (Nat n = 0; n < L; ++n) {
      if (v.at(n) > 0) return (n + gamma(n, Seq()) % 2) % L;
    }
    return L;
  };
  in.W = [e](const Seq& v, const GammaFn<Nat>& gamma) {
    Nat n = 0;
    while (n < 8 && v.at(n) == 0) ++n;
    const Nat x = v.at(n) == 0 ? 0 : v.at(n) - 1;
    return Seq::finite({x, (gamma(0, Seq()) + e) % 3});
  };
  const Nat B = 1 + rng() % 3, gap = 1 + rng() % 2;
  in.P = [B, gap](const std::vector<Nat>& s) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] > B) return false;
      for (std::size_t i = 0; i < j; ++i) {
        if (s[i] + gap <= s[j]) return false;
      }
    }
    return true;
  };
  return in;
}

void criterion7(const CorpusRun& run) {
  std::mt19937_64 rng(7);
  const int trials = 600;
  int ok = 0, premises = 0;
  for (int t = 0; t < trials; ++t) {
    const ZLInputs<Nat> in = zl_instance(rng);
    Fuel fuel(10000000);
    PsiN<Nat> psi(in.N, in.lhd, fuel);
    try {
      const auto cert = zl_realizer(in, psi);
      // Independent evaluation of the implication.
      const GammaFn<Nat> gamma = psi.gamma(cert.v);
      const bool premise = in.P(in.u_bar.take(psi(in.u_bar)));
      const Nat Nv = in.N(cert.v, gamma);
      const Nat Mv = in.M(cert.v, gamma);
      const Seq Wv = in.W(cert.v, gamma);
      const bool bad = in.P(cert.v.take(Nv));
      const bool minimal =
          !(Wv.at(0) < cert.v.at(Mv)) ||
          !in.P(Seq::splice(cert.v, Mv, Wv).take(gamma(Mv, Wv)));
      premises += premise;
      ok += (!premise || (bad && minimal)) && premise == cert.premise;
    } catch (const ContractViolation&) {
    }
  }
  const std::size_t checked = run.valid + run.invalid + run.guarantee;
  std::ostringstream d;
  d << "certificate holds on " << ok << "/" << trials
    << " random instances (" << premises << " with a true premise); "
    << "inline check passed on " << checked << " completed pipeline runs, "
    << run.certificate << " failed, " << run.exhausted
    << " runs ended in FuelExhausted before a certificate existed";
  report(7, "ZL certificate", ok == trials && run.certificate == 0, d.str());
}

// ---------------------------------------------------------------------------
// 8. Selection contracts and Ψ idempotence.

InfSeq<Bit> random_bits(std::mt19937_64& rng) {
  std::vector<Bit> prefix(rng() % 8);
  for (auto& x : prefix) x = rng() & 1;
  switch (rng() % 4) {
    case 0:
      return InfSeq<Bit>::finite(prefix);
    case 1:
      prefix.push_back(rng() & 1);
      return InfSeq<Bit>::repeat_last(prefix);
    case 2: {
      std::vector<Bit> block(1 + rng() % 5);
      for (auto& x : block) x = rng() & 1;
      return InfSeq<Bit>::periodic(prefix, block);
    }
    default: {
      const Nat m = 2 + rng() % 4;
      return InfSeq<Bit>::generator(prefix, "squares_mod", [m](Nat n) {
        return static_cast<Bit>((n * n) % m == 0);
      });
    }
  }
}

ValueProbe random_probe(std::mt19937_64& rng) {
  const Nat k = rng() % 6, r = 1 + rng() % 9, c = rng() % 4;
  switch (rng() % 5) {
    case 0:
      return [k](Bit, const IndexMap&) { return k; };
    case 1:
      return [k, r](Bit b, const IndexMap& f) { return (f(k) + b) % r; };
    case 2:
      return [c](Bit, const IndexMap& f) { return f(f(c)) % 13; };
    case 3:
      return [k, c](Bit b, const IndexMap& f) {
        return b ? f(k) + c : f(c) % 7;
      };
    default:
      return [k](Bit, const IndexMap& f) {
        Nat n = 0;
        while (n < 20 && f(n) < n + k) ++n;
        return n;
      };
  }
}

Omega random_omega(std::mt19937_64& rng) {
  const Nat k = rng() % 7, r = 1 + rng() % 6;
  switch (rng() % 4) {
    case 0:
      return [k](const IndexMap&) { return k; };
    case 1:
      return [k, r](const IndexMap& g) { return g(k % 3) % r; };
    case 2:
      return [r](const IndexMap& g) { return (g(0) + g(1)) % r + 1; };
    default:
      return [k](const IndexMap& g) { return g(0) % 3 + k; };
  }
}

void criterion8() {
  std::mt19937_64 rng(8);
  const int trials = 2000;
  int ec_ok = 0, swqo_ok = 0;
  for (int t = 0; t < trials; ++t) {
    const InfSeq<Bit> x = random_bits(rng);
    const ValueProbe xi = random_probe(rng);
    const EventuallyConstant out = eventually_constant_realizer(x, xi);
    const Nat n = xi(out.c, out.f);
    ec_ok += out.f(n) >= n && x.at(out.f(n)) == out.c;
  }
  for (int t = 0; t < trials; ++t) {
    const InfSeq<Bit> x = random_bits(rng);
    const Omega omega = random_omega(rng);
    Fuel fuel(10000000);
    const IndexMap g = swqo_bool_realizer(x, omega, fuel);
    const Nat k = omega(g);
    bool ok = true;
    for (Nat j = 1; j <= k && ok; ++j) {
      for (Nat i = 0; i < j && ok; ++i) {
        ok = g(i) < g(j) && x.at(g(i)) == x.at(g(j));
      }
    }
    swqo_ok += ok;
  }
  // Ψ^N(spec(u, φ)) = Ψ^N(u), through one recursor and through a fresh one.
  const int psi_trials = 600;
  int idem_ok = 0;
  for (int t = 0; t < psi_trials; ++t) {
    const ZLInputs<Nat> in = zl_instance(rng);
    Fuel f1(10000000), f2(10000000);
    PsiN<Nat> psi(in.N, in.lhd, f1);
    const Nat value = psi(in.u_bar);
    const Seq s = psi.spec_phi(in.u_bar).seq;
    idem_ok += psi(s) == value && psi_N(in.N, in.lhd, s, f2) == value;
  }
  std::ostringstream d;
  d << "eventually-constant contract on " << ec_ok << "/" << trials
    << "; monotone-subsequence contract on " << swqo_ok << "/" << trials
    << "; Psi idempotence on " << idem_ok << "/" << psi_trials;
  report(8, "selection contracts", ec_ok == trials && swqo_ok == trials &&
                                       idem_ok == psi_trials,
         d.str());
}

// ---------------------------------------------------------------------------
// 9. One-letter alphabet.

void criterion9() {
  std::mt19937_64 rng(9);
  const int trials = 300;
  int zero_one = 0, length_pair = 0, bound_ok = 0;
  std::string counterexample;
  const HigmanInstance<Unary> inst = unary_instance();
  for (int t = 0; t < trials; ++t) {
    std::vector<UnaryWord> words(1 + rng() % 6);
    std::vector<Nat> lengths;
    for (auto& w : words) {
      lengths.push_back(rng() % 6);
      w = unary_word(lengths.back());
    }
    const bool repeat = rng() & 1;
    const auto u = repeat ? WordSeq<Unary>::repeat_last(words)
                          : WordSeq<Unary>::finite(words);
    Fuel fuel;
    const GoodPair p = find_good_pair(u, inst, fuel);
    bound_ok += p.bound >= 2;
    zero_one += p.i == 0 && p.j == 1;
    // u_i ≼* u_j iff |u_i| ≤ |u_j| over one letter.
    std::optional<IndexPair> first;
    for (Nat j = 1; j < p.bound && !first; ++j) {
      for (Nat i = 0; i < j && !first; ++i) {
        if (u.at(i).size() <= u.at(j).size()) first = IndexPair{i, j};
      }
    }
    length_pair += first == IndexPair{p.i, p.j};
    if (!(p.i == 0 && p.j == 1) && counterexample.empty()) {
      std::ostringstream c;
      c << "word lengths [";
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        c << (i ? "," : "") << lengths[i];
      }
      c << "] then " << (repeat ? "the last repeated" : "empty words")
        << " gives pair (" << p.i << "," << p.j << ") with bound " << p.bound;
      counterexample = c.str();
    }
  }
  std::ostringstream d;
  d << "pair (0,1) on " << zero_one << "/" << trials << "; bound >= 2 on "
    << bound_ok << "/" << trials
    << "; pair is the first with |u_i| <= |u_j| on " << length_pair << "/"
    << trials;
  if (!counterexample.empty()) d << "; counterexample: " << counterexample;
  report(9, "one-letter genericity", zero_one == trials && bound_ok == trials,
         d.str());
}

}  // namespace

int main() {
  const auto corpus = higman_corpus(1);
  const CorpusRun run = run_corpus(corpus);
  criterion1(run);
  criterion2(corpus, run);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7(run);
  criterion8();
  criterion9();
  return failures == 0 ? 0 : 1;
}
