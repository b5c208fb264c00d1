// Cycle mutations, closed-form reflection actions, the Weyl group of the
// A_n-quiver, invariance checks, and the DT / reddening layer.
#pragma once

#include "ancq/geodesic.hpp"
#include "ancq/seed.hpp"

namespace ancq {

// A balanced chordless cycle J (vertex indices in cyclic order) of a quiver.
struct CycleSpec {
  Seed seed;
  std::vector<int> J;
  void validate() const;  // directed chordless cycle + balance condition
};

// mu_{j1} ... mu_{j_{N-1}} pi_{j_{N-1}, j_N} mu_{j_{N-1}} ... mu_{j1};
// order is a permutation of 0..N-1 into cyclic positions of J.
MutationWord cycle_word(const CycleSpec& spec, const std::vector<int>& order);
MutationWord cycle_word(const CycleSpec& spec);  // ascending order

// Unique c-vector of an external vertex v: increments eps_{v j_t}, minimum 0.
std::vector<int> c_vector(const Seed& s, const std::vector<int>& J, int v);

// Closed form of the cycle reflection: cycle variables map to
// X/(Y_t Y_{t-1}), external ones to X_v prod Y_t^{c_vt}.
struct CycleClosedForm {
  Seed seed;
  RingPtr ring;  // D = 1 ring of the ambient quiver
  std::vector<int> J;
  std::vector<LaurentPoly> F;          // cyclic tails, F[t]
  std::vector<FactoredRat> Y;          // Y[t] = X_{j_t} F[t-1] / F[t]
  std::vector<FactoredRat> images;     // per ambient vertex
  std::vector<std::vector<int>> yexp;  // per vertex: exponents of Y[t]

  EvalPoint apply_point(const EvalPoint& x) const;
  // Image of an integer monomial X^g; requires the Y-exponent profile to be
  // constant along the cycle (true for Casimir monomials).
  ExpVec monomial_image(const ExpVec& g) const;
  // Y-exponent profile of the image of X^g (w_t per cycle position).
  std::vector<long long> y_profile(const ExpVec& g) const;
};

CycleClosedForm closed_form_cycle(const Seed& s, const std::vector<int>& J);

// tau_l on the standard A_n-quiver (invalid for the odd innermost cycle).
CycleClosedForm closed_form_tau(int n, int l);

// Reflection generator s_i. For even n or i < floor(n/2) this is a single
// cycle reflection on the standard quiver; the odd innermost one runs
// f_m f~_m f_m on the doubled quiver and restricts to the locus.
struct WeylGen {
  int n = 0;
  int i = 0;
  bool doubled_route = false;
  std::vector<CycleClosedForm> steps;  // 1 step (standard) or 3 (doubled)
  std::shared_ptr<DoubledQuiver> dq;   // set on the doubled route

  EvalPoint apply_point(const EvalPoint& x) const;
  MutationWord word() const;  // expanded mutation word on its home quiver
};

WeylGen make_weyl_gen(int n, int i);

// Left-to-right application of a word in the generators (s_a s_b applies
// s_a's point map first).
EvalPoint apply_weyl_point(int n, const std::vector<int>& gens, const EvalPoint& x);

// Symbolic composite pullback of a generator on the standard X-ring
// (tilde variables restricted to the locus). Budget-gated.
std::vector<RatFunc> reflection_action_symbolic(int n, int i, std::size_t budget);

struct CheckReport {
  std::vector<std::string> failures;
  int checked = 0;
  bool pass() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

// B-type Weyl relations at random points.
CheckReport verify_relations(int n, int trials, Rng& rng, std::uint64_t prime);

// Thm-4.2.2-style invariance: elementary geodesics exactly (coherent branch
// through the square-root factor), non-elementary ones exactly on the single
// cycle route and as squares on the doubled route.
CheckReport verify_geodesic_invariance(int n, int trials, Rng& rng, std::uint64_t prime);

// Signed-permutation action on the Casimirs, exact (symbolic exponents).
CheckReport casimir_action_check(int n);

// Telescoping prod_t Y_t = prod_t X_{j_t} for every reflection cycle.
CheckReport telescoping_check(int n);

// F_t + X_{t-1} F_{t-2} = F_{t-1} (1 + X_t) for every cycle.
CheckReport lemma421_check(int n);

// Longest-element word (tau_1 ... tau_m)^m for even n.
MutationWord w0_word(int n);
// C-matrix of w0 equals -I; Casimir inversion checked at points.
CheckReport dt_check(int n, int trials, Rng& rng, std::uint64_t prime);

struct ReddeningWitness {
  bool found = false;
  std::array<int, 3> triple{};
  std::vector<int> mutation_trail;  // applied positions (cycle order) in sequence
  Seed final_seed;
};
// Innermost-cycle full subquiver of odd n transformed by the obstruction
// sequences until a Markov triple appears.
ReddeningWitness reddening_witness_odd(int n);

}  // namespace ancq
