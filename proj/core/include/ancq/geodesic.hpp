// Formal geodesic functions on the A_n-quiver: the bracket symbol, the
// elementary path lists, the parallelogram expansion, and the bracket
// recursion, plus the Bondal-relation and Laurent-positivity checks built
// on them.
#pragma once

#include "ancq/an_quiver.hpp"

namespace ancq {

// X-coordinate ring on the half-integer lattice (D = 2).
RingPtr geodesic_ring(int n);

// (a_1 ... a_k)^{1/2} (1 + 1/a_1 + 1/(a_1 a_2) + ... + 1/(a_1...a_k)).
LaurentPoly bracket_symbol(const RingPtr& ring, const std::vector<int>& vars);

// Ordered variable list of the elementary geodesic A_{q,q+1} (south-west to
// north-east along the strip).
std::vector<int> elementary_geodesic_vars(int n, int q);
LaurentPoly elementary_geodesic(int n, int q);

// Variables of the parallelogram spanned between ports j and i'; row t holds
// width j-i entries.
std::vector<std::vector<int>> parallelogram_vars(int n, int i, int j);
// Sum over monotone staircase sign patterns on the parallelogram.
LaurentPoly geodesic_parallelogram(int n, int i, int j);

// A_{i,j} via the Bondal recursion a_il = (1/2) a_ik a_kl - {a_ik, a_kl}.
LaurentPoly geodesic_recursion(int n, int i, int j);

// All A_{i,j}, i < j, parallelogram route; entry [i-1][j-1].
struct GeodesicSet {
  int n = 0;
  RingPtr ring;
  std::vector<std::vector<LaurentPoly>> a;
  const LaurentPoly& at(int i, int j) const { return a.at(i - 1).at(j - 1); }
};
GeodesicSet build_geodesics(int n);

// Doubled exchange matrix of the A_n-quiver (for the log-canonical pairing).
std::vector<std::vector<int>> an_eps2(int n);

// u-side view: X_i = u_i^2 turns half-integer exponents integral.
RingPtr u_ring(int n);
LaurentPoly to_u(const LaurentPoly& f, const RingPtr& uring);

// Draw u and return the X-point (x_i = u_i^2) together with the u-point.
struct SquarePoint {
  EvalPoint u;
  EvalPoint x;
};
SquarePoint sample_square_point(std::size_t nvars, std::uint64_t p, Rng& rng);

// Evaluate a half-lattice element at a square point.
Fp eval_half(const LaurentPoly& f, const SquarePoint& pt);

// One Bondal relation instance: bracket of two matrix entries against the
// right-hand side the index pattern dictates. Entries a_{pq} with p > q read
// as 0, a_{pp} as 1.
struct BondalReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
BondalReport bondal_check(int n);

// One-step Laurent positivity: pull an A_{i,j} back along a single mutation
// and divide by the minimal monomial; the result must be a Laurent
// polynomial with nonnegative integer coefficients.
LaurentPoly pullback_one_mutation(const LaurentPoly& g, const Seed& s, int k);
bool m_half_l_form_ok(const LaurentPoly& g);

// Exact char-poly factorization check at a square point (Eq of the lambda
// factorization): det(A + lambda A^T) against the parity branch in the
// Casimir values, including palindromicity.
bool charpoly_factor_check(int n, const SquarePoint& pt);

// Casimir exponent vectors over the X-ring (stored units).
ExpVec casimir_c_exp(const RingPtr& ring, int n, int i);
ExpVec casimir_k_exp(const RingPtr& ring, int n, int i);

}  // namespace ancq
