// Casimirs, degree matrices, the h_l basis solver, Weyl orbit bookkeeping,
// and the elementary-symmetric-function reduction.
#pragma once

#include "ancq/geodesic.hpp"

namespace ancq {

// Rational matrices with exact entries.
using QMatrix = std::vector<std::vector<Scalar>>;

// Column order of the geodesic degree matrix: blocks d = 1..floor(n/2), each
// the T_1-orbit of A_{n-d, n}.
std::vector<std::pair<int, int>> a_deg_columns(int n);

// val(A_{i,j}) columns (half-integers) in the block order.
QMatrix a_deg(int n);

// Tiny-polygon matrix B_deg; b_deg_columns returns the (k, r) order.
std::vector<std::pair<int, int>> b_deg_columns(int n);
QMatrix b_deg(int n);

// B^T A = I, exactly.
bool degree_inverse_check(int n);

// Tiny polygon vertex sets (V^+, V^-) for the geometric pairing rule.
struct TinyPolygon {
  std::vector<int> plus;
  std::vector<int> minus;
};
TinyPolygon tiny_polygon(int n, int k, int r);

struct HlSolution {
  std::vector<long long> q;  // Casimir exponents, one per cycle
  std::vector<long long> p;  // geodesic exponents in a_deg column order
  std::vector<int> l;        // target multidegree
};

// Exponents with p = B^T (l - sum q_i val(K_i)), q_m minimal subject to
// nonnegativity and the boundary conditions tight.
HlSolution solve_h(int n, const std::vector<int>& l);

// Signed-permutation action on the Casimir exponents of a solution; returns
// the solved image (asserted equal to re-solving at the transported degree).
HlSolution weyl_on_h(int n, int gen, const HlSolution& sol);

// Full signed-permutation orbit (distinct Casimir exponent tuples), plus the
// index of the all-nonpositive representative.
struct HlOrbit {
  std::vector<HlSolution> members;
  std::size_t nonpositive_rep = 0;
};
HlOrbit orbit_sum(int n, const std::vector<int>& l);

// Char-poly coefficients at a point reduced to t = lambda + 1/lambda and
// compared with prod_i (t -+ (K_i + K_i^{-1})).
bool elementary_symmetric_check(int n, const SquarePoint& pt);

}  // namespace ancq
