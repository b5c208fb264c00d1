// Planar transport networks dual to the triangle quiver, and the groupoid
// matrices built from them.
//
// Geometry: internal vertices (r, k), r = 1..n, k = 1..2r-1 (west to east),
// sit at display column col(r, k) = 2(n - r + k) + 1. Ports: i enters row i
// from the east, i' exits row i to the west, i'' sits below (n, 2i-1).
// Quiver variables live between rows: Z_{r-1-t, t, n-r+1} above (r, 2t+1),
// and the bottom row Z_{n-t, t, 0} below (n, 2t).
//
// P_n carries westward strands (ports i -> j', i -> j''); the weight of a
// path is the product of quiver variables in the region at its right, which
// for westward travel is the area to the north. Reversing the horizontal
// strands gives the graph for T_(3) (paths i' -> j''), whose right side is
// the area to the south-west; that reading is fixed here by the groupoid
// condition M_2 = M_3 M_1 and the shape of Prop-5.1.5's rank matrix.
#pragma once

#include "ancq/an_quiver.hpp"
#include "ancq/ring.hpp"

namespace ancq {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct PlabicGraph {
  int n = 0;
  bool reversed = false;  // false: P_n, true: P_n with horizontal arrows reversed
  SlnQuiver sln;
  RingPtr zring;  // Z-variables on the 1/(2n) lattice

  // All source->target paths with their weights (brute force; test oracle).
  // Ports are 1-based; kind selects the target family.
  enum class Target { Left, Bottom };
  std::vector<LaurentPoly> enumerate_paths(int from, int to, Target kind) const;
};

PlabicGraph build_plabic(int n, bool reversed);

// Z-ring shared by the groupoid layer: variables in SL_n vertex order,
// lattice denominator 2n.
RingPtr z_ring(const SlnQuiver& sln);

// Transport matrices; which in {1,2,3}. Entries are computed by dynamic
// programming over the layered graph.
PolyMatrix transport(int n, int which);

// S_{ij} = (-1)^{n-i} delta_{i,n+1-j}.
std::vector<std::vector<int>> s_matrix(int n);

// D_k scalars as stored exponent vectors on the 1/(2n) lattice.
ExpVec d_scalar_exp(const SlnQuiver& sln, int which);

// M_i = S T_(i) D_i^{-1}.
PolyMatrix m_matrix(int n, int which);

// A := M_1^T M_2 (equivalently T_(1)^T T_(2) / (D_1 D_2)).
PolyMatrix a_matrix_z(int n);

// K_i locus monomials (stored exponents over the Z-ring).
ExpVec k_monomial_exp(const SlnQuiver& sln, int i);

// Matrix helpers.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix scale_by_monomial(const PolyMatrix& a, const ExpVec& stored_exp);
LaurentPoly det_leibniz(const PolyMatrix& a);

// Symbolic groupoid condition M_2 = M_3 M_1 (n <= 4); larger n go through
// the evaluation route in the verify layer.
bool groupoid_condition_symbolic(int n);

// Rank-condition matrix T_(3) S + (T_(3) S)^T.
PolyMatrix rank_matrix(int n);

// Random point on the Z-torus presented through Z = y^n, so the 1/n-lattice
// scalars stay evaluable; force_locus solves the merged variable of each K_i
// to put the point on K_i = 1.
EvalPoint y_point(const SlnQuiver& sln, std::uint64_t p, Rng& rng, bool force_locus);
// Evaluate an element of the 1/(2n)-lattice Z-ring at a y-point.
Fp eval_z(const LaurentPoly& f, const EvalPoint& y, int n);

}  // namespace ancq
