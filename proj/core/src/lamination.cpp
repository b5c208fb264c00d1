#include "ancq/lamination.hpp"

namespace ancq {

Mat2 turn_matrix(const RingPtr& ring, int var, bool left) {
  LaurentPoly zero = LaurentPoly::zero(ring);
  LaurentPoly up = LaurentPoly::var_pow(ring, var, 1);     // X^{1/2}
  LaurentPoly dn = LaurentPoly::var_pow(ring, var, -1);    // X^{-1/2}
  if (left) return Mat2{{{up, up}, {zero, dn}}};
  return Mat2{{{up, zero}, {dn, dn}}};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

LaurentPoly mat_trace(const Mat2& a) { return a[0][0] + a[1][1]; }

Mat2 mat_inv_sl2(const Mat2& a) {
  LaurentPoly det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (!det.is_one()) throw error("mat_inv_sl2: determinant is not 1");
  LaurentPoly tr = mat_trace(a);
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r[i][j] = -a[i][j];
      if (i == j) r[i][j] += tr;
    }
  return r;
}

Mat2 monodromy(const RingPtr& ring, const LaminationCurve& c) {
  if (c.crossings.empty()) throw error("monodromy: empty curve");
  Mat2 acc = turn_matrix(ring, c.crossings[0].first, c.crossings[0].second);
  for (std::size_t i = 1; i < c.crossings.size(); ++i)
    acc = mat_mul(acc, turn_matrix(ring, c.crossings[i].first, c.crossings[i].second));
  return acc;
}

LaurentPoly lamination_trace(const RingPtr& ring, const LaminationCurve& c) {
  LaurentPoly tr = mat_trace(monodromy(ring, c));
  if (c.weight == 1) return tr;
  std::vector<Scalar> fk = chebyshev_F(c.weight);
  LaurentPoly acc = LaurentPoly::zero(ring);
  LaurentPoly pw = LaurentPoly::constant(ring, 1);
  for (std::size_t d = 0; d < fk.size(); ++d) {
    if (fk[d] != 0) acc += pw.scaled(fk[d]);
    if (d + 1 < fk.size()) pw *= tr;
  }
  return acc;
}

LaminationCurve curve_g(int which) {
  AnIndexer ix;
  ix.n = 4;
  auto X = [&](int l, int j) { return ix.idx(l, j); };
  switch (which) {
    case 3:
      return {{{X(1, 4), true}, {X(2, 1), true}, {X(1, 3), false}}, 1};
    case 4:
      return {{{X(1, 4), false}, {X(1, 1), true}, {X(2, 2), true}}, 1};
    case 5:
      return {{{X(1, 4), true}, {X(2, 1), false}, {X(1, 2), false}, {X(2, 2), true}}, 1};
    default:
      throw unsupported_error("curve_g: only g3, g4, g5 are stored");
  }
}

TraceIdentityReport trace_identities_n4() {
  const int n = 4;
  TraceIdentityReport rep;
  GeodesicSet gs = build_geodesics(n);
  const RingPtr& ring = gs.ring;
  Mat2 g3 = monodromy(ring, curve_g(3));
  Mat2 g4 = monodromy(ring, curve_g(4));
  Mat2 g5 = monodromy(ring, curve_g(5));

  rep.checks.expect(mat_trace(g3) == gs.at(1, 2), "Tr g3 = A_12");
  rep.checks.expect(mat_trace(g4) == gs.at(2, 3), "Tr g4 = A_23");
  rep.checks.expect(mat_trace(g5) == gs.at(2, 4), "Tr g5 = A_24");
  rep.checks.expect(mat_trace(mat_mul(g3, mat_inv_sl2(g4))) == gs.at(1, 3),
                    "Tr g3 g4^-1 = A_13");
  rep.checks.expect(mat_trace(mat_mul(g4, mat_inv_sl2(g5))) == gs.at(3, 4),
                    "Tr g4 g5^-1 = A_34");
  rep.checks.expect(mat_trace(mat_mul(g5, mat_inv_sl2(g3))) == gs.at(1, 4),
                    "Tr g5 g3^-1 = A_14");

  // Casimir-valued traces: -sqrt(K1/K2)(1 + K2/K1) and -sqrt(K1)(1 + 1/K1).
  ExpVec k1 = casimir_k_exp(ring, n, 1);
  ExpVec k2 = casimir_k_exp(ring, n, 2);
  ExpVec q = ev_sub(k1, k2);  // K1/K2, stored (even entries)
  auto half = [](ExpVec e) {
    for (int& v : e) v /= 2;
    return e;
  };
  LaurentPoly rhs1(ring), rhs2(ring);
  rhs1.add_term(half(q), -1);
  rhs1.add_term(ev_neg(half(q)), -1);
  rhs2.add_term(half(k1), -1);
  rhs2.add_term(ev_neg(half(k1)), -1);

  LaurentPoly lhs1 = mat_trace(mat_mul(mat_mul(g3, g4), mat_inv_sl2(g5)));
  LaurentPoly lhs2 = mat_trace(mat_mul(mat_mul(mat_inv_sl2(g5), g4), g3));
  if (lhs1 == rhs1 && lhs2 == rhs2) {
    rep.checks.expect(true, "");
    rep.checks.expect(true, "");
  } else if (lhs1 == -rhs1 && lhs2 == -rhs2) {
    rep.sign_flipped = true;
    rep.checks.expect(true, "");
    rep.checks.expect(true, "");
  } else {
    rep.checks.expect(false, "Tr g3 g4 g5^-1 Casimir-valued identity");
    rep.checks.expect(false, "Tr g5^-1 g4 g3 Casimir-valued identity");
  }
  return rep;
}

}  // namespace ancq
