// Monodromy matrices of laminations on the twice-punctured torus (the n = 4
// picture) and the trace identities tying them to geodesic functions.
#pragma once

#include "ancq/geodesic.hpp"
#include "ancq/weyl.hpp"

namespace ancq {

// (edge variable, left turn?) crossings of a closed curve; weight k curves
// evaluate through the Chebyshev recursion.
struct LaminationCurve {
  std::vector<std::pair<int, bool>> crossings;
  int weight = 1;
};

using Mat2 = std::array<std::array<LaurentPoly, 2>, 2>;

Mat2 turn_matrix(const RingPtr& ring, int var, bool left);
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_inv_sl2(const Mat2& a);  // Tr(M) I - M for det 1
LaurentPoly mat_trace(const Mat2& a);

Mat2 monodromy(const RingPtr& ring, const LaminationCurve& c);
// Trace of the weight-k power via F_k.
LaurentPoly lamination_trace(const RingPtr& ring, const LaminationCurve& c);

// The fixed n = 4 curves g3, g4, g5.
LaminationCurve curve_g(int which);

// All eight identities of the n = 4 trace suite; sign_flips records whether
// an overall sign flip was needed on the two Casimir-valued traces.
struct TraceIdentityReport {
  CheckReport checks;
  bool sign_flipped = false;
};
TraceIdentityReport trace_identities_n4();

}  // namespace ancq
