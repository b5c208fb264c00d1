#include "ancq/invariants.hpp"

#include <algorithm>
#include <functional>

namespace ancq {

namespace {
// T_1 on index pairs: (i, j) -> (i+1, j+1), wrapping (i, n+1) to (j+1-n, i+1).
std::pair<int, int> shift_pair(int n, std::pair<int, int> ij) {
  auto [i, j] = ij;
  if (j + 1 <= n) return {i + 1, j + 1};
  return {j + 1 - n, i + 1};
}
}  // namespace

std::vector<std::pair<int, int>> a_deg_columns(int n) {
  AnIndexer ix;
  ix.n = n;
  std::vector<std::pair<int, int>> cols;
  for (int d = 1; d <= ix.cycles(); ++d) {
    std::pair<int, int> cur{n - d, n};
    for (int r = 0; r < ix.cycle_len(d); ++r) {
      cols.push_back(cur);
      cur = shift_pair(n, cur);
    }
  }
  return cols;
}

QMatrix a_deg(int n) {
  AnIndexer ix;
  ix.n = n;
  const int T = ix.total();
  GeodesicSet gs = build_geodesics(n);
  QMatrix M(T, std::vector<Scalar>(T, 0));
  auto cols = a_deg_columns(n);
  for (int c = 0; c < T; ++c) {
    auto [i, j] = cols[c];
    ExpVec v = gs.at(i, j).val();  // stored = doubled
    for (int r = 0; r < T; ++r) M[r][c] = Scalar(v[r], 2);
  }
  return M;
}

std::vector<std::pair<int, int>> b_deg_columns(int n) {
  AnIndexer ix;
  ix.n = n;
  std::vector<std::pair<int, int>> cols;
  for (int k = 1; k <= ix.cycles(); ++k)
    for (int r = 1; r <= ix.cycle_len(k); ++r) cols.emplace_back(k, r);
  return cols;
}

TinyPolygon tiny_polygon(int n, int k, int r) {
  AnIndexer ix;
  ix.n = n;
  const int m = ix.cycles();
  TinyPolygon t;
  t.minus = {ix.idx(k, r), ix.idx(k, r + 1)};
  if (k == 1 && m == 1) {
    // n = 3: the only block; treated by the odd innermost rule below.
    t.plus = {ix.idx(1, r + 2)};
    return t;
  }
  if (k == 1) {
    t.plus = {ix.idx(2, r + 1)};
  } else if (k < m) {
    t.plus = {ix.idx(k + 1, r + 1), ix.idx(k - 1, r)};
  } else if (n % 2 == 1) {
    t.plus = {ix.idx(m, r + m + 1), ix.idx(m - 1, r)};
  } else {
    t.plus = {ix.idx(m - 1, r + m), ix.idx(m - 1, r)};
  }
  return t;
}

QMatrix b_deg(int n) {
  AnIndexer ix;
  ix.n = n;
  const int T = ix.total();
  QMatrix M(T, std::vector<Scalar>(T, 0));
  auto cols = b_deg_columns(n);
  for (int c = 0; c < T; ++c) {
    auto [k, r] = cols[c];
    TinyPolygon t = tiny_polygon(n, k, r);
    for (int v : t.plus) M[v][c] += 1;
    for (int v : t.minus) M[v][c] -= 1;
  }
  return M;
}

bool degree_inverse_check(int n) {
  QMatrix A = a_deg(n), B = b_deg(n);
  const int T = static_cast<int>(A.size());
  for (int i = 0; i < T; ++i) {
    for (int j = 0; j < T; ++j) {
      Scalar acc = 0;
      for (int k = 0; k < T; ++k) acc += B[k][i] * A[k][j];  // (B^T A)_{ij}
      if (acc != Scalar(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

HlSolution solve_h(int n, const std::vector<int>& l) {
  AnIndexer ix;
  ix.n = n;
  const int T = ix.total();
  const int m = ix.cycles();
  if (static_cast<int>(l.size()) != T) throw error("solve_h: bad multidegree size");
  QMatrix B = b_deg(n);
  // L = B^T l, blocked by cycles.
  std::vector<long long> L(T, 0);
  for (int i = 0; i < T; ++i) {
    Scalar acc = 0;
    for (int k = 0; k < T; ++k) acc += B[k][i] * l[k];
    if (acc.get_den() != 1) throw error("solve_h: non-integral B^T l");
    L[i] = acc.get_num().get_si();
  }
  auto block_min = [&](int cyc) {
    long long mn = 0;
    bool first = true;
    for (int j = 1; j <= ix.cycle_len(cyc); ++j) {
      long long v = L[ix.idx(cyc, j)];
      if (first || v < mn) mn = v;
      first = false;
    }
    return mn;
  };
  std::vector<long long> q(m, 0);
  const int par = (n % 2 == 1) ? 1 : 2;
  long long mn = block_min(m);
  // minimal integer with par * q_m >= -mn
  q[m - 1] = (par == 1) ? -mn : -(mn / 2) + ((mn % 2 != 0 && mn < 0) ? 1 : 0);
  if (par == 2) {
    while (2 * q[m - 1] < -mn) ++q[m - 1];
    while (2 * (q[m - 1] - 1) >= -mn) --q[m - 1];
  }
  for (int i = m - 1; i >= 1; --i) q[i - 1] = q[i] - block_min(i);

  HlSolution sol;
  sol.q = q;
  sol.l = l;
  // p in a_deg column order: block d entry r corresponds to L-row idx(d, r).
  auto cols = a_deg_columns(n);
  sol.p.resize(T);
  for (int d = 1; d <= m; ++d) {
    long long shift = (d == m) ? par * q[m - 1] : q[d - 1] - q[d];
    for (int r = 1; r <= ix.cycle_len(d); ++r) {
      long long v = L[ix.idx(d, r)] + shift;
      if (v < 0) throw error("solve_h: negative geodesic exponent");
      int colpos = 0;
      for (int dd = 1; dd < d; ++dd) colpos += ix.cycle_len(dd);
      sol.p[colpos + r - 1] = v;
    }
  }
  return sol;
}

HlSolution weyl_on_h(int n, int gen, const HlSolution& sol) {
  AnIndexer ix;
  ix.n = n;
  const int m = ix.cycles();
  if (gen < 1 || gen > m) throw unsupported_error("weyl_on_h: bad generator");
  std::vector<long long> q = sol.q;
  if (gen < m) {
    std::swap(q[gen - 1], q[gen]);
  } else {
    q[m - 1] = -q[m - 1];
  }
  // l_w = l + sum (q'_i - q_i) val(K_i); val(K_i) is 1 on cycles >= i.
  std::vector<int> lw = sol.l;
  for (int i = 1; i <= m; ++i) {
    long long dq = q[i - 1] - sol.q[i - 1];
    if (dq == 0) continue;
    for (int c = i; c <= m; ++c)
      for (int j = 1; j <= ix.cycle_len(c); ++j) lw[ix.idx(c, j)] += static_cast<int>(dq);
  }
  HlSolution out = solve_h(n, lw);
  if (out.q != q || out.p != sol.p) throw error("weyl_on_h: transported solution mismatch");
  return out;
}

HlOrbit orbit_sum(int n, const std::vector<int>& l) {
  AnIndexer ix;
  ix.n = n;
  const int m = ix.cycles();
  HlSolution base = solve_h(n, l);
  // Enumerate distinct signed permutations of the Casimir exponents.
  std::vector<std::vector<long long>> tuples;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<long long> t(m);
      for (int i = 0; i < m; ++i) {
        t[i] = base.q[perm[i]];
        if (mask & (1 << i)) t[i] = -t[i];
      }
      if (std::find(tuples.begin(), tuples.end(), t) == tuples.end()) tuples.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  HlOrbit orbit;
  for (const auto& t : tuples) {
    std::vector<int> lw = base.l;
    for (int i = 1; i <= m; ++i) {
      long long dq = t[i - 1] - base.q[i - 1];
      if (dq == 0) continue;
      for (int c = i; c <= m; ++c)
        for (int j = 1; j <= ix.cycle_len(c); ++j) lw[ix.idx(c, j)] += static_cast<int>(dq);
    }
    HlSolution s = solve_h(n, lw);
    if (s.q != t) throw error("orbit_sum: transported exponents mismatch");
    orbit.members.push_back(std::move(s));
  }
  // All-nonpositive representative: -|q| sorted by decreasing magnitude.
  std::vector<long long> want(m);
  for (int i = 0; i < m; ++i) want[i] = -(base.q[i] < 0 ? -base.q[i] : base.q[i]);
  std::sort(want.begin(), want.end());  // most negative first
  bool found = false;
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    if (orbit.members[i].q == want) {
      orbit.nonpositive_rep = i;
      found = true;
      break;
    }
  }
  if (!found) throw error("orbit_sum: nonpositive representative missing");
  return orbit;
}

bool elementary_symmetric_check(int n, const SquarePoint& pt) {
  const std::uint64_t p = pt.u.prime();
  GeodesicSet gs = build_geodesics(n);
  std::vector<std::vector<Fp>> A(n, std::vector<Fp>(n, Fp(0, p)));
  for (int i = 0; i < n; ++i) A[i][i] = Fp(1, p);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) A[i - 1][j - 1] = eval_half(gs.at(i, j), pt);
  // interpolate det(A + lambda A^T)
  auto det_at = [&](Fp lam) {
    std::vector<std::vector<Fp>> M(n, std::vector<Fp>(n, Fp(0, p)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[i][j] = A[i][j] + lam * A[j][i];
    Fp det(1, p);
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (!M[r][c].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Fp(0, p);
      if (piv != c) {
        std::swap(M[piv], M[c]);
        det = -det;
      }
      det *= M[c][c];
      Fp inv = M[c][c].inv();
      for (int r = c + 1; r < n; ++r) {
        if (M[r][c].is_zero()) continue;
        Fp f = M[r][c] * inv;
        for (int cc = c; cc < n; ++cc) M[r][cc] -= f * M[c][cc];
      }
    }
    return det;
  };
  std::vector<Fp> xs, ys;
  for (int t = 0; t <= n; ++t) {
    xs.push_back(Fp::of_int(t, p));
    ys.push_back(det_at(xs.back()));
  }
  std::vector<Fp> coeff(n + 1, Fp(0, p));
  for (int t = 0; t <= n; ++t) {
    std::vector<Fp> basis = {Fp(1, p)};
    Fp denom(1, p);
    for (int s = 0; s <= n; ++s) {
      if (s == t) continue;
      std::vector<Fp> nb(basis.size() + 1, Fp(0, p));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        nb[d + 1] += basis[d];
        nb[d] -= basis[d] * xs[s];
      }
      basis = std::move(nb);
      denom *= xs[t] - xs[s];
    }
    Fp scale = ys[t] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) coeff[d] += basis[d] * scale;
  }
  std::vector<Fp> that = palindromic_to_t(coeff);
  // rhs: prod_i (t + sign (K_i + 1/K_i)), sign = + for odd n, - for even n.
  const int m = n / 2;
  std::vector<Fp> rhs = {Fp(1, p)};
  for (int i = 1; i <= m; ++i) {
    ExpVec ke = casimir_k_exp(gs.ring, n, i);
    Fp k(1, p);
    for (std::size_t v = 0; v < ke.size(); ++v)
      if (ke[v] != 0) k *= pt.x.value[v].pow(ke[v] / 2);
    Fp s = k + k.inv();
    if (n % 2 == 0) s = -s;
    std::vector<Fp> nr(rhs.size() + 1, Fp(0, p));
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      nr[d + 1] += rhs[d];
      nr[d] += rhs[d] * s;
    }
    rhs = std::move(nr);
  }
  if (that.size() != rhs.size()) return false;
  for (std::size_t d = 0; d < rhs.size(); ++d)
    if (!(that[d] == rhs[d])) return false;
  return true;
}

}  // namespace ancq
