#include "ancq/plabic.hpp"

#include <functional>

namespace ancq {

namespace {

int col_of(int n, int r, int k) { return 2 * (n - r + k) + 1; }
int port_in_col(int n, int i) { return 2 * (n + i) + 1; }
int port_left_col(int n, int i) { return 2 * (n - i) + 1; }

// Quiver variable at display column c in the band between rows r0-1 and r0
// (r0 = n+1 for the bottom row), if any.
std::optional<TriVertex> z_at(int n, int c, int r0) {
  if (r0 >= 2 && r0 <= n) {
    // above (r0, 2t+1): col = 2(n - r0 + 2t + 1) + 1
    int twot = (c - 1) / 2 - (n - r0) - 1;
    if (twot < 0 || twot % 2 != 0) return std::nullopt;
    int t = twot / 2;
    if (t > r0 - 1) return std::nullopt;
    TriVertex v{r0 - 1 - t, t, n - r0 + 1};
    if (v.a == n || v.b == n || v.c == n) return std::nullopt;
    return v;
  }
  if (r0 == n + 1) {
    // below (n, 2t): col = 4t + 1
    if ((c - 1) % 4 != 0) return std::nullopt;
    int t = (c - 1) / 4;
    if (t < 1 || t > n - 1) return std::nullopt;
    return TriVertex{n - t, t, 0};
  }
  return std::nullopt;
}

}  // namespace

RingPtr z_ring(const SlnQuiver& sln) {
  std::vector<std::string> names;
  names.reserve(sln.verts.size());
  for (const auto& v : sln.verts) names.push_back(v.name());
  return make_ring(std::move(names), 2 * sln.n);
}

PlabicGraph build_plabic(int n, bool reversed) {
  if (n < 2) throw unsupported_error("build_plabic: n >= 2 required");
  PlabicGraph g;
  g.n = n;
  g.reversed = reversed;
  g.sln = build_sln_quiver(n);
  g.zring = z_ring(g.sln);
  return g;
}

namespace {

// Product of quiver variables at column c in bands r0 = lo..hi, as a stored
// exponent vector.
ExpVec band_product(const PlabicGraph& g, int c, int lo, int hi) {
  ExpVec e(g.zring->size(), 0);
  for (int r0 = lo; r0 <= hi; ++r0) {
    auto v = z_at(g.n, c, r0);
    if (v && g.sln.has(*v)) e[g.sln.at(*v)] += g.zring->denom;
  }
  return e;
}

// Weight picked up when the path leaves a visited column at its final
// crossing row r. Westward strands collect the bands above the crossing;
// the reversed graph collects the bands below it plus, at entry, everything
// west of the starting port.
ExpVec column_weight(const PlabicGraph& g, int c, int r) {
  if (!g.reversed) return band_product(g, c, 2, r);
  return band_product(g, c, r + 1, g.n + 1);
}

struct Dp {
  // dp[r][k], k in 1..2r-1
  std::vector<std::vector<LaurentPoly>> at;
  explicit Dp(const PlabicGraph& g) {
    at.resize(g.n + 1);
    for (int r = 1; r <= g.n; ++r)
      at[r].assign(2 * r, LaurentPoly::zero(g.zring));
  }
};

}  // namespace

std::vector<LaurentPoly> PlabicGraph::enumerate_paths(int from, int to, Target kind) const {
  // Brute-force oracle used by tests: walk all monotone strands.
  std::vector<LaurentPoly> weights;
  struct State {
    int r, k;
    ExpVec acc;
  };
  std::function<void(State)> go = [&](State st) {
    const int n_ = n;
    // exit west
    if (!reversed && kind == Target::Left && st.k == 1 && st.r == to) {
      ExpVec e = ev_add(st.acc, column_weight(*this, col_of(n_, st.r, 1), st.r));
      weights.push_back(LaurentPoly::monomial(zring, e));
    }
    // exit down to bottom port
    if (kind == Target::Bottom && st.r == n_ && st.k == 2 * to - 1) {
      ExpVec e = ev_add(st.acc, column_weight(*this, col_of(n_, st.r, st.k), n_ + 1));
      weights.push_back(LaurentPoly::monomial(zring, e));
    }
    if (!reversed) {
      if (st.k > 1) {
        State w = st;
        w.acc = ev_add(w.acc, column_weight(*this, col_of(n_, st.r, st.k), st.r));
        w.k -= 1;
        go(w);
      }
      if (st.k % 2 == 1 && st.r < n_) {
        State d = st;
        d.r += 1;
        d.k += 1;
        go(d);
      }
    } else {
      if (st.k < 2 * st.r - 1) {
        State e = st;
        e.acc = ev_add(e.acc, column_weight(*this, col_of(n_, st.r, st.k), st.r));
        e.k += 1;
        go(e);
      }
      if (st.k % 2 == 1 && st.r < n_) {
        State d = st;
        d.r += 1;
        d.k += 1;
        go(d);
      }
    }
  };
  State start;
  if (!reversed) {
    start = {from, 2 * from - 1, band_product(*this, port_in_col(n, from), 2, from)};
  } else {
    ExpVec acc = column_weight(*this, port_left_col(n, from), from);
    for (int c = 1; c < port_left_col(n, from); ++c)
      acc = ev_add(acc, band_product(*this, c, 2, n + 1));
    start = {from, 1, acc};
  }
  go(start);
  return weights;
}

PolyMatrix transport(int n, int which) {
  if (which < 1 || which > 3) throw unsupported_error("transport: which in {1,2,3}");
  PlabicGraph g = build_plabic(n, which == 3);
  PolyMatrix T(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(g.zring)));

  for (int from = 1; from <= n; ++from) {
    Dp dp(g);
    if (which != 3) {
      ExpVec entry = band_product(g, port_in_col(n, from), 2, from);
      dp.at[from][2 * from - 1] = LaurentPoly::monomial(g.zring, entry);
      // sweep: rows top-down, k east-to-west
      for (int r = from; r <= n; ++r) {
        for (int k = 2 * r - 1; k >= 1; --k) {
          const LaurentPoly& cur = dp.at[r][k];
          if (cur.is_zero()) continue;
          if (k > 1) {
            ExpVec w = column_weight(g, col_of(n, r, k), r);
            dp.at[r][k - 1] += cur.shifted(w);
          }
          if (k % 2 == 1 && r < n) dp.at[r + 1][k + 1] += cur;
        }
      }
      for (int j = 1; j <= n; ++j) {
        if (which == 1) {
          if (j < from) continue;
          ExpVec w = column_weight(g, col_of(n, j, 1), j);
          T[j - 1][from - 1] = dp.at[j][1].shifted(w);
        } else {
          ExpVec w = column_weight(g, col_of(n, n, 2 * j - 1), n + 1);
          T[j - 1][from - 1] = dp.at[n][2 * j - 1].shifted(w);
        }
      }
    } else {
      ExpVec entry = column_weight(g, port_left_col(n, from), from);
      for (int c = 1; c < port_left_col(n, from); ++c)
        entry = ev_add(entry, band_product(g, c, 2, n + 1));
      dp.at[from][1] = LaurentPoly::monomial(g.zring, entry);
      for (int r = from; r <= n; ++r) {
        for (int k = 1; k <= 2 * r - 1; ++k) {
          const LaurentPoly& cur = dp.at[r][k];
          if (cur.is_zero()) continue;
          if (k < 2 * r - 1) {
            ExpVec w = column_weight(g, col_of(n, r, k), r);
            dp.at[r][k + 1] += cur.shifted(w);
          }
          if (k % 2 == 1 && r < n) dp.at[r + 1][k + 1] += cur;
        }
      }
      for (int j = 1; j <= n; ++j) {
        ExpVec w = column_weight(g, col_of(n, n, 2 * j - 1), n + 1);
        T[j - 1][from - 1] = dp.at[n][2 * j - 1].shifted(w);
      }
    }
  }
  return T;
}

std::vector<std::vector<int>> s_matrix(int n) {
  std::vector<std::vector<int>> S(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) S[i - 1][n - i] = ((n - i) % 2 == 0) ? 1 : -1;
  return S;
}

ExpVec d_scalar_exp(const SlnQuiver& sln, int which) {
  const int n = sln.n;
  ExpVec e(sln.verts.size(), 0);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i + k <= n; ++i) {
      int j = n - k - i;
      TriVertex v;
      if (which == 1) v = {i, j, k};
      else if (which == 2) v = {i, k, j};
      else v = {k, i, j};
      if (!sln.has(v)) continue;  // forgotten corners
      e[sln.at(v)] += 2 * k;  // exponent k/n on the 1/(2n) lattice
    }
  }
  return e;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  const RingPtr& ring = a[0][0].ring();
  PolyMatrix r(n, std::vector<LaurentPoly>(m, LaurentPoly::zero(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix r(a[0].size(), std::vector<LaurentPoly>(a.size(), LaurentPoly::zero(a[0][0].ring())));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

PolyMatrix scale_by_monomial(const PolyMatrix& a, const ExpVec& e) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& p : row) p = p.shifted(e);
  return r;
}

LaurentPoly det_leibniz(const PolyMatrix& a) {
  const int n = static_cast<int>(a.size());
  const RingPtr& ring = a[0][0].ring();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  LaurentPoly det = LaurentPoly::zero(ring);
  std::function<void(int, int)> rec = [&](int pos, int sign) {
    if (pos == n) {
      LaurentPoly term = LaurentPoly::constant(ring, sign);
      for (int i = 0; i < n && !term.is_zero(); ++i) term *= a[i][perm[i]];
      det += term;
      return;
    }
    for (int i = pos; i < n; ++i) {
      std::swap(perm[pos], perm[i]);
      rec(pos + 1, i == pos ? sign : -sign);
      std::swap(perm[pos], perm[i]);
    }
  };
  rec(0, 1);
  return det;
}

PolyMatrix m_matrix(int n, int which) {
  PolyMatrix T = transport(n, which);
  SlnQuiver sln = build_sln_quiver(n);
  auto S = s_matrix(n);
  const RingPtr& ring = T[0][0].ring();
  PolyMatrix ST(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (S[i][k] != 0) ST[i][j] += T[k][j].scaled(S[i][k]);
  return scale_by_monomial(ST, ev_neg(d_scalar_exp(sln, which)));
}

PolyMatrix a_matrix_z(int n) {
  if (n > 5) throw unsupported_error("a_matrix_z: symbolic budget is n <= 5");
  PolyMatrix T1 = transport(n, 1);
  PolyMatrix T2 = transport(n, 2);
  SlnQuiver sln = build_sln_quiver(n);
  PolyMatrix A = matmul(transpose(T1), T2);
  ExpVec d = ev_add(d_scalar_exp(sln, 1), d_scalar_exp(sln, 2));
  return scale_by_monomial(A, ev_neg(d));
}

ExpVec k_monomial_exp(const SlnQuiver& sln, int i) {
  const int n = sln.n;
  if (i < 1 || i > n - 1) throw unsupported_error("k_monomial_exp: 1 <= i <= n-1");
  const int D = 2 * n;
  ExpVec e(sln.verts.size(), 0);
  e[sln.at({0, i, n - i})] += 2 * D;
  for (int j = 1; j <= i - 1; ++j) e[sln.at({j, i - j, n - i})] += D;
  e[sln.at({i, 0, n - i})] += D;  // merged pair
  e[sln.at({n - i, i, 0})] += D;
  for (int j = 1; j <= n - i - 1; ++j) e[sln.at({j, i, n - i - j})] += D;
  return e;
}

bool groupoid_condition_symbolic(int n) {
  PolyMatrix M1 = m_matrix(n, 1), M2 = m_matrix(n, 2), M3 = m_matrix(n, 3);
  PolyMatrix P = matmul(M3, M1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(P[i][j] == M2[i][j])) return false;
  return true;
}

EvalPoint y_point(const SlnQuiver& sln, std::uint64_t p, Rng& rng, bool force_locus) {
  const int n = sln.n;
  EvalPoint y = EvalPoint::random(sln.verts.size(), p, rng);
  if (force_locus) {
    for (int i = 1; i <= n - 1; ++i) {
      // K_i at the y-point is (prod y^e)^n; the merged variable appears to
      // exponent one, so solving it pins the base to 1 without any roots.
      ExpVec ke = k_monomial_exp(sln, i);
      int solve_var = sln.at(TriVertex{i, 0, n - i});
      Fp rest(1, p);
      for (std::size_t v = 0; v < ke.size(); ++v) {
        if (static_cast<int>(v) == solve_var || ke[v] == 0) continue;
        rest *= y.value[v].pow(ke[v] / (2 * n));
      }
      y.value[solve_var] = rest.inv();
    }
  }
  return y;
}

Fp eval_z(const LaurentPoly& f, const EvalPoint& y, int n) {
  (void)n;
  const std::uint64_t p = y.prime();
  Fp acc(0, p);
  for (const auto& [e, c] : f.terms()) {
    unsigned long rn = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    unsigned long rd = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    Fp t = Fp(rn, p) / Fp(rd, p);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] % 2 != 0) throw fractional_exponent_error("eval_z: exponent off the y-lattice");
      t *= y.value[i].pow(e[i] / 2);
    }
    acc += t;
  }
  return acc;
}

PolyMatrix rank_matrix(int n) {
  PolyMatrix T3 = transport(n, 3);
  auto S = s_matrix(n);
  const RingPtr& ring = T3[0][0].ring();
  PolyMatrix TS(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (S[k][j] != 0) TS[i][j] += T3[i][k].scaled(S[k][j]);
  PolyMatrix M = TS;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] += TS[j][i];
  return M;
}

}  // namespace ancq
