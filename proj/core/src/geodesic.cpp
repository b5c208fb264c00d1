#include "ancq/geodesic.hpp"

#include <functional>
#include <sstream>

namespace ancq {

RingPtr geodesic_ring(int n) {
  AnIndexer ix;
  ix.n = n;
  std::vector<std::string> names(ix.total());
  for (int l = 1; l <= ix.cycles(); ++l)
    for (int j = 1; j <= ix.cycle_len(l); ++j) names[ix.idx(l, j)] = ix.label(l, j);
  return make_ring(std::move(names), 2);
}

LaurentPoly bracket_symbol(const RingPtr& ring, const std::vector<int>& vars) {
  if (vars.empty()) throw error("bracket_symbol: empty list");
  const int k = static_cast<int>(vars.size());
  LaurentPoly out(ring);
  for (int t = 0; t <= k; ++t) {
    // exponent +1/2 for positions > t, -1/2 for positions <= t
    ExpVec e(ring->size(), 0);
    for (int i = 0; i < k; ++i) e[vars[i]] += (i < t) ? -1 : 1;
    out.add_term(e, 1);
  }
  return out;
}

std::vector<int> elementary_geodesic_vars(int n, int q) {
  if (q < 1 || q > n - 1) throw unsupported_error("elementary_geodesic: 1 <= q <= n-1");
  AnIndexer ix;
  ix.n = n;
  const int m = n / 2;
  const int shift = q - (n - 1);
  std::vector<std::pair<int, int>> lj;
  for (int l = 1; l <= m; ++l) lj.emplace_back(l, 1);
  if (n % 2 == 1) lj.emplace_back(m, m + 1);
  for (int l = m - 1; l >= 1; --l) lj.emplace_back(l, l + 1);
  std::vector<int> vars;
  vars.reserve(lj.size());
  for (auto [l, j] : lj) vars.push_back(ix.idx(l, j + shift));
  return vars;
}

LaurentPoly elementary_geodesic(int n, int q) {
  return bracket_symbol(geodesic_ring(n), elementary_geodesic_vars(n, q));
}

std::vector<std::vector<int>> parallelogram_vars(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw unsupported_error("parallelogram_vars: need 1 <= i < j <= n");
  AnIndexer ix;
  ix.n = n;
  const int rows = n + i - j;
  const int width = j - i;
  std::vector<std::vector<int>> out(rows);
  for (int t = 0; t < rows; ++t) {
    int rho = j + t;
    for (int u = 0; u < width; ++u) {
      int s = n - 1 - t - u;
      StripEntry e = strip_entry(n, rho, s);
      out[t].push_back(ix.idx(e.level, e.pos));
    }
  }
  return out;
}

LaurentPoly geodesic_parallelogram(int n, int i, int j) {
  RingPtr ring = geodesic_ring(n);
  auto grid = parallelogram_vars(n, i, j);
  const int rows = static_cast<int>(grid.size());
  const int width = static_cast<int>(grid[0].size());
  LaurentPoly out(ring);
  // Monotone thresholds theta_0 <= ... <= theta_{rows-1} in [0, width]:
  // position (t, u) carries exponent +1/2 iff u >= theta_t.
  std::vector<int> theta(rows, 0);
  std::function<void(int, int)> rec = [&](int t, int lo) {
    if (t == rows) {
      ExpVec e(ring->size(), 0);
      for (int r = 0; r < rows; ++r)
        for (int u = 0; u < width; ++u) e[grid[r][u]] += (u >= theta[r]) ? 1 : -1;
      out.add_term(e, 1);
      return;
    }
    for (int v = lo; v <= width; ++v) {
      theta[t] = v;
      rec(t + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::vector<int>> an_eps2(int n) {
  return build_an_quiver(n).seed.exchange_x2;
}

LaurentPoly geodesic_recursion(int n, int i, int j) {
  if (j <= i) throw unsupported_error("geodesic_recursion: i < j required");
  if (j == i + 1) return elementary_geodesic(n, i);
  LaurentPoly left = geodesic_recursion(n, i, j - 1);
  LaurentPoly right = elementary_geodesic(n, j - 1);
  auto eps2 = an_eps2(n);
  return (left * right).scaled(Scalar(1, 2)) - poisson_bracket(left, right, eps2);
}

GeodesicSet build_geodesics(int n) {
  GeodesicSet gs;
  gs.n = n;
  gs.ring = geodesic_ring(n);
  gs.a.assign(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(gs.ring)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gs.a[i - 1][j - 1] = geodesic_parallelogram(n, i, j);
  return gs;
}

RingPtr u_ring(int n) {
  RingPtr x = geodesic_ring(n);
  std::vector<std::string> names;
  names.reserve(x->size());
  for (const auto& v : x->vars) names.push_back("u" + v.substr(1));
  return make_ring(std::move(names), 1);
}

LaurentPoly to_u(const LaurentPoly& f, const RingPtr& uring) {
  std::vector<ExpVec> image(f.ring()->size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i].assign(uring->size(), 0);
    image[i][i] = 2;  // X = u^2
  }
  return f.map_monomial(uring, image);
}

SquarePoint sample_square_point(std::size_t nvars, std::uint64_t p, Rng& rng) {
  SquarePoint pt;
  pt.u = EvalPoint::random(nvars, p, rng);
  pt.x.value.reserve(nvars);
  for (const auto& u : pt.u.value) pt.x.value.push_back(u * u);
  return pt;
}

Fp eval_half(const LaurentPoly& f, const SquarePoint& pt) {
  const std::uint64_t p = pt.u.prime();
  Fp acc(0, p);
  const int d = f.ring()->denom;
  if (d != 2) throw error("eval_half: expected half-integer lattice");
  for (const auto& [e, c] : f.terms()) {
    unsigned long rn = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    unsigned long rd = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    Fp t = Fp(rn, p) / Fp(rd, p);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      t *= pt.u.value[i].pow(e[i]);  // X^{e/2} = u^e
    }
    acc += t;
  }
  return acc;
}

// --- Bondal relations --------------------------------------------------------

namespace {

// Matrix-entry notation of the bracket relations: indices are unordered
// (geodesic functions symmetrize), the diagonal is 1.
LaurentPoly entry(const GeodesicSet& gs, int p, int q) {
  if (p == q) return LaurentPoly::constant(gs.ring, 1);
  return gs.at(std::min(p, q), std::max(p, q));
}

}  // namespace

BondalReport bondal_check(int n) {
  GeodesicSet gs = build_geodesics(n);
  auto eps2 = an_eps2(n);
  BondalReport rep;
  auto fail = [&](int a, int b, int c, int d, const char* fam) {
    std::ostringstream os;
    os << "{A_" << a << b << ", A_" << c << d << "} (" << fam << ")";
    rep.failures.push_back(os.str());
  };
  for (int i1 = 1; i1 <= n; ++i1)
    for (int k1 = i1 + 1; k1 <= n; ++k1)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int l1 = j1 + 1; l1 <= n; ++l1) {
          if (std::make_pair(i1, k1) >= std::make_pair(j1, l1)) continue;
          LaurentPoly lhs = poisson_bracket(gs.at(i1, k1), gs.at(j1, l1), eps2);
          LaurentPoly rhs(gs.ring);
          const char* fam = "";
          bool share_none = (j1 != i1 && j1 != k1 && l1 != i1 && l1 != k1);
          if (share_none) {
            if ((i1 < k1 && k1 < j1 && j1 < l1) || (i1 < j1 && l1 < k1 && j1 < l1)) {
              fam = "disjoint";  // zero bracket
            } else {
              fam = "crossing";  // i < j < k < l pattern
              rhs = entry(gs, i1, j1) * entry(gs, k1, l1) - entry(gs, i1, l1) * entry(gs, k1, j1);
            }
          } else if (k1 == j1) {
            fam = "share-middle";  // {a_ik, a_kl} = 1/2 a_ik a_kl - a_il
            rhs = (gs.at(i1, k1) * gs.at(j1, l1)).scaled(Scalar(1, 2)) - entry(gs, i1, l1);
          } else if (l1 == k1) {
            fam = "share-right";  // {a_ik, a_jk} = -1/2 a_ik a_jk + a_ij
            rhs = (gs.at(i1, k1) * gs.at(j1, l1)).scaled(Scalar(-1, 2)) + entry(gs, i1, j1);
          } else if (i1 == j1) {
            fam = "share-left";  // {a_ik, a_il} = -1/2 a_ik a_il + a_kl
            rhs = (gs.at(i1, k1) * gs.at(j1, l1)).scaled(Scalar(-1, 2)) + entry(gs, k1, l1);
          } else if (l1 == i1) {
            // {a_ik, a_jl} with l = i: reorder as {a_jl, a_ik} share-middle.
            fam = "share-middle(rev)";
            rhs = -((gs.at(j1, l1) * gs.at(i1, k1)).scaled(Scalar(1, 2)) - entry(gs, j1, k1));
          }
          ++rep.checked;
          if (!(lhs == rhs)) fail(i1, k1, j1, l1, fam);
        }
  return rep;
}

// --- One-step pullback -------------------------------------------------------

LaurentPoly pullback_one_mutation(const LaurentPoly& g, const Seed& s, int k) {
  const RingPtr& ring = g.ring();
  if (ring->denom != 2) throw error("pullback_one_mutation: expects the D=2 X-ring");
  const int N = s.size();
  // Per term a: image X^{sigma(a)} X_k^{delta(a)} (1+X_k)^{E(a)}; collect by
  // E and divide the global (1+X_k)^{E_min} factor back in at the end.
  long long emin2 = 0;  // E in stored (doubled) units; E2 = -sum eps_ki a_i
  bool first = true;
  std::vector<std::pair<ExpVec, long long>> terms;
  for (const auto& [a, c] : g.terms()) {
    if (c != 1) throw error("pullback_one_mutation: expected unit coefficients");
    long long e2 = 0;    // stored-units exponent of (1+X_k)
    long long dk2 = 0;   // stored-units correction to X_k exponent
    ExpVec na = a;
    na[k] = -a[k];
    for (int i = 0; i < N; ++i) {
      if (i == k || s.exchange_x2[k][i] == 0) continue;
      int eki = s.exchange_x2[k][i] / 2;
      e2 -= static_cast<long long>(eki) * a[i];
      if (eki > 0) dk2 += static_cast<long long>(eki) * a[i];
    }
    na[k] += static_cast<int>(dk2);
    terms.emplace_back(std::move(na), e2);
    if (first || e2 < emin2) emin2 = e2;
    first = false;
  }
  if (emin2 % 2 != 0)
    throw error("pullback_one_mutation: (1+X_k) exponent parity violates the M^{1/2}L form");
  LaurentPoly one = LaurentPoly::constant(ring, 1);
  LaurentPoly base = one + LaurentPoly::var_pow(ring, k, 2);
  LaurentPoly acc(ring);
  for (auto& [na, e2] : terms) {
    long long rel = (e2 - emin2) / 2;  // integer power of (1+X_k)
    acc += base.pow(static_cast<int>(rel)).shifted(na);
  }
  long long glob = emin2 / 2;
  if (glob >= 0) return acc * base.pow(static_cast<int>(glob));
  LaurentPoly r = acc;
  for (long long t = 0; t < -glob; ++t) r = r.div_one_plus_var(k, 2);
  return r;
}

bool m_half_l_form_ok(const LaurentPoly& g) {
  if (!g.has_unique_min()) return false;
  LaurentPoly L = g.div_monomial(g.val());
  for (const auto& [e, c] : L.terms()) {
    if (c.get_den() != 1 || c < 0) return false;
  }
  return true;
}

// --- Char-poly factorization --------------------------------------------------

bool charpoly_factor_check(int n, const SquarePoint& pt) {
  const std::uint64_t p = pt.u.prime();
  GeodesicSet gs = build_geodesics(n);
  // A(x) with unit diagonal.
  std::vector<std::vector<Fp>> A(n, std::vector<Fp>(n, Fp(0, p)));
  for (int i = 0; i < n; ++i) A[i][i] = Fp(1, p);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) A[i - 1][j - 1] = eval_half(gs.at(i, j), pt);

  // det(A + lambda A^T) by interpolation at n+1 points.
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
  // Lagrange interpolation on lambda = 0..n.
  std::vector<Fp> xs, ys;
  for (int t = 0; t <= n; ++t) {
    xs.push_back(Fp::of_int(t, p));
    ys.push_back(det_at(xs.back()));
  }
  std::vector<Fp> coeff(n + 1, Fp(0, p));
  for (int t = 0; t <= n; ++t) {
    // basis polynomial prod_{s != t} (lambda - x_s) / (x_t - x_s)
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
  // Palindromic?
  for (int i = 0; i <= n; ++i)
    if (coeff[i] != coeff[n - i]) return false;
  // Right-hand side product over Casimirs.
  RingPtr ring = gs.ring;
  const int m = n / 2;
  std::vector<Fp> rhs = {Fp(1, p)};
  auto mul_quadratic = [&](Fp lin) {
    // multiply by (lambda^2 + s*lambda + 1)
    std::vector<Fp> nr(rhs.size() + 2, Fp(0, p));
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      nr[d] += rhs[d];
      nr[d + 1] += rhs[d] * lin;
      nr[d + 2] += rhs[d];
    }
    rhs = std::move(nr);
  };
  for (int i = 1; i <= m; ++i) {
    ExpVec ke = casimir_k_exp(ring, n, i);
    Fp k(1, p);
    for (std::size_t v = 0; v < ke.size(); ++v)
      if (ke[v] != 0) k *= pt.x.value[v].pow(ke[v] / 2);
    Fp s = k + k.inv();
    mul_quadratic(n % 2 == 0 ? -s : s);
  }
  if (n % 2 == 1) {
    // multiply by (lambda + 1)
    std::vector<Fp> nr(rhs.size() + 1, Fp(0, p));
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      nr[d] += rhs[d];
      nr[d + 1] += rhs[d];
    }
    rhs = std::move(nr);
  }
  if (rhs.size() != coeff.size()) return false;
  for (std::size_t d = 0; d < rhs.size(); ++d)
    if (!(rhs[d] == coeff[d])) return false;
  return true;
}

ExpVec casimir_c_exp(const RingPtr& ring, int n, int i) {
  AnIndexer ix;
  ix.n = n;
  ExpVec e(ring->size(), 0);
  for (int j = 1; j <= ix.cycle_len(i); ++j) e[ix.idx(i, j)] += ring->denom;
  return e;
}

ExpVec casimir_k_exp(const RingPtr& ring, int n, int i) {
  AnIndexer ix;
  ix.n = n;
  ExpVec e(ring->size(), 0);
  for (int l = i; l <= ix.cycles(); ++l) {
    ExpVec c = casimir_c_exp(ring, n, l);
    e = ev_add(e, c);
  }
  return e;
}

}  // namespace ancq
