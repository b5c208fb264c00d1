#include "ancq/seed.hpp"

#include <array>

namespace ancq {

Seed Seed::make(int n) {
  Seed s;
  s.exchange_x2.assign(n, std::vector<int>(n, 0));
  s.frozen.assign(n, false);
  s.labels.resize(n);
  for (int i = 0; i < n; ++i) s.labels[i] = "x" + std::to_string(i + 1);
  return s;
}

void Seed::add_arrow_x2(int i, int j, int w2) {
  if (i == j) throw error("add_arrow_x2: loop");
  exchange_x2[i][j] += w2;
  exchange_x2[j][i] -= w2;
}

bool Seed::skew_symmetric() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (exchange_x2[i][j] != -exchange_x2[j][i]) return false;
    }
  }
  return true;
}

bool Seed::integral_where_required() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (exchange_x2[i][j] % 2 != 0 && !(frozen[i] && frozen[j])) return false;
    }
  }
  return true;
}

void Seed::validate() const {
  if (!skew_symmetric()) throw error("seed: exchange matrix not skew-symmetric");
  if (!integral_where_required()) throw error("seed: half-integer entry between mutable vertices");
}

RingPtr Seed::x_ring() const { return make_ring(labels, 1); }

Seed mutate_exchange(const Seed& s, int k) {
  if (s.frozen.at(k)) throw frozen_target_error("mutate_exchange: frozen vertex " + s.labels[k]);
  const int n = s.size();
  Seed r = s;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.exchange_x2[i][j] = -s.exchange_x2[i][j];
      } else {
        // doubled units: e2' = e2 + (|e2_ik| e2_kj + e2_ik |e2_kj|) / (2*2)
        long long t = static_cast<long long>(std::abs(s.exchange_x2[i][k])) * s.exchange_x2[k][j] +
                      static_cast<long long>(s.exchange_x2[i][k]) * std::abs(s.exchange_x2[k][j]);
        if (t % 4 != 0) throw error("mutate_exchange: non-lattice update");
        long long v = s.exchange_x2[i][j] + t / 4;
        if (v > (1LL << 30) || v < -(1LL << 30))
          throw error("mutate_exchange: exchange entry out of machine range");
        r.exchange_x2[i][j] = static_cast<int>(v);
      }
    }
  }
  return r;
}

CMatrixTracker::CMatrixTracker(int n) : c_(n, std::vector<int>(n, 0)) {
  for (int i = 0; i < n; ++i) c_[i][i] = 1;
}

void CMatrixTracker::step_mutate(int k, const Seed& cur) {
  const int n = static_cast<int>(c_.size());
  std::vector<std::vector<int>> nc = c_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == k) {
        nc[i][j] = -c_[i][j];
      } else {
        if (cur.exchange_x2[k][j] % 2 != 0) throw error("CMatrix: half-integer exchange entry");
        long long ekj = cur.exchange_x2[k][j] / 2;
        long long v = c_[i][j] + c_[i][k] * std::max(0LL, ekj) +
                      std::max(0LL, static_cast<long long>(-c_[i][k])) * ekj;
        if (v > (1LL << 30) || v < -(1LL << 30))
          throw error("CMatrix: entry out of machine range");
        nc[i][j] = static_cast<int>(v);
      }
    }
  }
  c_ = std::move(nc);
  if (!sign_coherent()) throw error("CMatrix: sign coherence violated");
}

void CMatrixTracker::step_swap(int j, int k) {
  for (auto& row : c_) std::swap(row[j], row[k]);
}

bool CMatrixTracker::is_identity() const {
  const int n = static_cast<int>(c_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool CMatrixTracker::is_minus_identity() const {
  const int n = static_cast<int>(c_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c_[i][j] != (i == j ? -1 : 0)) return false;
  return true;
}

bool CMatrixTracker::all_nonpositive() const {
  for (const auto& row : c_)
    for (int v : row)
      if (v > 0) return false;
  return true;
}

bool CMatrixTracker::sign_coherent() const {
  const int n = static_cast<int>(c_.size());
  for (int j = 0; j < n; ++j) {
    int sign = 0;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      if (c_[i][j] == 0) continue;
      nonzero = true;
      int s = c_[i][j] > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) return false;
    }
    if (!nonzero) return false;
  }
  return true;
}

std::vector<FactoredRat> pullback_x(const Seed& s, int k) {
  if (s.frozen.at(k)) throw frozen_target_error("pullback_x: frozen vertex");
  const int n = s.size();
  RingPtr ring = s.x_ring();
  std::vector<FactoredRat> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    FactoredRat f(ring);
    ExpVec e(n, 0);
    if (i == k) {
      e[k] = -1;
      f.mul_monomial(e);
    } else {
      e[i] = 1;
      f.mul_monomial(e);
      if (s.exchange_x2[k][i] != 0) {
        if (s.exchange_x2[k][i] % 2 != 0) throw error("pullback_x: half-integer entry");
        int eki = s.exchange_x2[k][i] / 2;
        int sg = eki > 0 ? 1 : -1;
        // (1 + X_k^{-sgn})^{-eki}
        LaurentPoly one = LaurentPoly::constant(ring, 1);
        f.mul_poly(one + LaurentPoly::var_pow(ring, k, -sg), -eki);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

EvalPoint step_point_x(const Seed& s, int k, const EvalPoint& x) {
  if (s.frozen.at(k)) throw frozen_target_error("step_point_x: frozen vertex");
  const int n = s.size();
  const std::uint64_t p = x.prime();
  EvalPoint y;
  y.value.resize(n, Fp(0, p));
  Fp xk = x.value[k];
  if (xk.is_zero()) throw singular_point_error("step_point_x: X_k = 0");
  Fp one(1, p);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      y.value[i] = xk.inv();
      continue;
    }
    int e2 = s.exchange_x2[k][i];
    if (e2 == 0) {
      y.value[i] = x.value[i];
      continue;
    }
    if (e2 % 2 != 0) throw error("step_point_x: half-integer entry");
    int eki = e2 / 2;
    Fp base = one + (eki > 0 ? xk.inv() : xk);
    if (base.is_zero()) throw singular_point_error("step_point_x: 1 + X_k^{+-1} = 0");
    y.value[i] = x.value[i] * base.pow(-eki);
  }
  return y;
}

EvalPoint step_point_swap(int j, int k, const EvalPoint& x) {
  EvalPoint y = x;
  std::swap(y.value[j], y.value[k]);
  if (y.has_tangent()) std::swap(y.tangent[j], y.tangent[k]);
  return y;
}

EvalPoint step_point_a(const Seed& s, int k, const EvalPoint& a) {
  if (s.frozen.at(k)) throw frozen_target_error("step_point_a: frozen vertex");
  const int n = s.size();
  const std::uint64_t p = a.prime();
  Fp plus(1, p), minus(1, p);
  for (int j = 0; j < n; ++j) {
    int e2 = s.exchange_x2[k][j];
    if (e2 % 2 != 0) throw error("step_point_a: half-integer entry");
    int e = e2 / 2;
    if (e > 0) plus *= a.value[j].pow(e);
    if (e < 0) minus *= a.value[j].pow(-e);
  }
  if (a.value[k].is_zero()) throw singular_point_error("step_point_a: A_k = 0");
  EvalPoint b = a;
  b.value[k] = (plus + minus) / a.value[k];
  if (b.value[k].is_zero()) throw singular_point_error("step_point_a: image coordinate vanishes");
  return b;
}

std::vector<ExpVec> ensemble_pullback(const Seed& s) {
  const int n = s.size();
  std::vector<ExpVec> cols(n, ExpVec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (s.exchange_x2[k][i] % 2 != 0)
        throw error("ensemble_pullback: half-integer entries");
      cols[i][k] = s.exchange_x2[k][i] / 2;
    }
  }
  return cols;
}

Seed frame(const Seed& s) {
  const int n = s.size();
  Seed r = Seed::make(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.exchange_x2[i][j] = s.exchange_x2[i][j];
    r.labels[i] = s.labels[i];
    r.frozen[i] = s.frozen[i];
    r.labels[n + i] = s.labels[i] + "^";
    r.frozen[n + i] = true;
    r.set_e2(i, n + i, 2);  // arrow i -> hat(i)
  }
  return r;
}

Scalar det_eps(const Seed& s) {
  const int n = s.size();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Scalar(s.exchange_x2[i][j], 2);
  Scalar det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r0 = col; r0 < n; ++r0) {
      if (m[r0][col] != 0) {
        piv = r0;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = 1 / m[col][col];
    for (int r0 = col + 1; r0 < n; ++r0) {
      if (m[r0][col] == 0) continue;
      Scalar f = m[r0][col] * inv;
      for (int c0 = col; c0 < n; ++c0) m[r0][c0] -= f * m[col][c0];
    }
  }
  return det;
}

WordResult apply_word(const Seed& s, const MutationWord& w, bool with_xmap,
                      std::size_t term_budget) {
  WordResult res{s, CMatrixTracker(s.size()), std::nullopt};
  std::optional<std::vector<RatFunc>> map;
  if (with_xmap) {
    std::vector<RatFunc> id;
    RingPtr ring = s.x_ring();
    for (int i = 0; i < s.size(); ++i)
      id.push_back(RatFunc(LaurentPoly::variable(ring, i)));
    map = std::move(id);
  }
  for (const auto& st : w) {
    if (st.kind == MutationStep::Mutate) {
      res.c.step_mutate(st.a, res.seed);
      if (map) {
        // Substitute the one-step pullback into the composed map: the new
        // component i is old_i adjusted by the (1 + comp_k^{+-1}) factors.
        try {
          std::vector<RatFunc> nm = *map;
          const RatFunc& ck = (*map)[st.a];
          RingPtr ring = s.x_ring();
          RatFunc one = RatFunc::one(ring);
          for (int i = 0; i < res.seed.size(); ++i) {
            if (i == st.a) {
              nm[i] = ck.inv();
              continue;
            }
            int e2 = res.seed.exchange_x2[st.a][i];
            if (e2 == 0) continue;
            int eki = e2 / 2;
            RatFunc base = one + (eki > 0 ? ck.inv() : ck);
            nm[i] = (*map)[i] * base.pow(-eki);
            if (nm[i].nterms() > term_budget) throw budget_error("xmap budget");
          }
          map = std::move(nm);
        } catch (const budget_error&) {
          map.reset();
        }
      }
      res.seed = mutate_exchange(res.seed, st.a);
    } else {
      res.c.step_swap(st.a, st.b);
      Seed& q = res.seed;
      for (auto& row : q.exchange_x2) std::swap(row[st.a], row[st.b]);
      std::swap(q.exchange_x2[st.a], q.exchange_x2[st.b]);
      std::swap(q.labels[st.a], q.labels[st.b]);
      bool tmp = q.frozen[st.a];
      q.frozen[st.a] = q.frozen[st.b];
      q.frozen[st.b] = tmp;
      if (map) std::swap((*map)[st.a], (*map)[st.b]);
    }
  }
  res.xmap = std::move(map);
  return res;
}

EvalPoint apply_word_point(const Seed& s, const MutationWord& w, const EvalPoint& x) {
  Seed cur = s;
  EvalPoint pt = x;
  for (const auto& st : w) {
    if (st.kind == MutationStep::Mutate) {
      pt = step_point_x(cur, st.a, pt);
      cur = mutate_exchange(cur, st.a);
    } else {
      pt = step_point_swap(st.a, st.b, pt);
      for (auto& row : cur.exchange_x2) std::swap(row[st.a], row[st.b]);
      std::swap(cur.exchange_x2[st.a], cur.exchange_x2[st.b]);
      bool tmp = cur.frozen[st.a];
      cur.frozen[st.a] = cur.frozen[st.b];
      cur.frozen[st.b] = tmp;
    }
  }
  return pt;
}

bool sign_coherence_random_words(int words, int max_len, int max_rank, Rng& rng) {
  for (int t = 0; t < words; ++t) {
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_rank - 2)));
    std::vector<std::vector<mpz_class>> eps(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        long v = static_cast<long>(rng.range(-3, 3));
        eps[i][j] = v;
        eps[j][i] = -v;
      }
    }
    std::vector<std::vector<mpz_class>> c(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 1;
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    for (int s = 0; s < len; ++s) {
      int k = static_cast<int>(rng.below(n));
      auto nc = c;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (j == k) {
            nc[i][j] = -c[i][j];
          } else {
            mpz_class pos = eps[k][j] > 0 ? eps[k][j] : mpz_class(0);
            mpz_class cpos = c[i][k] < 0 ? mpz_class(-c[i][k]) : mpz_class(0);
            nc[i][j] = c[i][j] + c[i][k] * pos + cpos * eps[k][j];
          }
        }
      }
      c = std::move(nc);
      auto ne = eps;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == k || j == k) {
            ne[i][j] = -eps[i][j];
          } else {
            ne[i][j] = eps[i][j] + (abs(eps[i][k]) * eps[k][j] + eps[i][k] * abs(eps[k][j])) / 2;
          }
        }
      }
      eps = std::move(ne);
      for (int j = 0; j < n; ++j) {
        int sign = 0;
        bool nz = false;
        for (int i = 0; i < n; ++i) {
          if (c[i][j] == 0) continue;
          nz = true;
          int sg = c[i][j] > 0 ? 1 : -1;
          if (sign == 0) sign = sg;
          if (sg != sign) return false;
        }
        if (!nz) return false;
      }
    }
  }
  return true;
}

std::optional<std::array<int, 3>> find_markov_subquiver(const Seed& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    if (s.frozen[a]) continue;
    for (int b = a + 1; b < n; ++b) {
      if (s.frozen[b]) continue;
      if (std::abs(s.exchange_x2[a][b]) != 4) continue;
      for (int c = b + 1; c < n; ++c) {
        if (s.frozen[c]) continue;
        if (std::abs(s.exchange_x2[b][c]) != 4 || std::abs(s.exchange_x2[a][c]) != 4) continue;
        // cyclic orientation: eps_ab, eps_bc, eps_ca share sign
        int ab = s.exchange_x2[a][b], bc = s.exchange_x2[b][c], ca = s.exchange_x2[c][a];
        if (ab == bc && bc == ca) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Seed full_subquiver(const Seed& s, const std::vector<int>& verts) {
  const int m = static_cast<int>(verts.size());
  Seed r = Seed::make(m);
  for (int i = 0; i < m; ++i) {
    r.labels[i] = s.labels[verts[i]];
    r.frozen[i] = s.frozen[verts[i]];
    for (int j = 0; j < m; ++j) r.exchange_x2[i][j] = s.exchange_x2[verts[i]][verts[j]];
  }
  return r;
}

}  // namespace ancq
