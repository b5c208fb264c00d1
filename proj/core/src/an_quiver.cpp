#include "ancq/an_quiver.hpp"

namespace ancq {

SlnQuiver build_sln_quiver(int n) {
  if (n < 3) throw unsupported_error("build_sln_quiver: n >= 3 required");
  SlnQuiver q;
  q.n = n;
  auto corner = [n](int a, int b, int c) { return a == n || b == n || c == n; };
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      if (corner(a, b, c)) continue;
      TriVertex v{a, b, c};
      q.index_of[v] = static_cast<int>(q.verts.size());
      q.verts.push_back(v);
    }
  }
  const int N = static_cast<int>(q.verts.size());
  q.seed = Seed::make(N);
  for (int i = 0; i < N; ++i) {
    const TriVertex& v = q.verts[i];
    q.seed.labels[i] = v.name();
    q.seed.frozen[i] = (v.a == 0 || v.b == 0 || v.c == 0);
  }
  auto arrow = [&](TriVertex u, TriVertex v, int w2) {
    if (!q.has(u) || !q.has(v)) return;  // corner endpoints are forgotten
    q.seed.add_arrow_x2(q.at(u), q.at(v), w2);
  };
  // Each small downward triangle (a,b,c), a+b+c = n-1, contributes the
  // 3-cycle; sides lying on the boundary of the big triangle weigh 1/2.
  for (int a = 0; a <= n - 1; ++a) {
    for (int b = 0; a + b <= n - 1; ++b) {
      int c = n - 1 - a - b;
      arrow({a, b, c + 1}, {a, b + 1, c}, a == 0 ? 1 : 2);
      arrow({a, b + 1, c}, {a + 1, b, c}, c == 0 ? 1 : 2);
      arrow({a + 1, b, c}, {a, b, c + 1}, b == 0 ? 1 : 2);
    }
  }
  q.seed.validate();
  return q;
}

std::vector<int> AnIndexer::cycle_indices(int l) const {
  if (l < 1 || l > cycles()) throw unsupported_error("cycle_indices: bad cycle");
  std::vector<int> out;
  for (int j = 1; j <= cycle_len(l); ++j) out.push_back(idx(l, j));
  return out;
}

namespace {
// SL_n lattice points carried by X_{l,j} (one interior point or a merged
// boundary pair), following the explicit cycle walk of the relabeling.
std::vector<TriVertex> an_preimages(int n, int l, int j) {
  if (2 * l == n) {
    if (j == 1) return {{l, l - 1, 1}};
    if (j == 2) return {{l, l, 0}, {l, 0, l}};
    int t = j - 2;  // 1..l-2
    return {{l, t, l - t}};
  }
  if (j == 1) return {{l, n - l - 1, 1}};
  if (j == 2) return {{l, n - l, 0}, {n - l, 0, l}};
  if (j <= l + 1) {
    int t = j - 2;  // 1..l-1
    return {{n - l, t, l - t}};
  }
  if (j == l + 2) return {{n - l, l, 0}, {l, 0, n - l}};
  int t = j - l - 2;  // 1..n-l-2
  return {{l, t, n - l - t}};
}
}  // namespace

AnQuiver build_an_quiver(int n) {
  if (n < 3) throw unsupported_error("build_an_quiver: n >= 3 required");
  SlnQuiver sln = build_sln_quiver(n);
  AnQuiver q;
  q.ix.n = n;
  const int T = q.ix.total();
  q.seed = Seed::make(T);
  q.preimages.resize(T);

  // Where each SL_n vertex lands (deleted vertices map to -1).
  std::vector<int> target(sln.verts.size(), -1);
  std::vector<bool> claimed(sln.verts.size(), false);
  for (int l = 1; l <= q.ix.cycles(); ++l) {
    for (int j = 1; j <= q.ix.cycle_len(l); ++j) {
      int id = q.ix.idx(l, j);
      q.seed.labels[id] = q.ix.label(l, j);
      for (const TriVertex& v : an_preimages(n, l, j)) {
        int si = sln.at(v);
        if (claimed[si]) throw error("build_an_quiver: vertex claimed twice: " + v.name());
        claimed[si] = true;
        target[si] = id;
        q.preimages[id].push_back(v);
      }
    }
  }
  for (std::size_t si = 0; si < sln.verts.size(); ++si) {
    const TriVertex& v = sln.verts[si];
    bool deleted = (v.a == 0);  // the Z_{0,i,n-i} side is removed
    if (claimed[si] == deleted)
      throw error("build_an_quiver: coverage mismatch at " + v.name());
  }

  // Amalgamation sums exchange entries over preimages; opposite arrows cancel
  // in the sum.
  for (std::size_t u = 0; u < sln.verts.size(); ++u) {
    if (target[u] < 0) continue;
    for (std::size_t v = 0; v < sln.verts.size(); ++v) {
      if (target[v] < 0 || target[u] == target[v]) continue;
      q.seed.exchange_x2[target[u]][target[v]] += sln.seed.e2(static_cast<int>(u), static_cast<int>(v));
    }
  }
  q.seed.validate();
  for (int i = 0; i < T; ++i) {
    for (int j = 0; j < T; ++j) {
      if (q.seed.exchange_x2[i][j] % 2 != 0)
        throw error("build_an_quiver: amalgamation left a half-integer entry");
    }
  }
  // In-cycle arrows (cycles of length >= 3 carry X_{l,j} -> X_{l,j+1}).
  for (int l = 1; l <= q.ix.cycles(); ++l) {
    int N = q.ix.cycle_len(l);
    if (N < 3) continue;
    for (int j = 1; j <= N; ++j) {
      if (q.seed.e2(q.ix.idx(l, j), q.ix.idx(l, j + 1)) <= 0)
        throw error("build_an_quiver: missing in-cycle arrow");
    }
  }
  return q;
}

std::vector<int> shift_relabel(int n, int m) {
  AnIndexer ix;
  ix.n = n;
  std::vector<int> sigma(ix.total());
  for (int l = 1; l <= ix.cycles(); ++l) {
    for (int j = 1; j <= ix.cycle_len(l); ++j) sigma[ix.idx(l, j)] = ix.idx(l, j + m);
  }
  return sigma;
}

bool strip_in_range(int n, int rho, int s) {
  return rho >= 1 && rho <= 2 * n - 1 && s >= std::max(1, n - rho) &&
         s <= std::min(n - 1, 2 * n - rho);
}

StripEntry strip_entry(int n, int rho, int s) {
  if (!strip_in_range(n, rho, s)) throw error("strip_entry: out of range");
  int l = std::min(s, n - s);
  int j0 = (2 * s < n) ? s + 1 : 1;
  AnIndexer ix;
  ix.n = n;
  return {l, ix.mod_pos(l, j0 + rho - (n - 1))};
}

// --- Doubled quiver ---------------------------------------------------------

int DoubledQuiver::plain(int l, int j) const { return ix.idx(l, j); }
int DoubledQuiver::tilde(int l, int j) const { return ix.total() + ix.idx(l, j); }

DoubledQuiver build_doubled(int n) {
  if (n < 3 || n > 6)
    throw unsupported_error("build_doubled: no registered template for n=" + std::to_string(n));
  DoubledQuiver d;
  d.n = n;
  d.ix.n = n;
  const int T = d.ix.total();
  const int m = n / 2;
  const bool even = (n % 2 == 0);
  d.seed = Seed::make(2 * T);
  for (int l = 1; l <= m; ++l) {
    for (int j = 1; j <= d.ix.cycle_len(l); ++j) {
      d.seed.labels[d.plain(l, j)] = d.ix.label(l, j);
      d.seed.labels[d.tilde(l, j)] = "Xt" + d.ix.label(l, j).substr(1);
    }
  }
  auto P = [&](int l, int j) { return d.plain(l, d.ix.mod_pos(l, j)); };
  auto Q = [&](int l, int j) { return d.tilde(l, d.ix.mod_pos(l, j)); };

  // Merged innermost cycle for even n: plain positions then tilde positions.
  std::vector<int> W;
  if (even) {
    for (int k = 1; k <= m; ++k) W.push_back(P(m, k));
    for (int k = 1; k <= m; ++k) W.push_back(Q(m, k));
  }
  auto Wat = [&](int k) {  // 1-based cyclic
    int r = ((k - 1) % n + n) % n;
    return W[r];
  };

  int outer = even ? m - 1 : m;  // levels with their own plain/tilde cycles
  for (int l = 1; l <= outer; ++l) {
    for (int j = 1; j <= n; ++j) {
      d.seed.add_arrow_x2(P(l, j), P(l, j + 1), 2);
      d.seed.add_arrow_x2(Q(l, j), Q(l, j + 1), 2);
    }
  }
  for (int l = 1; l + 1 <= outer; ++l) {
    for (int j = 1; j <= n; ++j) {
      d.seed.add_arrow_x2(P(l, j), P(l + 1, j), 2);
      d.seed.add_arrow_x2(P(l + 1, j), P(l, j - 1), 2);
      d.seed.add_arrow_x2(Q(l, j), Q(l + 1, j), 2);
      d.seed.add_arrow_x2(Q(l + 1, j), Q(l, j - 1), 2);
    }
  }
  if (even) {
    for (int k = 1; k <= n; ++k) d.seed.add_arrow_x2(Wat(k), Wat(k + 1), 2);
    if (m >= 2) {
      for (int j = 1; j <= n; ++j) d.seed.add_arrow_x2(P(m - 1, j), Wat(j + m), 2);
      for (int k = 1; k <= n; ++k) d.seed.add_arrow_x2(Wat(k), P(m - 1, k + m - 1), 2);
      for (int j = 1; j <= n; ++j) d.seed.add_arrow_x2(Q(m - 1, j), Wat(j), 2);
      for (int k = 1; k <= n; ++k) d.seed.add_arrow_x2(Wat(k), Q(m - 1, k - 1), 2);
    }
  } else {
    // Innermost chords resolve across the sheets.
    for (int j = 1; j <= n; ++j) {
      d.seed.add_arrow_x2(P(m, j), Q(m, j + m), 2);
      d.seed.add_arrow_x2(Q(m, j), P(m, j + m), 2);
    }
  }
  d.seed.validate();

  for (int l = 1; l <= outer; ++l) {
    std::vector<int> cp, ct;
    for (int j = 1; j <= n; ++j) cp.push_back(P(l, j));
    for (int j = 1; j <= n; ++j) ct.push_back(Q(l, j));
    d.cycles.push_back(cp);
    d.cycles.push_back(ct);
  }
  if (even) d.cycles.push_back(W);
  validate_doubled(d);
  return d;
}

void validate_doubled(const DoubledQuiver& d) {
  const Seed& s = d.seed;
  // V1: chordless directed cycles with in-cycle arrows only.
  for (const auto& cyc : d.cycles) {
    const int N = static_cast<int>(cyc.size());
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        int want = (j == (i + 1) % N) ? 2 : (i == (j + 1) % N ? -2 : 0);
        if (s.e2(cyc[i], cyc[j]) != want && i != j)
          throw error("doubled template: V1 fails (cycle not chordless)");
      }
    }
  }
  // V2: balance against every external vertex.
  for (const auto& cyc : d.cycles) {
    std::vector<bool> in(s.size(), false);
    for (int v : cyc) in[v] = true;
    for (int v = 0; v < s.size(); ++v) {
      if (in[v]) continue;
      long long sum = 0;
      for (int j : cyc) sum += s.e2(v, j);
      if (sum != 0) throw error("doubled template: V2 fails (unbalanced cycle)");
    }
  }
  // V3: projection onto the standard quiver.
  AnQuiver std_q = build_an_quiver(d.n);
  const int T = d.ix.total();
  for (int p = 0; p < T; ++p) {
    for (int q = 0; q < T; ++q) {
      long long proj = 0;
      proj += s.e2(p, q) + s.e2(p, T + q) + s.e2(T + p, q) + s.e2(T + p, T + q);
      if (proj != 2LL * std_q.seed.exchange_x2[p][q])
        throw error("doubled template: V3 fails (projection mismatch)");
    }
  }
}

LaurentPoly locus_restrict(const LaurentPoly& f, const DoubledQuiver& d, const RingPtr& std_ring) {
  const int T = d.ix.total();
  if (static_cast<int>(f.ring()->size()) != 2 * T) throw error("locus_restrict: ring size mismatch");
  std::vector<ExpVec> image(2 * T, ExpVec(std_ring->size(), 0));
  for (int i = 0; i < T; ++i) {
    image[i][i] = std_ring->denom;
    image[T + i][i] = std_ring->denom;
  }
  return f.map_monomial(std_ring, image);
}

Seed build_glued(int n) {
  AnQuiver q = build_an_quiver(n);
  Seed s = q.seed;
  for (auto& row : s.exchange_x2)
    for (int& v : row) v *= 2;
  return s;
}

}  // namespace ancq
