// Fock-Goncharov SL_n triangle quiver, the A_n-quiver obtained from it by
// amalgamation, the (l,j) cycle indexing, the glued strip model, and the
// doubled quiver used for the odd innermost reflection.
#pragma once

#include <map>
#include <optional>

#include "ancq/seed.hpp"

namespace ancq {

// Lattice point (a,b,c), a+b+c = n, corners excluded.
struct TriVertex {
  int a = 0, b = 0, c = 0;
  friend bool operator<(const TriVertex& u, const TriVertex& v) {
    return std::tie(u.a, u.b, u.c) < std::tie(v.a, v.b, v.c);
  }
  friend bool operator==(const TriVertex& u, const TriVertex& v) {
    return u.a == v.a && u.b == v.b && u.c == v.c;
  }
  std::string name() const {
    return "Z[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
  }
};

struct SlnQuiver {
  Seed seed;
  int n = 0;
  std::vector<TriVertex> verts;        // by seed index
  std::map<TriVertex, int> index_of;   // inverse

  bool has(const TriVertex& v) const { return index_of.count(v) > 0; }
  int at(const TriVertex& v) const { return index_of.at(v); }
};

// Triangle quiver with corners forgotten; boundary vertices frozen; arrows of
// each small downward triangle with weight 1, halved to 1/2 along the three
// boundary sides.
SlnQuiver build_sln_quiver(int n);

// Cycle/position indexing of the A_n-quiver: linear index n(l-1) + j - 1
// (zero-based), cycle lengths N_l = n except N_{n/2} = n/2 for even n.
struct AnIndexer {
  int n = 0;
  int cycles() const { return n / 2; }
  int cycle_len(int l) const { return (2 * l == n) ? n / 2 : n; }
  int total() const { return n * (n - 1) / 2; }
  int mod_pos(int l, int j) const {  // wrap j into 1..N_l
    int N = cycle_len(l);
    int r = ((j - 1) % N + N) % N;
    return r + 1;
  }
  int idx(int l, int j) const { return n * (l - 1) + mod_pos(l, j) - 1; }
  std::pair<int, int> lj(int index) const {
    int l = index / n + 1;
    return {l, index % n + 1};
  }
  std::string label(int l, int j) const {
    return "X[" + std::to_string(l) + "," + std::to_string(mod_pos(l, j)) + "]";
  }
  std::vector<int> cycle_indices(int l) const;
};

struct AnQuiver {
  Seed seed;
  AnIndexer ix;
  // For each A_n vertex, its SL_n preimages (one or two lattice points).
  std::vector<std::vector<TriVertex>> preimages;
};

// Amalgamate Z_{i,0,n-i} with Z_{n-i,i,0}, remove Z_{0,i,n-i}, unfreeze.
AnQuiver build_an_quiver(int n);

// Index permutation sigma with eps_{sigma(i) sigma(j)} = eps_{ij} realizing
// X_{l,j} -> X_{l,j+m}.
std::vector<int> shift_relabel(int n, int m);

// --- Glued strip model -------------------------------------------------

// Row rho (1..2n-1) of the glued double-triangle strip; entry s runs over
// max(1, n-rho) <= s <= min(n-1, 2n-rho), and holds cycle level
// l(s) = min(s, n-s) at position j0(s) + rho - (n-1).
struct StripEntry {
  int level = 0;
  int pos = 0;  // 1..N_l after wrap
};
StripEntry strip_entry(int n, int rho, int s);
bool strip_in_range(int n, int rho, int s);

// --- Doubled quiver ------------------------------------------------------

struct DoubledQuiver {
  Seed seed;
  int n = 0;
  // index of plain X_{l,j} resp. tilde X~_{l,j}
  int plain(int l, int j) const;
  int tilde(int l, int j) const;
  AnIndexer ix;
  // Ordered main cycles (vertex index lists): for each level, the plain and
  // tilde cycles; for even n the innermost is one merged cycle listed once.
  std::vector<std::vector<int>> cycles;
};

// Registered templates: n in {3,4,5,6}. Validated by the battery below at
// construction time.
DoubledQuiver build_doubled(int n);

// V1: each main cycle is chordless with in-cycle arrows only.
// V2: cycle balance against every external vertex.
// V3: identifying tilde with plain reproduces the standard A_n exchange
//     matrix up to positive scaling per entry.
void validate_doubled(const DoubledQuiver& d);

// Substitution homomorphism tilde -> plain on the doubled X-ring.
LaurentPoly locus_restrict(const LaurentPoly& f, const DoubledQuiver& d, const RingPtr& std_ring);

// Glued A_n-quiver: the projection of the doubled quiver to plain labels
// (standard quiver with every arrow weight doubled).
Seed build_glued(int n);

}  // namespace ancq
