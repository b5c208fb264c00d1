// Seeds, quiver mutation dynamics, C-matrix tracking, framing, and the
// ensemble map.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ancq/ring.hpp"

namespace ancq {

// Labeled quiver with doubled-integer skew exchange matrix: exchange[i][j]
// stores 2*eps_ij, so half-integer entries (allowed only between two frozen
// vertices) are odd integers.
struct Seed {
  std::vector<std::vector<int>> exchange_x2;
  std::vector<bool> frozen;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  static Seed make(int n);

  // eps_ij in doubled units.
  int e2(int i, int j) const { return exchange_x2[i][j]; }
  void set_e2(int i, int j, int v) {
    exchange_x2[i][j] = v;
    exchange_x2[j][i] = -v;
  }
  // Add an arrow i -> j of doubled weight w2 (cancels against opposite).
  void add_arrow_x2(int i, int j, int w2);

  bool skew_symmetric() const;
  // eps integral unless both endpoints frozen.
  bool integral_where_required() const;
  void validate() const;

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.exchange_x2 == b.exchange_x2 && a.frozen == b.frozen && a.labels == b.labels;
  }

  // X-coordinate ring of the quiver (D = 1), variables named by labels.
  RingPtr x_ring() const;
};

// Exchange-matrix mutation at the mutable index k (Eq of the quiver mutation
// rule); involutive.
Seed mutate_exchange(const Seed& s, int k);

struct MutationStep {
  enum Kind { Mutate, Swap } kind;
  int a = 0, b = 0;
  static MutationStep mutate(int k) { return {Mutate, k, 0}; }
  static MutationStep swap(int j, int k) { return {Swap, j, k}; }
};
using MutationWord = std::vector<MutationStep>;

// Integer matrix evolved along mutation words from the identity; column i
// is the tropical degree vector of the i-th pullback component.
class CMatrixTracker {
 public:
  explicit CMatrixTracker(int n);
  const std::vector<std::vector<int>>& matrix() const { return c_; }
  // Update for mutation at k given the current seed's exchange matrix, then
  // assert column sign coherence.
  void step_mutate(int k, const Seed& current);
  void step_swap(int j, int k);
  bool is_identity() const;
  bool is_minus_identity() const;
  bool all_nonpositive() const;
  bool sign_coherent() const;

 private:
  std::vector<std::vector<int>> c_;
};

// Birational X-map of one mutation: component i is the pullback of X_i'.
std::vector<FactoredRat> pullback_x(const Seed& s, int k);
// Point transport through one X-mutation (equals evaluating pullback_x at x).
EvalPoint step_point_x(const Seed& s, int k, const EvalPoint& x);
EvalPoint step_point_swap(int j, int k, const EvalPoint& x);

// A-coordinate mutation at a point: only coordinate k changes, by the
// exchange relation.
EvalPoint step_point_a(const Seed& s, int k, const EvalPoint& a);

// Classical ensemble map p*(X_i) = prod_k A_k^{eps_ki} as stored exponent
// columns; requires an integral exchange matrix.
std::vector<ExpVec> ensemble_pullback(const Seed& s);

// Framing: one frozen hat vertex per vertex with an arrow k -> hat(k).
Seed frame(const Seed& s);

// Integer determinant of the doubled exchange matrix divided by 2^N
// (i.e. det eps), exact.
Scalar det_eps(const Seed& s);

struct WordResult {
  Seed seed;
  CMatrixTracker c;
  std::optional<std::vector<RatFunc>> xmap;  // composed pullback, if requested
};

// Apply a word of mutations and label swaps. When with_xmap is set, the
// composed symbolic pullback is carried along subject to the term budget
// (budget overruns drop the map rather than failing the run).
WordResult apply_word(const Seed& s, const MutationWord& w, bool with_xmap = false,
                      std::size_t term_budget = 200000);

// Point transport along a word.
EvalPoint apply_word_point(const Seed& s, const MutationWord& w, const EvalPoint& x);

// Three mutable vertices whose full subquiver is a directed 3-cycle of
// double arrows.
std::optional<std::array<int, 3>> find_markov_subquiver(const Seed& s);

// Sign coherence along random mutation words, computed in arbitrary
// precision (entries of wild quivers outgrow machine words fast).
bool sign_coherence_random_words(int words, int max_len, int max_rank, Rng& rng);

// Full subquiver on a subset of vertices (order preserved).
Seed full_subquiver(const Seed& s, const std::vector<int>& verts);

// Serialization (JSON schema and DOT export).
std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);
std::string seed_to_dot(const Seed& s);

}  // namespace ancq
