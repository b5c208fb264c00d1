#include <doctest.h>

#include "ancq/seed.hpp"

using namespace ancq;

namespace {

Seed three_cycle() {
  Seed s = Seed::make(3);
  s.set_e2(0, 1, 2);
  s.set_e2(1, 2, 2);
  s.set_e2(2, 0, 2);
  return s;
}

Seed markov() {
  Seed s = Seed::make(3);
  s.set_e2(0, 1, 4);
  s.set_e2(1, 2, 4);
  s.set_e2(2, 0, 4);
  return s;
}

Seed random_quiver(int n, Rng& rng) {
  Seed s = Seed::make(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.set_e2(i, j, 2 * static_cast<int>(rng.range(-3, 3)));
  return s;
}

}  // namespace

TEST_CASE("exchange mutation: worked example and involution") {
  Seed s = three_cycle();
  Seed m1 = mutate_exchange(s, 0);
  // eps rows after mu_1: (0,-1,1 / 1,0,0 / -1,0,0)
  CHECK(m1.exchange_x2 == std::vector<std::vector<int>>{{0, -2, 2}, {2, 0, 0}, {-2, 0, 0}});
  CHECK(mutate_exchange(m1, 0) == s);

  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    Seed q = random_quiver(5, rng);
    int k = static_cast<int>(rng.below(5));
    CHECK(mutate_exchange(mutate_exchange(q, k), k) == q);
    CHECK(mutate_exchange(q, k).skew_symmetric());
  }
}

TEST_CASE("markov quiver is mutation-stable up to relabeling") {
  Seed s = markov();
  for (int k = 0; k < 3; ++k) {
    Seed m = mutate_exchange(s, k);
    // enumerate the 6 relabelings
    std::vector<int> perm = {0, 1, 2};
    bool iso = false;
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        for (int j = 0; j < 3 && ok; ++j)
          ok = (m.exchange_x2[perm[i]][perm[j]] == s.exchange_x2[i][j]);
      iso |= ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(iso);
  }
}

TEST_CASE("X pullback of one mutation") {
  Seed s = three_cycle();
  auto map = pullback_x(s, 0);
  RingPtr R = s.x_ring();
  LaurentPoly one = LaurentPoly::constant(R, 1);
  LaurentPoly x1 = LaurentPoly::variable(R, 0);
  LaurentPoly x2 = LaurentPoly::variable(R, 1);
  LaurentPoly x3 = LaurentPoly::variable(R, 2);
  CHECK(map[0].expand(100) == RatFunc(one, x1));
  CHECK(map[1].expand(100) == RatFunc(x2 * x1, x1 + one));
  CHECK(map[2].expand(100) == RatFunc(x3 * (one + x1)));

  SUBCASE("point step equals map evaluation; all-ones example") {
    EvalPoint ones;
    for (int i = 0; i < 3; ++i) ones.value.push_back(Fp(1, kDefaultPrime));
    EvalPoint y = step_point_x(s, 0, ones);
    CHECK(y.value[0] == Fp(1, kDefaultPrime));
    CHECK(y.value[1] == Fp(2, kDefaultPrime).inv());
    CHECK(y.value[2] == Fp(2, kDefaultPrime));
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      EvalPoint x = EvalPoint::random(3, kDefaultPrime, rng);
      EvalPoint z = step_point_x(s, 0, x);
      for (int i = 0; i < 3; ++i) CHECK(z.value[i] == map[i].eval(x));
    }
  }
  SUBCASE("untouched variable") {
    Seed q = Seed::make(3);
    q.set_e2(0, 1, 2);  // vertex 2 not adjacent to 0
    auto mp = pullback_x(q, 0);
    CHECK(mp[2].expand(10) == RatFunc(LaurentPoly::variable(q.x_ring(), 2)));
  }
}

TEST_CASE("A mutation at a point") {
  Seed s = three_cycle();
  EvalPoint ones;
  for (int i = 0; i < 3; ++i) ones.value.push_back(Fp(1, kDefaultPrime));
  EvalPoint b = step_point_a(s, 0, ones);
  CHECK(b.value[0] == Fp(2, kDefaultPrime));  // (A2 + A3)/A1 = 2
  CHECK(b.value[1] == Fp(1, kDefaultPrime));
  // all eps_{kj} = 0: A_k' = 2/A_k
  Seed empty = Seed::make(2);
  EvalPoint a2;
  a2.value = {Fp(5, kDefaultPrime), Fp(7, kDefaultPrime)};
  EvalPoint c = step_point_a(empty, 0, a2);
  CHECK(c.value[0] == Fp(2, kDefaultPrime) / Fp(5, kDefaultPrime));
}

TEST_CASE("ensemble map") {
  Seed s = three_cycle();
  auto cols = ensemble_pullback(s);
  // X_1 -> A_3 / A_2 (column 1 of eps)
  CHECK(cols[0] == ExpVec{0, -1, 1});
  Seed zero = Seed::make(2);
  auto z = ensemble_pullback(zero);
  CHECK(z[0] == ExpVec{0, 0});

  SUBCASE("intertwining with mutation at points") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
      Seed q = random_quiver(4, rng);
      int k = static_cast<int>(rng.below(4));
      EvalPoint a = EvalPoint::random(4, kDefaultPrime, rng);
      auto p_cols = ensemble_pullback(q);
      EvalPoint x;
      for (int i = 0; i < 4; ++i) {
        Fp acc(1, kDefaultPrime);
        for (int v = 0; v < 4; ++v) acc *= a.value[v].pow(p_cols[i][v]);
        x.value.push_back(acc);
      }
      try {
        EvalPoint xk = step_point_x(q, k, x);
        EvalPoint ak = step_point_a(q, k, a);
        Seed qk = mutate_exchange(q, k);
        auto pk = ensemble_pullback(qk);
        for (int i = 0; i < 4; ++i) {
          Fp acc(1, kDefaultPrime);
          for (int v = 0; v < 4; ++v) acc *= ak.value[v].pow(pk[i][v]);
          CHECK(acc == xk.value[i]);
        }
      } catch (const singular_point_error&) {
        --t;
      }
    }
  }
}

TEST_CASE("framing") {
  Seed mk = markov();
  Seed f = frame(mk);
  CHECK(f.size() == 6);
  CHECK(det_eps(f) == 1);
  for (int i = 3; i < 6; ++i) CHECK(f.frozen[i]);
  // restricting back gives the original exchange matrix
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(f.exchange_x2[i][j] == mk.exchange_x2[i][j]);

  Seed single = Seed::make(1);
  Seed fs = frame(single);
  CHECK(fs.size() == 2);
  CHECK(fs.e2(0, 1) == 2);
}

TEST_CASE("apply_word basics and C-matrix") {
  Seed s = three_cycle();
  SUBCASE("empty word") {
    WordResult r = apply_word(s, {});
    CHECK(r.seed == s);
    CHECK(r.c.is_identity());
  }
  SUBCASE("involution restores seed and C") {
    MutationWord w = {MutationStep::mutate(1), MutationStep::mutate(1)};
    WordResult r = apply_word(s, w);
    CHECK(r.seed == s);
    CHECK(r.c.is_identity());
  }
  SUBCASE("single mutation negates one column") {
    MutationWord w = {MutationStep::mutate(0)};
    WordResult r = apply_word(s, w);
    const auto& c = r.c.matrix();
    CHECK(c[0][0] == -1);
    // column j != k: e_j + [eps_kj]_+ e_k
    CHECK(c[0][1] == 1);  // eps_12 = 1 > 0
    CHECK(c[1][1] == 1);
    CHECK(c[0][2] == 0);  // eps_13 = -1
    CHECK(c[2][2] == 1);
  }
  SUBCASE("sign coherence along random words (exact big integers)") {
    Rng rng(77);
    CHECK(sign_coherence_random_words(1000, 20, 6, rng));
  }
}

TEST_CASE("symbolic XMap composition matches point transport and C-matrix") {
  Seed s = three_cycle();
  MutationWord w = {MutationStep::mutate(0), MutationStep::mutate(1),
                    MutationStep::swap(0, 2), MutationStep::mutate(2)};
  WordResult r = apply_word(s, w, true);
  REQUIRE(r.xmap.has_value());
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    EvalPoint x = EvalPoint::random(3, kDefaultPrime, rng);
    try {
      EvalPoint y = apply_word_point(s, w, x);
      for (int i = 0; i < 3; ++i) CHECK((*r.xmap)[i].eval(x) == y.value[i]);
    } catch (const singular_point_error&) {
      --t;
    }
  }
  // tropical consistency: C column i = trop degree of pullback component i
  for (int i = 0; i < 3; ++i) {
    ExpVec td = trop_degree((*r.xmap)[i]);
    for (int j = 0; j < 3; ++j) CHECK(td[j] == r.c.matrix()[j][i]);
  }
}

TEST_CASE("markov subquiver finder") {
  CHECK(find_markov_subquiver(markov()).has_value());
  Seed acyclic = Seed::make(3);
  acyclic.set_e2(0, 1, 4);
  acyclic.set_e2(1, 2, 4);
  acyclic.set_e2(0, 2, 4);  // not cyclically oriented
  CHECK(!find_markov_subquiver(acyclic).has_value());
}

TEST_CASE("json round trip and dot output") {
  Seed s = markov();
  s.frozen[2] = true;
  s.exchange_x2[0][2] = 0;  // avoid the invalid half-entry state
  s.exchange_x2[2][0] = 0;
  s.exchange_x2[1][2] = 0;
  s.exchange_x2[2][1] = 0;
  Seed t = seed_from_json(seed_to_json(s));
  CHECK(t == s);
  std::string dot = seed_to_dot(s);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("arrowhead=normalnormal") != std::string::npos);
}
