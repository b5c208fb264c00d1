// Command-line driver: quiver builders, computations, and the named
// verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "ancq/invariants.hpp"
#include "ancq/lamination.hpp"
#include "ancq/plabic.hpp"
#include "ancq/verify.hpp"
#include "ancq/weyl.hpp"

using namespace ancq;

namespace {

// Word grammar for cmatrix computations: "t<l>" expands the cycle word of
// tau_l, "m<k>" is a single mutation at 1-based vertex k, "p<j>,<k>" a label
// swap.
MutationWord parse_mutation_word(int n, const std::string& text) {
  AnQuiver q = build_an_quiver(n);
  MutationWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2) throw unsupported_error("bad word token: " + tok);
    if (tok[0] == 't') {
      int l = std::stoi(tok.substr(1));
      CycleSpec spec{q.seed, q.ix.cycle_indices(l)};
      MutationWord part = cycle_word(spec);
      w.insert(w.end(), part.begin(), part.end());
    } else if (tok[0] == 'm') {
      w.push_back(MutationStep::mutate(std::stoi(tok.substr(1)) - 1));
    } else if (tok[0] == 'p') {
      auto comma = tok.find(',');
      if (comma == std::string::npos) throw unsupported_error("bad swap token: " + tok);
      w.push_back(MutationStep::swap(std::stoi(tok.substr(1, comma - 1)) - 1,
                                     std::stoi(tok.substr(comma + 1)) - 1));
    } else {
      throw unsupported_error("bad word token: " + tok);
    }
  }
  return w;
}

std::vector<int> parse_weyl_word(const std::string& text) {
  std::vector<int> gens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw unsupported_error("bad generator: " + tok);
    gens.push_back(std::stoi(tok.substr(1)));
  }
  return gens;
}

nlohmann::ordered_json poly_to_json(const LaurentPoly& f) {
  nlohmann::ordered_json out;
  out["lattice_denominator"] = f.ring()->denom;
  out["vars"] = f.ring()->vars;
  if (!f.is_zero() && f.has_unique_min()) out["val_stored"] = f.val();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["exp_stored"] = e;
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster structures of the A_n symplectic groupoid"};
  app.require_subcommand(1);

  int n = 4;
  std::uint64_t seed = 0;
  int trials = 8;
  std::uint64_t prime = kDefaultPrime;
  bool serial = false;
  bool timings = false;
  std::size_t budget = 200000;

  // --- build ---------------------------------------------------------------
  auto* build = app.add_subcommand("build", "construct a quiver and print it");
  std::string build_kind = "an", build_format = "json";
  build->add_option("kind", build_kind, "sln | an | doubled | glued");
  build->add_option("--n", n, "rank parameter");
  build->add_option("--format", build_format, "json | dot");

  // --- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--n", n, "rank parameter");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "random trials per check");
  verify->add_option("--prime", prime, "field modulus");
  verify->add_option("--budget-terms", budget, "symbolic term budget");
  verify->add_flag("--serial", serial, "run checks serially");
  verify->add_flag("--timings", timings, "include per-check timings");

  // --- compute ---------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "run one computation and print JSON");
  std::string what, word, lspec;
  int gi = 1, gj = 2;
  compute->add_option("what", what, "geodesic | casimir | cmatrix | weyl-apply | hl | trace")
      ->required();
  compute->add_option("--n", n, "rank parameter");
  compute->add_option("--i", gi, "first index");
  compute->add_option("--j", gj, "second index");
  compute->add_option("--word", word, "mutation or generator word");
  compute->add_option("--l", lspec, "comma-separated multidegree");
  compute->add_option("--seed", seed, "RNG seed");
  compute->add_option("--prime", prime, "field modulus");

  // --- weyl apply -------------------------------------------------------------
  auto* weyl = app.add_subcommand("weyl", "birational Weyl group action");
  auto* weyl_apply = weyl->add_subcommand("apply", "transport a point along a word");
  std::string weyl_word, point_spec = "random";
  weyl_apply->add_option("--n", n, "rank parameter");
  weyl_apply->add_option("--word", weyl_word, "e.g. \"s1 s2 s1\"")->required();
  weyl_apply->add_option("--point", point_spec, "random | comma-separated values");
  weyl_apply->add_option("--seed", seed, "RNG seed");
  weyl_apply->add_option("--prime", prime, "field modulus");

  // --- hl solve ----------------------------------------------------------------
  auto* hl = app.add_subcommand("hl", "h_l basis elements");
  auto* hl_solve = hl->add_subcommand("solve", "solve for the exponents of h_l");
  std::string hl_l;
  hl_solve->add_option("--n", n, "rank parameter");
  hl_solve->add_option("--l", hl_l, "comma-separated multidegree")->required();

  // --- deg ------------------------------------------------------------------------
  auto* deg = app.add_subcommand("deg", "degree matrices as CSV");
  std::string which = "A";
  deg->add_option("--n", n, "rank parameter");
  deg->add_option("--which", which, "A | B");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      Seed s;
      if (build_kind == "sln") s = build_sln_quiver(n).seed;
      else if (build_kind == "an") s = build_an_quiver(n).seed;
      else if (build_kind == "doubled") s = build_doubled(n).seed;
      else if (build_kind == "glued") s = build_glued(n);
      else throw unsupported_error("unknown build kind: " + build_kind);
      if (build_format == "json") std::cout << seed_to_json(s) << "\n";
      else if (build_format == "dot") std::cout << seed_to_dot(s);
      else throw unsupported_error("unknown format: " + build_format);
      return 0;
    }

    if (*verify) {
      VerifyOptions opts;
      opts.n = n;
      opts.seed = seed;
      opts.trials = trials;
      opts.prime = prime;
      opts.serial = serial;
      opts.budget_terms = budget;
      if (!is_prime_u64(prime)) throw unsupported_error("--prime is not prime");
      VerifyReport rep = run_suite(suite, opts);
      std::cout << report_to_json(rep, timings) << "\n";
      return rep.pass ? 0 : 1;
    }

    if (*compute) {
      nlohmann::ordered_json out;
      if (what == "geodesic") {
        out["n"] = n;
        out["i"] = gi;
        out["j"] = gj;
        out["geodesic"] = poly_to_json(geodesic_parallelogram(n, gi, gj));
      } else if (what == "casimir") {
        AnIndexer ix;
        ix.n = n;
        RingPtr ring = geodesic_ring(n);
        out["n"] = n;
        auto arr = nlohmann::ordered_json::array();
        for (int i = 1; i <= ix.cycles(); ++i) {
          ExpVec e = casimir_k_exp(ring, n, i);
          for (int& v : e) v /= ring->denom;
          arr.push_back({{"K", i}, {"exponents", e}});
        }
        out["casimirs"] = arr;
      } else if (what == "cmatrix") {
        MutationWord w = parse_mutation_word(n, word);
        AnQuiver q = build_an_quiver(n);
        WordResult res = apply_word(q.seed, w);
        out["n"] = n;
        out["word"] = word;
        out["c_matrix"] = res.c.matrix();
        out["is_reddening"] = res.c.all_nonpositive();
        out["is_dt"] = res.c.is_minus_identity();
      } else if (what == "weyl-apply" || what == "hl" || what == "trace") {
        if (what == "trace") {
          RingPtr ring = geodesic_ring(4);
          out["curve"] = "g" + std::to_string(gi);
          out["trace"] = poly_to_json(lamination_trace(ring, curve_g(gi)));
        } else {
          throw unsupported_error("use the dedicated subcommand for " + what);
        }
      } else {
        throw unsupported_error("unknown computation: " + what);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*weyl_apply) {
      std::vector<int> gens = parse_weyl_word(weyl_word);
      const int T = n * (n - 1) / 2;
      EvalPoint x;
      if (point_spec == "random") {
        Rng rng(seed);
        x = EvalPoint::random(T, prime, rng);
      } else {
        std::istringstream is(point_spec);
        std::string v;
        while (std::getline(is, v, ',')) x.value.push_back(Fp(std::stoull(v), prime));
        if (static_cast<int>(x.value.size()) != T)
          throw unsupported_error("point needs n(n-1)/2 coordinates");
      }
      EvalPoint y = apply_weyl_point(n, gens, x);
      nlohmann::ordered_json out;
      out["n"] = n;
      out["word"] = weyl_word;
      out["seed"] = seed;
      out["prime"] = prime;
      auto vals = [&](const EvalPoint& pt) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : pt.value) arr.push_back(v.value());
        return arr;
      };
      out["point"] = vals(x);
      out["image"] = vals(y);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*hl_solve) {
      std::vector<int> l;
      std::istringstream is(hl_l);
      std::string v;
      while (std::getline(is, v, ',')) l.push_back(std::stoi(v));
      HlSolution sol = solve_h(n, l);
      nlohmann::ordered_json out;
      out["n"] = n;
      out["l"] = sol.l;
      out["q"] = sol.q;
      out["p"] = sol.p;
      std::ostringstream fact;
      auto cols = a_deg_columns(n);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (sol.p[c] == 0) continue;
        fact << " A[" << cols[c].first << "," << cols[c].second << "]^" << sol.p[c];
      }
      std::ostringstream kf;
      for (std::size_t i = 0; i < sol.q.size(); ++i)
        kf << (i ? " " : "") << "K" << (i + 1) << "^" << sol.q[i];
      out["factorization"] = kf.str() + fact.str();
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*deg) {
      QMatrix M = (which == "A") ? a_deg(n) : b_deg(n);
      for (const auto& row : M) {
        for (std::size_t c = 0; c < row.size(); ++c)
          std::cout << (c ? "," : "") << row[c].get_str();
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
