// Sparse exact multivariate Laurent polynomials over a fractional exponent
// lattice, rational functions, and factored products.
//
// Exponents are stored as integers over a context-wide lattice denominator D:
// a stored entry e means true exponent e/D. D = 1 for plain Laurent rings,
// D = 2 for the half-integer geodesic lattice, D = 2n for the ring carrying
// the D_k transport scalars.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ancq/fp.hpp"

namespace ancq {

using Scalar = mpq_class;

using ExpVec = std::vector<int>;

ExpVec ev_add(const ExpVec& a, const ExpVec& b);
ExpVec ev_sub(const ExpVec& a, const ExpVec& b);
ExpVec ev_min(const ExpVec& a, const ExpVec& b);
ExpVec ev_neg(const ExpVec& a);
bool ev_leq(const ExpVec& a, const ExpVec& b);  // componentwise

struct Ring {
  std::vector<std::string> vars;
  int denom = 1;  // lattice denominator D

  std::size_t size() const { return vars.size(); }
  int index_of(const std::string& name) const;
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.denom == b.denom && a.vars == b.vars;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, int denom = 1);
// x1..xn with a common prefix.
RingPtr make_ring_n(const std::string& prefix, int n, int denom = 1);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentPoly zero(RingPtr ring) { return LaurentPoly(std::move(ring)); }
  static LaurentPoly constant(RingPtr ring, const Scalar& c);
  static LaurentPoly monomial(RingPtr ring, const ExpVec& stored_exp, const Scalar& c = 1);
  // Variable i to true power num/ring->denom... pow is in stored units.
  static LaurentPoly var_pow(RingPtr ring, int i, int stored_pow);
  static LaurentPoly variable(RingPtr ring, int i) {
    return var_pow(ring, i, ring->denom);
  }

  const RingPtr& ring() const { return ring_; }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t nterms() const { return terms_.size(); }
  Scalar coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Scalar& c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Scalar& c) const;
  LaurentPoly pow(int e) const;  // e >= 0
  LaurentPoly shifted(const ExpVec& stored_exp) const;  // multiply by monomial

  // Formal partial derivative in variable i; exponents stay on the lattice,
  // coefficients pick up the true (rational) exponent.
  LaurentPoly derivative(int i) const;

  // Componentwise-minimal stored exponent vector over all terms.
  ExpVec trop() const;
  // trop() if a single term attains it; throws otherwise (non-unique minimum).
  ExpVec val() const;
  bool has_unique_min() const;

  bool subtraction_free() const;  // all coefficients > 0

  // Smallest exponent vector in lexicographic order, with its coefficient.
  std::pair<ExpVec, Scalar> lex_least() const;

  // Exact evaluation over F_p. Requires every stored exponent divisible by D.
  Fp eval(const EvalPoint& x) const;
  // Value and directional derivative along x.tangent.
  std::pair<Fp, Fp> eval_jet(const EvalPoint& x) const;
  Scalar eval_rational(const std::vector<Scalar>& x) const;

  // Ring homomorphism: variable i maps to the monomial with target stored
  // exponent image[i] (representing the image of the variable to true power
  // one). Throws if a resulting exponent leaves the target lattice.
  LaurentPoly map_monomial(const RingPtr& target, const std::vector<ExpVec>& image) const;

  // Exact division by a monomial / by (1 + X_k^{stored s}); throws if inexact.
  LaurentPoly div_monomial(const ExpVec& stored_exp) const;
  LaurentPoly div_one_plus_var(int k, int stored_s) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<ExpVec, Scalar> terms_;
  void check_same(const LaurentPoly& o) const;
};

// num/den with den != 0. Normalization: den's lex-least term has coefficient
// one and exponent zero; num and den are reduced by their common monomial
// content.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(LaurentPoly num, LaurentPoly den);
  explicit RatFunc(LaurentPoly num);

  static RatFunc one(const RingPtr& ring) {
    return RatFunc(LaurentPoly::constant(ring, 1));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inv() const;
  RatFunc pow(int e) const;

  // Equality as rational functions (cross-multiplication).
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  Fp eval(const EvalPoint& x) const;  // throws singular_point_error on zero den
  std::pair<Fp, Fp> eval_jet(const EvalPoint& x) const;

  std::size_t nterms() const { return num_.nterms() + den_.nterms(); }
  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

// min-plus degree of a subtraction-free presentation: componentwise-min
// exponent of num minus that of den.
ExpVec trop_degree(const RatFunc& f);

// Product c * X^mono * prod factors[i].poly^factors[i].exp with each factor
// normalized (unit lex-least coefficient, zero content). Keeps symbolic
// cancellation cheap: equal factors cancel by canonical-form equality.
class FactoredRat {
 public:
  struct Factor {
    LaurentPoly poly;
    int exp;
  };

  explicit FactoredRat(RingPtr ring);
  static FactoredRat from_poly(const LaurentPoly& p);
  static FactoredRat monomial(RingPtr ring, const ExpVec& stored_exp, const Scalar& c = 1);

  const RingPtr& ring() const { return ring_; }
  const Scalar& coeff() const { return coeff_; }
  const ExpVec& mono() const { return mono_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_monomial() const { return factors_.empty(); }

  FactoredRat& mul_poly(const LaurentPoly& p, int exp = 1);
  FactoredRat& mul(const FactoredRat& o);
  FactoredRat& mul_monomial(const ExpVec& stored_exp, const Scalar& c = 1);
  FactoredRat pow(int e) const;
  FactoredRat inv() const;

  Fp eval(const EvalPoint& x) const;
  RatFunc expand(std::size_t term_budget) const;
  ExpVec trop_degree() const;  // requires subtraction-free factors

  std::string str() const;

 private:
  RingPtr ring_;
  Scalar coeff_ = 1;
  ExpVec mono_;
  std::vector<Factor> factors_;
};

// Log-canonical Poisson bracket {X_i,X_j} = eps_ij X_i X_j extended to
// Laurent polynomials: {X^a, X^b} = (a^T eps b) X^{a+b}. eps2 holds doubled
// entries (2*eps) so half-integer exchange matrices stay integral.
LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const std::vector<std::vector<int>>& eps2);

// --- Chebyshev layer -------------------------------------------------------

// F_0 = 2, F_1 = t, F_{k+1} = F_k t - F_{k-1}; coefficient list, index = degree.
std::vector<Scalar> chebyshev_F(int k);

template <class K>
K poly1_eval(const std::vector<K>& coeffs, const K& t) {
  K acc = coeffs.empty() ? K() : coeffs.back();
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    acc = acc * t + coeffs[i - 1];
  }
  return acc;
}

// Coefficients (degree-indexed) of the degree-n palindromic polynomial in
// lambda divided by lambda^{floor(n/2)} (n even) or (lambda+1)*lambda^{floor(n/2)}
// (n odd), rewritten in t = lambda + 1/lambda.
// Throws if the input is not palindromic or the odd-case division is inexact.
std::vector<Fp> palindromic_to_t(const std::vector<Fp>& coeffs);
std::vector<Scalar> palindromic_to_t(const std::vector<Scalar>& coeffs);

}  // namespace ancq
