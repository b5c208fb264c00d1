#include "ancq/ring.hpp"

#include <sstream>

namespace ancq {

ExpVec ev_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
ExpVec ev_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
ExpVec ev_min(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}
ExpVec ev_neg(const ExpVec& a) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
bool ev_leq(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw missing_variable_error("unknown variable " + name);
}

RingPtr make_ring(std::vector<std::string> vars, int denom) {
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->denom = denom;
  return r;
}

RingPtr make_ring_n(const std::string& prefix, int n, int denom) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (int i = 1; i <= n; ++i) vars.push_back(prefix + std::to_string(i));
  return make_ring(std::move(vars), denom);
}

LaurentPoly LaurentPoly::constant(RingPtr ring, const Scalar& c) {
  LaurentPoly p(std::move(ring));
  if (c != 0) p.terms_[ExpVec(p.ring_->size(), 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, const ExpVec& e, const Scalar& c) {
  LaurentPoly p(std::move(ring));
  if (e.size() != p.ring_->size()) throw error("monomial: bad exponent size");
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::var_pow(RingPtr ring, int i, int stored_pow) {
  ExpVec e(ring->size(), 0);
  e.at(i) = stored_pow;
  return monomial(std::move(ring), e);
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_)) throw error("LaurentPoly: ring mismatch");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(ev_add(ea, eb), ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw error("LaurentPoly::pow: negative exponent");
  LaurentPoly acc = constant(ring_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& m) const {
  LaurentPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_[ev_add(e, m)] = c;
  return r;
}

LaurentPoly LaurentPoly::derivative(int i) const {
  LaurentPoly r(ring_);
  const int d = ring_->denom;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec ne = e;
    ne[i] -= d;
    r.add_term(ne, c * Scalar(e[i], d));
  }
  return r;
}

ExpVec LaurentPoly::trop() const {
  if (terms_.empty()) throw error("trop of zero");
  ExpVec m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) m = ev_min(m, e);
  return m;
}

bool LaurentPoly::has_unique_min() const {
  if (terms_.empty()) return false;
  return terms_.count(trop()) > 0;
}

ExpVec LaurentPoly::val() const {
  ExpVec m = trop();
  if (!terms_.count(m)) throw error("val: no unique minimal multidegree");
  return m;
}

bool LaurentPoly::subtraction_free() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

std::pair<ExpVec, Scalar> LaurentPoly::lex_least() const {
  if (terms_.empty()) throw error("lex_least of zero");
  return *terms_.begin();
}

namespace {
Fp fp_of_scalar(const Scalar& q, std::uint64_t p) {
  unsigned long rn = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  unsigned long rd = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  return Fp(rn, p) * Fp(rd, p).inv();
}
}  // namespace

Fp LaurentPoly::eval(const EvalPoint& x) const {
  const std::uint64_t p = x.prime();
  if (x.value.size() != ring_->size()) throw missing_variable_error("eval: point size mismatch");
  const int d = ring_->denom;
  Fp acc(0, p);
  for (const auto& [e, c] : terms_) {
    Fp t = fp_of_scalar(c, p);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] % d != 0)
        throw fractional_exponent_error("eval: exponent not on lattice for " + ring_->vars[i]);
      if (x.value[i].is_zero()) throw singular_point_error("eval: zero value for " + ring_->vars[i]);
      t *= x.value[i].pow(e[i] / d);
    }
    acc += t;
  }
  return acc;
}

std::pair<Fp, Fp> LaurentPoly::eval_jet(const EvalPoint& x) const {
  const std::uint64_t p = x.prime();
  if (!x.has_tangent()) throw error("eval_jet: point has no tangent");
  const int d = ring_->denom;
  Fp acc(0, p), dacc(0, p);
  for (const auto& [e, c] : terms_) {
    Fp t = fp_of_scalar(c, p);
    Fp logd(0, p);  // sum of a_i * t_i / x_i
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] % d != 0)
        throw fractional_exponent_error("eval_jet: exponent not on lattice");
      long long a = e[i] / d;
      t *= x.value[i].pow(a);
      logd += Fp::of_int(a, p) * x.tangent[i] / x.value[i];
    }
    acc += t;
    dacc += t * logd;
  }
  return {acc, dacc};
}

Scalar LaurentPoly::eval_rational(const std::vector<Scalar>& x) const {
  const int d = ring_->denom;
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] % d != 0) throw fractional_exponent_error("eval_rational: fractional exponent");
      int a = e[i] / d;
      Scalar base = x[i];
      if (base == 0) throw singular_point_error("eval_rational: zero value");
      if (a < 0) {
        base = 1 / base;
        a = -a;
      }
      for (int k = 0; k < a; ++k) t *= base;
    }
    acc += t;
  }
  return acc;
}

LaurentPoly LaurentPoly::map_monomial(const RingPtr& target, const std::vector<ExpVec>& image) const {
  if (image.size() != ring_->size()) throw error("map_monomial: image size mismatch");
  const int d = ring_->denom;
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    std::vector<long long> acc(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] += static_cast<long long>(e[i]) * image[i][j];
    }
    ExpVec ne(target->size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (acc[j] % d != 0) throw fractional_exponent_error("map_monomial: leaves lattice");
      ne[j] = static_cast<int>(acc[j] / d);
    }
    r.add_term(ne, c);
  }
  return r;
}

LaurentPoly LaurentPoly::div_monomial(const ExpVec& m) const { return shifted(ev_neg(m)); }

LaurentPoly LaurentPoly::div_one_plus_var(int k, int s) const {
  if (s == 0) throw error("div_one_plus_var: zero shift");
  if (s < 0) {
    // 1 + X^s = X^s (1 + X^{-s})
    ExpVec m(ring_->size(), 0);
    m[k] = s;
    return div_monomial(m).div_one_plus_var(k, -s);
  }
  if (is_zero()) return *this;
  int lo = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) lo = std::min(lo, e[k]);

  LaurentPoly rem = *this;
  LaurentPoly quot(ring_);
  while (!rem.is_zero()) {
    auto best = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
      if (it->first[k] > best->first[k]) best = it;
    }
    ExpVec qe = best->first;
    qe[k] -= s;
    if (qe[k] < lo) throw error("div_one_plus_var: not divisible");
    Scalar qc = best->second;
    quot.add_term(qe, qc);
    rem.add_term(best->first, -qc);
    rem.add_term(qe, -qc);
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << ring_->vars[i];
      if (e[i] != ring_->denom) {
        if (e[i] % ring_->denom == 0)
          os << "^" << (e[i] / ring_->denom);
        else
          os << "^(" << e[i] << "/" << ring_->denom << ")";
      }
    }
  }
  return os.str();
}

// --- RatFunc ---------------------------------------------------------------

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw error("RatFunc: zero denominator");
  normalize();
}

RatFunc::RatFunc(LaurentPoly num)
    : RatFunc(num, LaurentPoly::constant(num.ring(), 1)) {}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(den_.ring(), 1);
    return;
  }
  auto [m, c] = den_.lex_least();
  num_ = num_.div_monomial(m).scaled(1 / c);
  den_ = den_.div_monomial(m).scaled(1 / c);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc acc = RatFunc::one(ring());
  RatFunc base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Fp RatFunc::eval(const EvalPoint& x) const {
  Fp d = den_.eval(x);
  if (d.is_zero()) throw singular_point_error("RatFunc::eval: denominator vanishes");
  return num_.eval(x) / d;
}

std::pair<Fp, Fp> RatFunc::eval_jet(const EvalPoint& x) const {
  auto [nv, nd] = num_.eval_jet(x);
  auto [dv, dd] = den_.eval_jet(x);
  if (dv.is_zero()) throw singular_point_error("RatFunc::eval_jet: denominator vanishes");
  Fp v = nv / dv;
  return {v, (nd - v * dd) / dv};
}

std::string RatFunc::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

ExpVec trop_degree(const RatFunc& f) {
  if (!f.num().subtraction_free() || !f.den().subtraction_free())
    throw not_subtraction_free_error("trop_degree: negative coefficient present");
  return ev_sub(f.num().trop(), f.den().trop());
}

// --- FactoredRat -----------------------------------------------------------

FactoredRat::FactoredRat(RingPtr ring) : ring_(std::move(ring)), mono_(ring_->size(), 0) {}

FactoredRat FactoredRat::from_poly(const LaurentPoly& p) {
  FactoredRat f(p.ring());
  f.mul_poly(p);
  return f;
}

FactoredRat FactoredRat::monomial(RingPtr ring, const ExpVec& e, const Scalar& c) {
  FactoredRat f(std::move(ring));
  f.mul_monomial(e, c);
  return f;
}

FactoredRat& FactoredRat::mul_monomial(const ExpVec& e, const Scalar& c) {
  if (c == 0) throw error("FactoredRat: zero factor");
  mono_ = ev_add(mono_, e);
  coeff_ *= c;
  return *this;
}

FactoredRat& FactoredRat::mul_poly(const LaurentPoly& p, int exp) {
  if (p.is_zero()) throw error("FactoredRat: zero factor");
  if (exp == 0) return *this;
  auto [m, c] = p.lex_least();
  LaurentPoly norm = p.div_monomial(m).scaled(1 / c);
  for (int i = 0; i < static_cast<int>(mono_.size()); ++i) mono_[i] += exp * m[i];
  Scalar cc = c;
  Scalar scale = 1;
  int a = exp < 0 ? -exp : exp;
  for (int i = 0; i < a; ++i) scale *= cc;
  coeff_ *= (exp > 0) ? scale : 1 / scale;
  if (norm.is_one()) return *this;
  for (auto& f : factors_) {
    if (f.poly == norm) {
      f.exp += exp;
      if (f.exp == 0) {
        f = factors_.back();
        factors_.pop_back();
      }
      return *this;
    }
  }
  factors_.push_back({std::move(norm), exp});
  return *this;
}

FactoredRat& FactoredRat::mul(const FactoredRat& o) {
  mul_monomial(o.mono_, o.coeff_);
  for (const auto& f : o.factors_) mul_poly(f.poly, f.exp);
  return *this;
}

FactoredRat FactoredRat::pow(int e) const {
  FactoredRat r(ring_);
  if (e == 0) return r;
  r.coeff_ = 1;
  Scalar c = coeff_;
  int a = e < 0 ? -e : e;
  for (int i = 0; i < a; ++i) r.coeff_ *= c;
  if (e < 0) r.coeff_ = 1 / r.coeff_;
  for (std::size_t i = 0; i < mono_.size(); ++i) r.mono_[i] = mono_[i] * e;
  for (const auto& f : factors_) r.factors_.push_back({f.poly, f.exp * e});
  return r;
}

FactoredRat FactoredRat::inv() const { return pow(-1); }

Fp FactoredRat::eval(const EvalPoint& x) const {
  const std::uint64_t p = x.prime();
  Fp acc = fp_of_scalar(coeff_, p);
  const int d = ring_->denom;
  for (std::size_t i = 0; i < mono_.size(); ++i) {
    if (mono_[i] == 0) continue;
    if (mono_[i] % d != 0) throw fractional_exponent_error("FactoredRat::eval");
    acc *= x.value[i].pow(mono_[i] / d);
  }
  for (const auto& f : factors_) {
    Fp v = f.poly.eval(x);
    if (v.is_zero()) throw singular_point_error("FactoredRat::eval: factor vanishes");
    acc *= v.pow(f.exp);
  }
  return acc;
}

RatFunc FactoredRat::expand(std::size_t budget) const {
  LaurentPoly num = LaurentPoly::constant(ring_, coeff_);
  LaurentPoly den = LaurentPoly::constant(ring_, 1);
  ExpVec pos(mono_.size(), 0), neg(mono_.size(), 0);
  for (std::size_t i = 0; i < mono_.size(); ++i) (mono_[i] >= 0 ? pos : neg)[i] = mono_[i];
  num = num.shifted(pos);
  den = den.shifted(ev_neg(neg));
  for (const auto& f : factors_) {
    LaurentPoly p = f.poly.pow(f.exp < 0 ? -f.exp : f.exp);
    if (f.exp > 0)
      num *= p;
    else
      den *= p;
    if (num.nterms() > budget || den.nterms() > budget)
      throw budget_error("FactoredRat::expand: term budget exceeded");
  }
  return RatFunc(num, den);
}

ExpVec FactoredRat::trop_degree() const {
  if (coeff_ < 0) throw not_subtraction_free_error("FactoredRat::trop_degree");
  ExpVec r = mono_;
  for (const auto& f : factors_) {
    if (!f.poly.subtraction_free())
      throw not_subtraction_free_error("FactoredRat::trop_degree: factor");
    ExpVec t = f.poly.trop();
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += f.exp * t[i];
  }
  return r;
}

std::string FactoredRat::str() const {
  std::ostringstream os;
  os << coeff_.get_str();
  for (std::size_t i = 0; i < mono_.size(); ++i) {
    if (mono_[i] == 0) continue;
    os << "*" << ring_->vars[i] << "^(" << mono_[i] << "/" << ring_->denom << ")";
  }
  for (const auto& f : factors_) os << " * (" << f.poly.str() << ")^" << f.exp;
  return os.str();
}

// --- Poisson pairing --------------------------------------------------------

LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const std::vector<std::vector<int>>& eps2) {
  const int d = f.ring()->denom;
  LaurentPoly r(f.ring());
  const std::size_t n = f.ring()->size();
  for (const auto& [a, ca] : f.terms()) {
    // w_j = sum_i a_i eps2_ij (in stored units).
    std::vector<long long> w(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) w[j] += static_cast<long long>(a[i]) * eps2[i][j];
    }
    for (const auto& [b, cb] : g.terms()) {
      long long pair2 = 0;  // 2 * d^2 * <a_true, b_true>_eps
      for (std::size_t j = 0; j < n; ++j)
        if (b[j] != 0) pair2 += w[j] * b[j];
      if (pair2 == 0) continue;
      r.add_term(ev_add(a, b), ca * cb * Scalar(static_cast<long>(pair2)) / Scalar(2L * d * d));
    }
  }
  return r;
}

// --- Chebyshev layer --------------------------------------------------------

std::vector<Scalar> chebyshev_F(int k) {
  if (k < 0) throw error("chebyshev_F: negative index");
  std::vector<Scalar> fm1 = {2};    // F_0
  if (k == 0) return fm1;
  std::vector<Scalar> f = {0, 1};  // F_1
  for (int i = 1; i < k; ++i) {
    std::vector<Scalar> next(f.size() + 1, 0);
    for (std::size_t j = 0; j < f.size(); ++j) next[j + 1] += f[j];
    for (std::size_t j = 0; j < fm1.size(); ++j) next[j] -= fm1[j];
    fm1 = std::move(f);
    f = std::move(next);
  }
  return f;
}

namespace {
template <class K, class OfInt>
std::vector<K> palindromic_to_t_impl(std::vector<K> g, const K& zero, OfInt of_int) {
  const std::size_t n = g.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(g[i] == g[n - i])) throw error("palindromic_to_t: not palindromic");
  }
  if (n % 2 == 1) {
    // Divide by (lambda + 1); remainder must vanish.
    std::vector<K> q(n, zero);
    q[n - 1] = g[n];
    for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = g[i] - q[i];
    if (!(g[0] - q[0] == zero)) throw error("palindromic_to_t: not divisible by (lambda+1)");
    g = std::move(q);
  }
  const std::size_t m = (g.size() - 1) / 2;
  // g / lambda^m = g[m] + sum_{k>=1} g[m+k] (lambda^k + lambda^-k)
  std::vector<K> out(m + 1, zero);
  out[0] = g[m];
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<Scalar> fk = chebyshev_F(static_cast<int>(k));
    for (std::size_t j = 0; j < fk.size(); ++j) {
      if (fk[j] == 0) continue;
      out[j] = out[j] + g[m + k] * of_int(fk[j].get_num().get_si());
    }
  }
  return out;
}
}  // namespace

std::vector<Fp> palindromic_to_t(const std::vector<Fp>& coeffs) {
  if (coeffs.empty()) throw error("palindromic_to_t: empty input");
  const std::uint64_t p = coeffs[0].prime();
  return palindromic_to_t_impl<Fp>(coeffs, Fp(0, p),
                                   [p](long long v) { return Fp::of_int(v, p); });
}

std::vector<Scalar> palindromic_to_t(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw error("palindromic_to_t: empty input");
  return palindromic_to_t_impl<Scalar>(coeffs, Scalar(0),
                                       [](long long v) { return Scalar(static_cast<long>(v)); });
}

}  // namespace ancq
