// Prime-field arithmetic, seedable RNG, and evaluation points for
// randomized identity checks.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ancq {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct missing_variable_error : error {
  using error::error;
};
struct fractional_exponent_error : error {
  using error::error;
};
struct singular_point_error : error {
  using error::error;
};
struct not_subtraction_free_error : error {
  using error::error;
};
struct frozen_target_error : error {
  using error::error;
};
struct unsupported_error : error {
  using error::error;
};
struct budget_error : error {
  using error::error;
};

// Default 62-bit modulus for randomized verification runs.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

bool is_prime_u64(std::uint64_t n);

// Residues mod a fixed prime p. The prime travels with the value; mixing
// moduli is a bug and throws.
class Fp {
 public:
  Fp() : v_(0), p_(kDefaultPrime) {}
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
  static Fp of_int(long long x, std::uint64_t p) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_ || s < a.v_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    a.check(b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    a.check(b);
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Fp(static_cast<std::uint64_t>(prod % a.p_), a.p_);
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp pow(long long e) const;
  Fp inv() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw error("Fp: mixed moduli");
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

// splitmix64-based generator. Deterministic across platforms; std::
// distributions are deliberately avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi);
  // Nonzero residue mod p.
  Fp nonzero(std::uint64_t p);
  // Child generator for an independent task.
  Rng child(const std::string& tag) const;

 private:
  std::uint64_t state_;
};

// Assignment of variables (by index) to nonzero field values, with an
// optional tangent vector for first-derivative evaluation.
struct EvalPoint {
  std::vector<Fp> value;
  std::vector<Fp> tangent;  // empty or same size as value

  std::uint64_t prime() const {
    return value.empty() ? kDefaultPrime : value[0].prime();
  }
  bool has_tangent() const { return !tangent.empty(); }

  static EvalPoint random(std::size_t nvars, std::uint64_t p, Rng& rng);
  static EvalPoint random_with_tangent(std::size_t nvars, std::uint64_t p, Rng& rng);
};

}  // namespace ancq
