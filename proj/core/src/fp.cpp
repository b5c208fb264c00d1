#include "ancq/fp.hpp"

namespace ancq {

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Fp Fp::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  return Fp(powmod(v_, static_cast<std::uint64_t>(e), p_), p_);
}

Fp Fp::inv() const {
  if (v_ == 0) throw singular_point_error("Fp: inverse of zero");
  return Fp(powmod(v_, p_ - 2, p_), p_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw error("Rng: empty range");
  std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

long long Rng::range(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Fp Rng::nonzero(std::uint64_t p) { return Fp(1 + below(p - 1), p); }

Rng Rng::child(const std::string& tag) const {
  std::uint64_t h = state_ ^ 0x51b9ddf0a93c5a29ULL;
  for (char c : tag) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  return Rng(h);
}

EvalPoint EvalPoint::random(std::size_t nvars, std::uint64_t p, Rng& rng) {
  EvalPoint x;
  x.value.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) x.value.push_back(rng.nonzero(p));
  return x;
}

EvalPoint EvalPoint::random_with_tangent(std::size_t nvars, std::uint64_t p, Rng& rng) {
  EvalPoint x = random(nvars, p, rng);
  x.tangent.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) x.tangent.push_back(Fp(rng.below(p), p));
  return x;
}

}  // namespace ancq
