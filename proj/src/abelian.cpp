#include "finann/abelian.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

#include "finann/error.hpp"

namespace finann {

namespace {

constexpr std::uint32_t kTrialLimit = 100000;

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Brent's variant of Pollard's rho; returns a nontrivial factor of a
// composite n that has no factor below the trial-division limit.
BigInt pollard_rho(const BigInt& n) {
  std::mt19937_64 rng(0x5eedULL);
  for (;;) {
    const BigInt c = BigInt(rng()) % (n - 1) + 1;
    BigInt y = BigInt(rng()) % n;
    BigInt g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt smallest_factor_large(const BigInt& n) {
  if (is_prime(n)) return n;
  const BigInt d = pollard_rho(n);
  return std::min(smallest_factor_large(d), smallest_factor_large(n / d));
}

}  // namespace

AbelianInvariants AbelianInvariants::make(std::size_t free_rank, std::vector<BigInt> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be at least 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
  }
  return AbelianInvariants{free_rank, std::move(factors)};
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "(r=" << free_rank << ", [";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << "])";
  return os.str();
}

std::size_t abelian_weight(const AbelianInvariants& inv) { return inv.free_rank + inv.factors.size(); }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < BigInt(1) << 64) {
    // Deterministic for 64-bit inputs with these bases.
    const auto v = static_cast<std::uint64_t>(n);
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
      return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
      std::uint64_t r = 1;
      a %= m;
      while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
      }
      return r;
    };
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      std::uint64_t x = powmod(a, d, v);
      if (x == 1 || x == v - 1) continue;
      bool composite = true;
      for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, v);
        if (x == v - 1) {
          composite = false;
          break;
        }
      }
      if (composite) return false;
    }
    return true;
  }
  std::mt19937 rng(12345);
  return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

BigInt smallest_prime_factor(const BigInt& n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "smallest_prime_factor needs n >= 2");
  for (std::uint32_t p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) return n;
    if (n % p == 0) return BigInt(p);
  }
  return smallest_factor_large(n);
}

std::size_t elementary_p_rank(const AbelianInvariants& inv, const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.str() + " is not prime");
  std::size_t rank = inv.free_rank;
  for (const auto& d : inv.factors)
    if (d % p == 0) ++rank;
  return rank;
}

PrimeRank max_elementary_rank(const AbelianInvariants& inv) {
  // Every prime dividing d_1 divides all factors, so it attains
  // free_rank + k; any other prime misses d_1.
  if (inv.factors.empty()) return PrimeRank{BigInt(2), inv.free_rank};
  return PrimeRank{smallest_prime_factor(inv.factors.front()), inv.free_rank + inv.factors.size()};
}

AbelianInvariants invariants_from_diagonal(const std::vector<BigInt>& diagonal, std::size_t generator_count) {
  std::vector<BigInt> factors;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (d == 0) continue;
    ++nonzero;
    BigInt a = d < 0 ? BigInt(-d) : d;
    if (a != 1) factors.push_back(std::move(a));
  }
  std::sort(factors.begin(), factors.end());
  return AbelianInvariants::make(generator_count - nonzero, std::move(factors));
}

}  // namespace finann
