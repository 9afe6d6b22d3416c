#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace finann {

using BigInt = boost::multiprecision::cpp_int;

/// Z^free_rank x C_d1 x ... x C_dk with every d_i >= 2 and d_i | d_(i+1).
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> factors;

  /// Checks the divisibility chain; throws InvalidArgument.
  static AbelianInvariants make(std::size_t free_rank, std::vector<BigInt> factors);

  bool is_trivial() const noexcept { return free_rank == 0 && factors.empty(); }
  bool is_cyclic() const noexcept { return free_rank + factors.size() <= 1; }
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

/// Minimal number of generators: free_rank + number of torsion factors.
std::size_t abelian_weight(const AbelianInvariants& inv);

/// Largest k with a surjection onto (C_p)^k. Throws NotPrime.
std::size_t elementary_p_rank(const AbelianInvariants& inv, const BigInt& p);

struct PrimeRank {
  BigInt prime;
  std::size_t rank = 0;
  bool operator==(const PrimeRank&) const = default;
};

/// A prime attaining the largest elementary p-rank; smallest such prime on
/// ties, and p = 2 when there is no torsion.
PrimeRank max_elementary_rank(const AbelianInvariants& inv);

/// Builds invariants from a Smith diagonal: ones are dropped, zeros and
/// missing diagonal positions count towards the free rank.
AbelianInvariants invariants_from_diagonal(const std::vector<BigInt>& diagonal, std::size_t generator_count);

bool is_prime(const BigInt& n);
/// Smallest prime factor of n >= 2.
BigInt smallest_prime_factor(const BigInt& n);

}  // namespace finann
