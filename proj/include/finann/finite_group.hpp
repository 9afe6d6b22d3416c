#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finann/element_set.hpp"

namespace finann {

/// Combinatorial-blowup guards. These are configuration, not constants; every
/// operation that enumerates takes the relevant cap explicitly.
struct Caps {
  std::size_t construction = 1024;  ///< largest group any builder may produce
  std::size_t normal = 128;         ///< normal-subgroup enumeration and covering checks
  std::size_t weight = 128;         ///< brute-force weight search
  std::uint64_t search_budget = 100'000'000;  ///< assignment-space size for quotient search
};

using Permutation = std::vector<std::uint32_t>;

/// Row-major d*d integer matrix; entries are reduced mod p when used.
struct ModMatrix {
  std::uint32_t dim = 0;
  std::vector<std::int64_t> entries;
};

/// A finite group given by its full multiplication table on ids 0..order-1.
/// Element 0 is the identity. Immutable once built.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  static FiniteGroup trivial(std::string name = "C1");

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  FiniteGroup renamed(std::string name) const;

  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// Smallest k >= 1 with a^k = e.
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }
  /// a^k for any integer k; the exponent is reduced modulo the order of a.
  Elem pow(Elem a, std::int64_t k) const noexcept;
  Elem conjugate(Elem x, Elem by) const noexcept { return mul(mul(by, x), inv(by)); }
  Elem commutator(Elem x, Elem y) const noexcept { return mul(mul(x, y), mul(inv(x), inv(y))); }

  bool is_abelian() const noexcept;
  bool is_trivial() const noexcept { return order_ == 1; }

  std::span<const Elem> table() const noexcept { return table_; }
  std::span<const Elem> row(Elem a) const noexcept {
    return std::span<const Elem>(table_).subspan(static_cast<std::size_t>(a) * order_, order_);
  }

  /// Full check of the group axioms; returns a description of the first
  /// violation, or nothing when the table is a group with identity 0.
  std::optional<std::string> validate() const;

  bool operator==(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

  friend FiniteGroup build_from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                             std::string name);
  friend class GroupAssembler;

 private:
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

/// Closure of a set of permutations of 0..degree-1 under composition.
/// Elements are numbered in BFS order from the identity, visiting generators
/// in list order. The product a*b applies a first, then b.
FiniteGroup build_from_permutations(std::uint32_t degree, const std::vector<Permutation>& generators,
                                    std::string name = "perm", std::size_t cap = Caps{}.construction);

/// Validates a Cayley table (Latin square, identity 0, inverses, associativity).
/// Associativity is checked on all n^3 triples up to n = 256 and by Light's
/// generator test above that.
FiniteGroup build_from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                    std::string name = "table");

/// Closure of invertible d x d matrices over F_p under matrix multiplication.
FiniteGroup build_from_matrix_generators(std::uint32_t p, std::uint32_t dim,
                                         const std::vector<ModMatrix>& generators,
                                         std::string name = "matrix",
                                         std::size_t cap = Caps{}.construction);

/// G x H with (g, h) numbered g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = Caps{}.construction);

}  // namespace finann
