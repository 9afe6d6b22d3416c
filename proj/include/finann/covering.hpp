#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finann/element_set.hpp"
#include "finann/finite_group.hpp"

namespace finann {

/// Outcome of an exhaustive covering check on a finite group.
///
/// `cover` always lists every maximal normal proper subgroup. When the
/// verdict is true, `subcover` holds a greedy subcover (largest subgroups
/// first, ties by canonical mask) that still covers. When it is false,
/// `uncovered` holds the lexicographically smallest element (or n-subset)
/// that lies in no proper normal subgroup.
struct CoverReport {
  std::string group;
  std::size_t n = 1;  ///< 1 for plain F-A
  bool verdict = false;
  std::vector<ElementSet> cover;
  std::vector<ElementSet> subcover;
  std::vector<Elem> uncovered;

  std::string property() const { return n == 1 ? "F-A" : std::to_string(n) + "-F-A"; }
};

CoverReport is_fa_finite(const FiniteGroup& g, std::size_t cap = Caps{}.normal);

/// Every n-subset (n-tuples collapse to their entry sets) lies in a common
/// maximal normal proper subgroup.
CoverReport is_nfa_finite(const FiniteGroup& g, std::size_t n, std::size_t cap = Caps{}.normal);

/// A maximal normal proper subgroup containing `element` (smallest canonical
/// mask among candidates), or nothing. Throws TrivialGroup for |G| = 1.
std::optional<ElementSet> fa_witness_finite(const FiniteGroup& g, Elem element, std::size_t cap = Caps{}.normal);

/// Simple-annihilated check: every element lies in a normal subgroup with a
/// simple quotient. Computed from single-element normal closures, a separate
/// path from is_fa_finite.
bool is_simple_annihilated_finite(const FiniteGroup& g, std::size_t cap = Caps{}.normal);

/// Greedy subcover extraction; returns nothing if `subgroups` does not cover.
std::optional<std::vector<ElementSet>> greedy_subcover(std::size_t order, std::vector<ElementSet> subgroups);

struct TheoremChecks {
  std::string group;
  std::size_t order = 0;
  std::string abelianisation;  ///< printable invariants of G/G'
  std::size_t ab_weight = 0;
  bool fa = false;
  bool perfect = false;
  std::optional<std::size_t> weight;  ///< set when the weight check ran

  bool fa_matches_noncyclic = false;     ///< F-A iff G^ab has >= 2 invariant factors
  bool fa_matches_prime_rank = false;    ///< F-A iff some elementary p-rank of G^ab >= 2
  std::vector<std::pair<std::size_t, bool>> nfa_matches;  ///< (n, n-F-A iff w(G^ab) >= n+1)
  bool nfa_monotone = true;
  bool subcover_valid = true;            ///< the greedy subcover covers G (F-A groups only)
  bool weight_consistent = true;
  bool perfect_weight_one = true;

  bool all_pass() const;
  /// Names of failing checks.
  std::vector<std::string> failures() const;
};

struct VerifyOptions {
  std::size_t nfa_max = 3;
  bool check_weight = true;
  Caps caps{};
};

TheoremChecks verify_finite_theorems(const FiniteGroup& g, const VerifyOptions& options = {});

}  // namespace finann
