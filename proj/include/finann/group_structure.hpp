#pragma once

#include <cstddef>
#include <vector>

#include "finann/abelian.hpp"
#include "finann/element_set.hpp"
#include "finann/finite_group.hpp"

namespace finann {

/// Smallest subgroup containing `seeds`.
ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds);
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seeds);

/// Smallest normal subgroup containing `seeds` (the subgroup generated by all
/// conjugates of the seeds).
ElementSet normal_closure(const FiniteGroup& g, std::span<const Elem> seeds);
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seeds);

/// Product NM of two normal subgroups, which is again normal.
ElementSet join_normal(const FiniteGroup& g, const ElementSet& n, const ElementSet& m);

/// Conjugacy classes ordered by smallest member; members ascending. The
/// identity class {0} always comes first.
struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;
  std::vector<std::size_t> class_of;  ///< element id -> index into `classes`
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

/// All normal subgroups, sorted by (size, canonical mask). Built from the
/// normal closures of single conjugacy classes, closed under joins.
/// Throws OrderCapExceeded when |G| > cap.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, std::size_t cap = Caps{}.normal);

/// Proper normal subgroups that are maximal under inclusion. Empty for the
/// trivial group.
std::vector<ElementSet> maximal_normal_subgroups(const FiniteGroup& g, std::size_t cap = Caps{}.normal);

/// Maximal normal subgroups computed from an existing normal-subgroup list.
std::vector<ElementSet> maximal_among(const std::vector<ElementSet>& normals);

/// G/N; cosets numbered by their smallest member, so the identity coset is 0.
FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n);

/// Normal closure of all commutators xyx^-1y^-1.
ElementSet derived_subgroup(const FiniteGroup& g);

bool is_perfect(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g, std::size_t cap = Caps{}.normal);

/// Invariant factors of a finite abelian group (free rank 0).
/// Throws NotAbelian.
AbelianInvariants abelian_invariants_finite(const FiniteGroup& a);

/// Invariant factors of G/G'.
AbelianInvariants abelianisation_invariants(const FiniteGroup& g);

struct WeightResult {
  std::size_t weight = 0;
  /// Conjugacy-class representatives whose normal closure is G (first tuple
  /// in lexicographic class-representative order).
  std::vector<Elem> generators;
};

/// Least number of elements whose normal closure is G; 0 for the trivial
/// group. Throws OrderCapExceeded when |G| > cap.
WeightResult weight_bruteforce(const FiniteGroup& g, std::size_t cap = Caps{}.weight);

}  // namespace finann
