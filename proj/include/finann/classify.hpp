#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "finann/abelian.hpp"
#include "finann/presentation.hpp"

namespace finann {

/// Caller-asserted class membership. Hints are trusted, never inferred
/// (membership is undecidable for finite presentations); a wrong hint voids
/// any NotFA verdict it justified. Hints never justify FA.
enum class Hint {
  None,
  Free,
  Abelian,
  Solvable,
  Finite,
  FinitelyManyFiniteSimpleQuotients,
  Simple,
  TwoGeneratorCoprimeTorsion,
};

/// Accepts `none`, `free`, `abelian`, `solvable`, `finite`,
/// `finitely-many-finite-simple-quotients`, `simple`,
/// `two-generator-coprime-torsion`. Throws InvalidHint.
Hint parse_hint(std::string_view text);
std::string_view to_string(Hint h);

enum class Status { FA, NotFA, Unknown };
std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::size_t n = 1;      ///< covering size; 1 for plain F-A
  std::string rule;       ///< rule identifier (empty only for Unknown)
  std::string reason;     ///< human-readable justification or blocking gap
  bool easily_fa = false; ///< abelianisation maps onto C_p x C_p
  bool perfect = false;   ///< trivial abelianisation

  std::string property() const { return n == 1 ? "F-A" : std::to_string(n) + "-F-A"; }
};

/// F-A verdict for the group presented by `p`.
Verdict classify_fa(const Presentation& p, Hint hint = Hint::None);

/// n-F-A verdict; n = 1 is identical to classify_fa. Throws InvalidArgument
/// for n < 1.
Verdict classify_nfa(const Presentation& p, std::size_t n, Hint hint = Hint::None);

struct RhoChecks {
  Verdict abelian_a;
  Verdict free_a;  ///< "free" includes Z
};

/// Abelian-annihilated iff the abelianisation is non-cyclic; free-annihilated
/// (Z counted as free) iff the abelianisation has free rank >= 2.
RhoChecks rho_annihilated_checks(const Presentation& p);

AbelianInvariants abelian_invariants(const Presentation& p);

/// Exactly two generators and exactly two relators x^m, y^n (one per
/// generator) with gcd(m, n) = 1.
bool is_coprime_torsion_pair(const Presentation& p);

}  // namespace finann
