#include "finann/classify.hpp"

#include <numeric>

#include "finann/error.hpp"
#include "finann/smith.hpp"

namespace finann {

namespace {

constexpr std::string_view kCyclicGap =
    "cyclic abelianisation alone does not decide F-A: <x,y,z | x^p, y^q, z^r> with pairwise coprime "
    "p, q, r is F-A although its abelianisation C_pqr is cyclic";

bool quotient_class_hint(Hint h) {
  return h == Hint::Free || h == Hint::Abelian || h == Hint::Solvable || h == Hint::Finite ||
         h == Hint::FinitelyManyFiniteSimpleQuotients;
}

std::string prime_rank_text(const AbelianInvariants& inv, const PrimeRank& pr) {
  return "abelianisation " + inv.to_string() + " maps onto (C_" + pr.prime.str() + ")^" + std::to_string(pr.rank);
}

}  // namespace

Hint parse_hint(std::string_view text) {
  if (text.empty() || text == "none") return Hint::None;
  if (text == "free") return Hint::Free;
  if (text == "abelian") return Hint::Abelian;
  if (text == "solvable") return Hint::Solvable;
  if (text == "finite") return Hint::Finite;
  if (text == "finitely-many-finite-simple-quotients") return Hint::FinitelyManyFiniteSimpleQuotients;
  if (text == "simple") return Hint::Simple;
  if (text == "two-generator-coprime-torsion") return Hint::TwoGeneratorCoprimeTorsion;
  throw Error(ErrorCode::InvalidHint, "unknown hint '" + std::string(text) + "'");
}

std::string_view to_string(Hint h) {
  switch (h) {
    case Hint::None: return "none";
    case Hint::Free: return "free";
    case Hint::Abelian: return "abelian";
    case Hint::Solvable: return "solvable";
    case Hint::Finite: return "finite";
    case Hint::FinitelyManyFiniteSimpleQuotients: return "finitely-many-finite-simple-quotients";
    case Hint::Simple: return "simple";
    case Hint::TwoGeneratorCoprimeTorsion: return "two-generator-coprime-torsion";
  }
  return "none";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::FA: return "FA";
    case Status::NotFA: return "NotFA";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  return invariants_of_relation_matrix(exponent_matrix(p));
}

bool is_coprime_torsion_pair(const Presentation& p) {
  if (p.generators.size() != 2 || p.relators.size() != 2) return false;
  const auto& r0 = p.relators[0].syllables;
  const auto& r1 = p.relators[1].syllables;
  if (r0.size() != 1 || r1.size() != 1 || r0[0].gen == r1[0].gen) return false;
  const auto m = r0[0].exp < 0 ? -r0[0].exp : r0[0].exp;
  const auto n = r1[0].exp < 0 ? -r1[0].exp : r1[0].exp;
  return std::gcd(m, n) == 1;
}

Verdict classify_fa(const Presentation& p, Hint hint) {
  const auto inv = abelian_invariants(p);
  const auto pr = max_elementary_rank(inv);
  Verdict v;
  v.easily_fa = pr.rank >= 2;
  v.perfect = inv.is_trivial();
  if (pr.rank >= 2) {
    v.status = Status::FA;
    v.rule = "elementary-rank-2";
    v.reason = prime_rank_text(inv, pr) + "; a finitely generated group with a C_p x C_p quotient is F-A";
    return v;
  }
  if (simplify_trivial_relators(p).collapsed) {
    v.status = Status::NotFA;
    v.rule = "trivial-group";
    v.reason = "presentation simplifies to the trivial group, which is not F-A by convention";
    return v;
  }
  if (hint == Hint::Simple) {
    v.status = Status::NotFA;
    v.rule = "simple-group";
    v.reason = "asserted simple and nontrivial: weight 1, so not F-A";
    return v;
  }
  if (quotient_class_hint(hint)) {
    v.status = Status::NotFA;
    v.rule = "cyclic-abelianisation-in-class";
    v.reason = "abelianisation " + inv.to_string() + " is cyclic and the asserted class '" +
               std::string(to_string(hint)) + "' is F-A exactly when the abelianisation is non-cyclic";
    return v;
  }
  if (is_coprime_torsion_pair(p) || hint == Hint::TwoGeneratorCoprimeTorsion) {
    v.status = Status::NotFA;
    v.rule = "coprime-torsion-pair";
    v.reason = "quotient of C_m * C_n with gcd(m, n) = 1, which has weight 1; not F-A";
    return v;
  }
  v.status = Status::Unknown;
  v.rule = "undecided";
  v.reason = "abelianisation " + inv.to_string() + " is cyclic; " + std::string(kCyclicGap);
  if (v.perfect) v.reason += "; the group is perfect and its weight is unknown";
  return v;
}

Verdict classify_nfa(const Presentation& p, std::size_t n, Hint hint) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n == 1) return classify_fa(p, hint);
  const auto inv = abelian_invariants(p);
  const auto pr = max_elementary_rank(inv);
  Verdict v;
  v.n = n;
  v.easily_fa = pr.rank >= 2;
  v.perfect = inv.is_trivial();
  if (pr.rank >= n + 1) {
    v.status = Status::FA;
    v.rule = "elementary-rank-n+1";
    v.reason = prime_rank_text(inv, pr) + "; a group mapping onto (C_p)^(n+1) has a finite proper n-covering";
    return v;
  }
  const Verdict base = classify_fa(p, hint);
  if (base.status == Status::NotFA) {
    v.status = Status::NotFA;
    v.rule = "not-fa:" + base.rule;
    v.reason = "not F-A (" + base.reason + "), hence not n-F-A for any n";
    return v;
  }
  const bool class_hint = quotient_class_hint(hint) || hint == Hint::Simple;
  if (class_hint && abelian_weight(inv) < n + 1) {
    v.status = Status::NotFA;
    v.rule = "abelian-weight-in-class";
    v.reason = "abelianisation " + inv.to_string() + " has weight " + std::to_string(abelian_weight(inv)) + " < " +
               std::to_string(n + 1) + " and the asserted class '" + std::string(to_string(hint)) +
               "' is n-F-A exactly when that weight is at least n+1";
    return v;
  }
  v.status = Status::Unknown;
  v.rule = "undecided";
  v.reason = "largest elementary rank of the abelianisation " + inv.to_string() + " is " + std::to_string(pr.rank) +
             " < " + std::to_string(n + 1) + " and no asserted class decides the rest";
  return v;
}

RhoChecks rho_annihilated_checks(const Presentation& p) {
  const auto inv = abelian_invariants(p);
  RhoChecks out;
  out.abelian_a.perfect = out.free_a.perfect = inv.is_trivial();
  out.abelian_a.easily_fa = out.free_a.easily_fa = max_elementary_rank(inv).rank >= 2;
  if (!inv.is_cyclic()) {
    out.abelian_a.status = Status::FA;
    out.abelian_a.rule = "noncyclic-abelianisation";
    out.abelian_a.reason = "abelianisation " + inv.to_string() + " is non-cyclic";
  } else {
    out.abelian_a.status = Status::NotFA;
    out.abelian_a.rule = "cyclic-abelianisation";
    out.abelian_a.reason = "abelianisation " + inv.to_string() + " is cyclic";
  }
  if (inv.free_rank >= 2) {
    out.free_a.status = Status::FA;
    out.free_a.rule = "free-rank-2";
    out.free_a.reason = "abelianisation has free rank " + std::to_string(inv.free_rank) + ", so G maps onto Z x Z";
  } else {
    out.free_a.status = Status::NotFA;
    out.free_a.rule = "free-rank-below-2";
    out.free_a.reason = "abelianisation has free rank " + std::to_string(inv.free_rank) + " < 2";
  }
  return out;
}

}  // namespace finann
