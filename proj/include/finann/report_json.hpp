#pragma once

#include <nlohmann/json.hpp>

#include "finann/abelian.hpp"
#include "finann/classify.hpp"
#include "finann/covering.hpp"
#include "finann/group_structure.hpp"
#include "finann/witness.hpp"

namespace finann {

using Json = nlohmann::ordered_json;

/// Factors fitting in int64 become numbers, larger ones decimal strings.
Json invariants_json(const AbelianInvariants& inv);

/// {group, property, verdict, cover: [hex masks], subcover, uncovered: [ids]}
Json cover_json(const CoverReport& r);

/// {presentation, hint, property, verdict, rule, reason, invariants, easily_fa, perfect}
Json verdict_json(const Presentation& p, Hint hint, const Verdict& v, const AbelianInvariants& inv);

/// {target: {name, order}, images: {gen: id}, word, verified, check}
Json witness_json(const Witness& w);

/// {presentation, max_length, bound, catalog, classified_fa, witnessed, unwitnessed, words: [...]}
Json scan_json(const ScanReport& r);

Json weight_json(const FiniteGroup& g, const WeightResult& w);

Json theorem_checks_json(const TheoremChecks& t);

}  // namespace finann
