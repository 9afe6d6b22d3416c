#include "finann/report_json.hpp"

#include "finann/catalog.hpp"

namespace finann {

Json invariants_json(const AbelianInvariants& inv) {
  Json factors = Json::array();
  for (const auto& f : inv.factors) {
    if (f <= BigInt(std::numeric_limits<std::int64_t>::max()))
      factors.push_back(f.convert_to<std::int64_t>());
    else
      factors.push_back(f.str());
  }
  return Json{{"free_rank", inv.free_rank}, {"factors", std::move(factors)}};
}

Json cover_json(const CoverReport& r) {
  Json cover = Json::array();
  for (const auto& s : r.cover) cover.push_back(s.to_hex());
  Json out{{"group", r.group}, {"property", r.property()}, {"verdict", r.verdict}, {"cover", std::move(cover)}};
  if (r.verdict) {
    Json sub = Json::array();
    for (const auto& s : r.subcover) sub.push_back(s.to_hex());
    out["subcover"] = std::move(sub);
  }
  out["uncovered"] = r.uncovered;
  return out;
}

Json verdict_json(const Presentation& p, Hint hint, const Verdict& v, const AbelianInvariants& inv) {
  return Json{{"presentation", render(p)},
              {"hint", std::string(to_string(hint))},
              {"property", v.property()},
              {"verdict", std::string(to_string(v.status))},
              {"rule", v.rule},
              {"reason", v.reason},
              {"invariants", invariants_json(inv)},
              {"easily_fa", v.easily_fa},
              {"perfect", v.perfect}};
}

Json witness_json(const Witness& w) {
  Json images = Json::object();
  for (std::size_t i = 0; i < w.images.size(); ++i) images[w.source.generators[i]] = w.images[i];
  return Json{{"target", {{"name", w.target.name()}, {"order", w.target.order()}}},
              {"images", std::move(images)},
              {"word", render_word(w.source, w.word)},
              {"verified", w.verified},
              {"check", w.check}};
}

Json scan_json(const ScanReport& r) {
  Json words = Json::array();
  for (const auto& e : r.entries) {
    Json item{{"word", render_word(r.source, e.word)}, {"status", std::string(to_string(e.status))}};
    if (e.witness) item["witness"] = witness_json(*e.witness);
    words.push_back(std::move(item));
  }
  return Json{{"presentation", render(r.source)},
              {"max_length", r.max_length},
              {"bound", r.bound},
              {"catalog", std::string(witness_catalog_description())},
              {"classified_fa", r.classified_fa},
              {"witnessed", r.witnessed()},
              {"unwitnessed", r.unwitnessed()},
              {"words", std::move(words)}};
}

Json weight_json(const FiniteGroup& g, const WeightResult& w) {
  return Json{{"group", g.name()}, {"weight", w.weight}, {"generators", w.generators}};
}

Json theorem_checks_json(const TheoremChecks& t) {
  Json nfa = Json::array();
  for (const auto& [n, ok] : t.nfa_matches) nfa.push_back(Json{{"n", n}, {"pass", ok}});
  Json out{{"group", t.group},
           {"order", t.order},
           {"abelianisation", t.abelianisation},
           {"abelian_weight", t.ab_weight},
           {"fa", t.fa},
           {"perfect", t.perfect},
           {"weight", t.weight ? Json(*t.weight) : Json(nullptr)},
           {"checks",
            {{"fa_matches_noncyclic", t.fa_matches_noncyclic},
             {"fa_matches_prime_rank", t.fa_matches_prime_rank},
             {"nfa_matches", std::move(nfa)},
             {"nfa_monotone", t.nfa_monotone},
             {"subcover_valid", t.subcover_valid},
             {"weight_consistent", t.weight_consistent},
             {"perfect_weight_one", t.perfect_weight_one}}},
           {"pass", t.all_pass()},
           {"failures", t.failures()}};
  return out;
}

}  // namespace finann
