#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finann/finite_group.hpp"
#include "finann/presentation.hpp"

namespace finann {

/// Image of each generator, indexed like Presentation::generators.
using Assignment = std::vector<Elem>;

/// Image of `w` under the map sending generator i to images[i]. Each syllable
/// costs one power with the exponent reduced modulo the element order.
Elem evaluate(const FiniteGroup& h, const Assignment& images, const Word& w);

/// Calls `visit` on every surjection P ->> H in lexicographic order of the
/// image tuple; stops early when `visit` returns false. A generator killed by
/// a relator g^m only tries images of order dividing m. Throws
/// SearchBudgetExceeded when the pruned assignment space exceeds `budget`.
void for_each_surjection(const Presentation& p, const FiniteGroup& h,
                         const std::function<bool(const Assignment&)>& visit,
                         std::uint64_t budget = Caps{}.search_budget);

std::vector<Assignment> enumerate_surjections(const Presentation& p, const FiniteGroup& h,
                                              std::uint64_t budget = Caps{}.search_budget);

/// A finite quotient that kills `word`.
struct Witness {
  Presentation source;
  Word word;
  FiniteGroup target;
  Assignment images;
  std::vector<std::string> check;  ///< transcript written by verify_witness
  bool verified = false;
};

/// Re-checks a witness by letter-by-letter multiplication, independently of
/// `evaluate`: relators and word map to the identity, images generate the
/// target, target nontrivial. Returns the first failure, or nothing.
std::optional<std::string> verify_witness(const Witness& w, std::vector<std::string>* transcript = nullptr);

/// Quotient search against witness_targets(bound). Surjection lists are
/// cached per target, so repeated queries on one presentation are cheap.
class AnnihilatorSearch {
 public:
  AnnihilatorSearch(Presentation p, std::size_t bound, std::uint64_t budget = Caps{}.search_budget);

  /// First witness in (order, name, images) order whose map kills `w`.
  std::optional<Witness> find(const Word& w);

  const Presentation& presentation() const noexcept { return p_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  const std::vector<Assignment>* cached(std::size_t target);

  Presentation p_;
  std::size_t bound_;
  std::uint64_t budget_;
  std::vector<FiniteGroup> targets_;
  std::map<std::size_t, std::optional<std::vector<Assignment>>> cache_;
  std::size_t cached_total_ = 0;
};

/// Throws InvalidArgument when `bound` exceeds kMaxWitnessBound.
std::optional<Witness> find_annihilator(const Presentation& p, const Word& w, std::size_t bound,
                                        std::uint64_t budget = Caps{}.search_budget);

/// Surjection onto some nontrivial target of order <= bound. Absence is only
/// "none <= bound", never a proof that no finite quotient exists.
std::optional<Witness> nontrivial_quotient_exists(const Presentation& p, std::size_t bound,
                                                  std::uint64_t budget = Caps{}.search_budget);

/// Freely reduced words of length <= max_length in shortlex order over the
/// alphabet g0, g0^-1, g1, g1^-1, ...; the empty word comes first.
std::vector<Word> shortlex_words(std::size_t generator_count, std::size_t max_length);

enum class ScanStatus { Witnessed, Unwitnessed, BoundTooSmall };
std::string_view to_string(ScanStatus s);

struct ScanEntry {
  Word word;
  ScanStatus status = ScanStatus::Unwitnessed;
  std::optional<Witness> witness;
};

struct ScanReport {
  Presentation source;
  std::size_t max_length = 0;
  std::size_t bound = 0;
  bool classified_fa = false;  ///< classify_fa said FA, so misses are "bound too small"
  std::vector<ScanEntry> entries;

  std::size_t witnessed() const;
  std::size_t unwitnessed() const;
};

ScanReport fa_scan(const Presentation& p, std::size_t max_length, std::size_t bound,
                   std::uint64_t budget = Caps{}.search_budget);

}  // namespace finann
