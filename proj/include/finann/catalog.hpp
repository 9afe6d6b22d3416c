#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finann/finite_group.hpp"

namespace finann {

// Named families. Every builder takes the construction cap and throws
// ClosureExceedsCap before building anything larger.
FiniteGroup cyclic_group(std::size_t n, std::size_t cap = Caps{}.construction);
FiniteGroup cyclic_product(std::size_t m, std::size_t n, std::size_t cap = Caps{}.construction);
FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t k, std::size_t cap = Caps{}.construction);
/// Symmetries of the n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n, std::size_t cap = Caps{}.construction);
FiniteGroup symmetric_group(std::uint32_t n, std::size_t cap = Caps{}.construction);
FiniteGroup alternating_group(std::uint32_t n, std::size_t cap = Caps{}.construction);
FiniteGroup quaternion_group();
/// SL(2, p) generated by [[1,1],[0,1]] and [[0,-1],[1,0]].
FiniteGroup special_linear_2(std::uint32_t p, std::size_t cap = Caps{}.construction);

/// One catalog line: `family param...` where each parameter is an integer or
/// an inclusive range `a..b`, optionally followed by `max_order=N`.
struct CatalogEntry {
  struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool operator==(const Range&) const = default;
  };
  std::string family;  ///< C, CxC, E, D, S, A, Q8, SL
  std::vector<Range> params;
  std::optional<std::size_t> max_order;

  bool ranged() const;
  bool operator==(const CatalogEntry&) const = default;
};

struct CatalogSpec {
  std::vector<CatalogEntry> entries;

  /// Line-oriented text; `#` starts a comment. Throws ParseError.
  static CatalogSpec parse(std::string_view text);
  static CatalogSpec default_spec();
  static std::string_view default_text();
};

/// Deterministic list of named groups. Ranged entries skip parameter
/// combinations that are invalid (non-prime p, m > n for CxC) or above
/// max_order; explicit entries raise instead. Duplicate names keep the first.
std::vector<FiniteGroup> build_catalog(const CatalogSpec& spec, std::size_t cap = Caps{}.construction);

/// Group mini-language: `C n`, `CxC m n`, `E p k`, `D n`, `S n`, `A n`, `Q8`,
/// `SL p`, `prod(spec, spec)`. Throws ParseError.
FiniteGroup group_from_spec(std::string_view spec, std::size_t cap = Caps{}.construction);

enum class GroupFileFormat { Permutations, Cayley, Matrix };
GroupFileFormat parse_group_file_format(std::string_view text);

/// Reads and validates a group file; the group is named after the file stem.
/// Throws IoError, ParseError, NotAGroup or ClosureExceedsCap.
FiniteGroup load_group(const std::filesystem::path& path, GroupFileFormat format,
                       std::size_t cap = Caps{}.construction);

/// Parsers behind load_group, usable on in-memory text.
FiniteGroup parse_permutation_generators(std::string_view text, std::string name,
                                         std::size_t cap = Caps{}.construction);
FiniteGroup parse_cayley_table(std::string_view text, std::string name);
FiniteGroup parse_matrix_generators(std::string_view text, std::string name,
                                    std::size_t cap = Caps{}.construction);

/// Targets for quotient searches: C_n (2 <= n <= bound), elementary abelian
/// (C_p)^k with k >= 2, D_n (n >= 4), S3, S4, A4, A5, Q8, SL(2,3), restricted
/// to order <= bound and sorted by (order, name). Not every group of a given
/// order is present.
std::vector<FiniteGroup> witness_targets(std::size_t bound);
inline constexpr std::size_t kMaxWitnessBound = 128;
/// Human-readable description of the target families.
std::string_view witness_catalog_description();

}  // namespace finann
