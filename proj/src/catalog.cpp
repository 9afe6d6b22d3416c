#include "finann/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "finann/abelian.hpp"
#include "finann/error.hpp"

namespace finann {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

void require_order(std::uint64_t order, std::size_t cap, const std::string& name) {
  if (order > cap)
    throw Error(ErrorCode::ClosureExceedsCap,
                name + " has order " + std::to_string(order) + ", above cap " + std::to_string(cap));
}

bool small_prime(std::uint64_t p) { return is_prime(BigInt(p)); }

Permutation cycle_perm(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

std::vector<std::uint32_t> iota_vec(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    r *= i;
    if (r > (1ULL << 40)) return r;
  }
  return r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

std::uint64_t predicted_order(const std::string& family, const std::vector<std::int64_t>& a) {
  const auto u = [&](std::size_t i) { return static_cast<std::uint64_t>(a[i]); };
  if (family == "C") return u(0);
  if (family == "CxC") return u(0) * u(1);
  if (family == "E") {
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < a[1]; ++i) {
      r *= u(0);
      if (r > (1ULL << 40)) break;
    }
    return r;
  }
  if (family == "D") return 2 * u(0);
  if (family == "S") return factorial(u(0));
  if (family == "A") return a[0] <= 2 ? 1 : factorial(u(0)) / 2;
  if (family == "Q8") return 8;
  if (family == "SL") return u(0) * (u(0) * u(0) - 1);
  return 0;
}

std::size_t arity(const std::string& family) {
  if (family == "Q8") return 0;
  if (family == "CxC" || family == "E") return 2;
  if (family == "C" || family == "D" || family == "S" || family == "A" || family == "SL") return 1;
  throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
}

// Parameter validity beyond arity: returns an error text or empty.
std::string invalid_params(const std::string& family, const std::vector<std::int64_t>& a) {
  for (auto v : a)
    if (v < 1) return "parameters must be positive";
  if (family == "E" && !small_prime(static_cast<std::uint64_t>(a[0]))) return std::to_string(a[0]) + " is not prime";
  if (family == "SL" && !small_prime(static_cast<std::uint64_t>(a[0]))) return std::to_string(a[0]) + " is not prime";
  if (family == "CxC" && a[0] > a[1]) return "CxC expects m <= n";
  return {};
}

FiniteGroup build_family(const std::string& family, const std::vector<std::int64_t>& a, std::size_t cap) {
  const auto u32 = [&](std::size_t i) { return static_cast<std::uint32_t>(a[i]); };
  if (family == "C") return cyclic_group(u32(0), cap);
  if (family == "CxC") return cyclic_product(u32(0), u32(1), cap);
  if (family == "E") return elementary_abelian(u32(0), u32(1), cap);
  if (family == "D") return dihedral_group(u32(0), cap);
  if (family == "S") return symmetric_group(u32(0), cap);
  if (family == "A") return alternating_group(u32(0), cap);
  if (family == "Q8") return quaternion_group();
  if (family == "SL") return special_linear_2(u32(0), cap);
  throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
}

std::string wrap_name(const std::string& n) {
  return n.find('x') == std::string::npos ? n : "(" + n + ")";
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n, std::size_t cap) {
  const std::string name = "C" + std::to_string(n);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  require_order(n, cap, name);
  const auto d = static_cast<std::uint32_t>(n);
  if (n == 1) return FiniteGroup::trivial(name);
  return build_from_permutations(d, {cycle_perm(d, iota_vec(0, d))}, name, cap);
}

FiniteGroup cyclic_product(std::size_t m, std::size_t n, std::size_t cap) {
  const std::string name = "C" + std::to_string(m) + "xC" + std::to_string(n);
  require_order(static_cast<std::uint64_t>(m) * n, cap, name);
  return direct_product(cyclic_group(m, cap), cyclic_group(n, cap), cap).renamed(name);
}

FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t k, std::size_t cap) {
  const std::string name = "C" + std::to_string(p) + "^" + std::to_string(k);
  if (!small_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) return FiniteGroup::trivial(name);
  require_order(predicted_order("E", {p, k}), cap, name);
  FiniteGroup g = cyclic_group(p, cap);
  for (std::uint32_t i = 1; i < k; ++i) g = direct_product(g, cyclic_group(p, cap), cap);
  return g.renamed(name);
}

FiniteGroup dihedral_group(std::size_t n, std::size_t cap) {
  const std::string name = "D" + std::to_string(n);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dihedral group needs n >= 1");
  require_order(2 * static_cast<std::uint64_t>(n), cap, name);
  if (n == 1) return build_from_permutations(2, {{1, 0}}, name, cap);
  if (n == 2) return build_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, name, cap);
  const auto d = static_cast<std::uint32_t>(n);
  Permutation reflection(d);
  for (std::uint32_t i = 0; i < d; ++i) reflection[i] = (d - i) % d;
  return build_from_permutations(d, {cycle_perm(d, iota_vec(0, d)), reflection}, name, cap);
}

FiniteGroup symmetric_group(std::uint32_t n, std::size_t cap) {
  const std::string name = "S" + std::to_string(n);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "symmetric group needs n >= 1");
  require_order(factorial(n), cap, name);
  if (n == 1) return FiniteGroup::trivial(name);
  if (n == 2) return build_from_permutations(2, {{1, 0}}, name, cap);
  return build_from_permutations(n, {cycle_perm(n, {0, 1}), cycle_perm(n, iota_vec(0, n))}, name, cap);
}

FiniteGroup alternating_group(std::uint32_t n, std::size_t cap) {
  const std::string name = "A" + std::to_string(n);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "alternating group needs n >= 1");
  require_order(predicted_order("A", {n}), cap, name);
  if (n <= 2) return FiniteGroup::trivial(name);
  if (n == 3) return build_from_permutations(3, {cycle_perm(3, {0, 1, 2})}, name, cap);
  const Permutation long_cycle = n % 2 == 1 ? cycle_perm(n, iota_vec(0, n)) : cycle_perm(n, iota_vec(1, n));
  return build_from_permutations(n, {cycle_perm(n, {0, 1, 2}), long_cycle}, name, cap);
}

FiniteGroup quaternion_group() {
  // Regular representation: i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5).
  const Permutation i{1, 2, 3, 0, 5, 6, 7, 4};
  const Permutation j{4, 7, 6, 5, 2, 1, 0, 3};
  return build_from_permutations(8, {i, j}, "Q8");
}

FiniteGroup special_linear_2(std::uint32_t p, std::size_t cap) {
  const std::string name = "SL(2," + std::to_string(p) + ")";
  if (!small_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require_order(predicted_order("SL", {p}), cap, name);
  const std::vector<ModMatrix> gens{{2, {1, 1, 0, 1}}, {2, {0, -1, 1, 0}}};
  return build_from_matrix_generators(p, 2, gens, name, cap);
}

bool CatalogEntry::ranged() const {
  return std::any_of(params.begin(), params.end(), [](const Range& r) { return r.lo != r.hi; });
}

std::string_view CatalogSpec::default_text() {
  return R"(# default catalog
C 1..32
CxC 2..16 2..16 max_order=32
E 2..31 2..5 max_order=32
D 3..16
S 3..5
A 4..5
Q8
SL 3
SL 5
)";
}

CatalogSpec CatalogSpec::default_spec() { return parse(default_text()); }

CatalogSpec CatalogSpec::parse(std::string_view text) {
  CatalogSpec spec;
  const auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto body = strip_comment(lines[ln]);
    if (body.empty()) continue;
    const auto tokens = split_ws(body);
    CatalogEntry e;
    e.family = tokens[0];
    std::size_t expected = 0;
    try {
      expected = arity(e.family);
    } catch (const Error&) {
      parse_fail(ln + 1, "unknown family '" + e.family + "'");
    }
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const auto& tok = tokens[t];
      if (tok.rfind("max_order=", 0) == 0) {
        const auto v = to_int(std::string_view(tok).substr(10));
        if (!v || *v < 1) parse_fail(ln + 1, "bad max_order '" + tok + "'");
        e.max_order = static_cast<std::size_t>(*v);
        continue;
      }
      const auto dots = tok.find("..");
      CatalogEntry::Range r;
      if (dots == std::string::npos) {
        const auto v = to_int(tok);
        if (!v) parse_fail(ln + 1, "bad parameter '" + tok + "'");
        r = {*v, *v};
      } else {
        const auto lo = to_int(std::string_view(tok).substr(0, dots));
        const auto hi = to_int(std::string_view(tok).substr(dots + 2));
        if (!lo || !hi || *lo > *hi) parse_fail(ln + 1, "bad range '" + tok + "'");
        r = {*lo, *hi};
      }
      e.params.push_back(r);
    }
    if (e.params.size() != expected)
      parse_fail(ln + 1, e.family + " takes " + std::to_string(expected) + " parameter(s)");
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

std::vector<FiniteGroup> build_catalog(const CatalogSpec& spec, std::size_t cap) {
  std::vector<FiniteGroup> out;
  std::set<std::string> names;
  for (const auto& e : spec.entries) {
    const bool ranged = e.ranged();
    std::vector<std::int64_t> args(e.params.size());
    auto emit = [&](auto&& self, std::size_t i) -> void {
      if (i == args.size()) {
        const auto why = invalid_params(e.family, args);
        if (!why.empty()) {
          if (ranged) return;
          throw Error(e.family == "E" || e.family == "SL" ? ErrorCode::NotPrime : ErrorCode::InvalidArgument,
                      e.family + ": " + why);
        }
        if (e.max_order && predicted_order(e.family, args) > *e.max_order) return;
        FiniteGroup g = build_family(e.family, args, cap);
        if (names.insert(g.name()).second) out.push_back(std::move(g));
        return;
      }
      for (auto v = e.params[i].lo; v <= e.params[i].hi; ++v) {
        args[i] = v;
        self(self, i + 1);
      }
    };
    emit(emit, 0);
  }
  return out;
}

FiniteGroup group_from_spec(std::string_view text, std::size_t cap) {
  const std::string s = trim(text);
  if (s.rfind("prod(", 0) == 0) {
    if (s.back() != ')') throw Error(ErrorCode::ParseError, "unterminated prod( in '" + s + "'");
    const std::string inner = s.substr(5, s.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        const auto a = group_from_spec(inner.substr(0, i), cap);
        const auto b = group_from_spec(inner.substr(i + 1), cap);
        return direct_product(a, b, cap).renamed(wrap_name(a.name()) + "x" + wrap_name(b.name()));
      }
    }
    throw Error(ErrorCode::ParseError, "prod( expects two comma-separated group specs");
  }
  const auto tokens = split_ws(s);
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "empty group spec");
  const std::string& family = tokens[0];
  std::size_t expected = 0;
  try {
    expected = arity(family);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "unknown group family '" + family + "'");
  }
  if (tokens.size() - 1 != expected)
    throw Error(ErrorCode::ParseError, family + " takes " + std::to_string(expected) + " parameter(s)");
  std::vector<std::int64_t> args;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto v = to_int(tokens[i]);
    if (!v) throw Error(ErrorCode::ParseError, "bad parameter '" + tokens[i] + "'");
    args.push_back(*v);
  }
  const auto why = invalid_params(family, args);
  if (!why.empty() && !(family == "CxC" && why == "CxC expects m <= n"))
    throw Error(ErrorCode::ParseError, family + ": " + why);
  require_order(predicted_order(family, args), cap, s);
  return build_family(family, args, cap);
}

GroupFileFormat parse_group_file_format(std::string_view text) {
  if (text == "permutations" || text == "perms") return GroupFileFormat::Permutations;
  if (text == "cayley") return GroupFileFormat::Cayley;
  if (text == "matrix") return GroupFileFormat::Matrix;
  throw Error(ErrorCode::ParseError, "unknown group file format '" + std::string(text) + "'");
}

FiniteGroup parse_permutation_generators(std::string_view text, std::string name, std::size_t cap) {
  std::vector<std::vector<std::vector<std::uint32_t>>> gens;  // per generator: list of cycles
  std::uint32_t degree = 1;
  const auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto body = strip_comment(lines[ln]);
    if (body.empty()) continue;
    std::vector<std::vector<std::uint32_t>> cycles;
    std::set<std::uint32_t> used;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      if (body[i] != '(') parse_fail(ln + 1, "expected '(' at column " + std::to_string(i + 1));
      const auto close = body.find(')', i);
      const auto reopen = body.find('(', i + 1);
      if (close == std::string::npos || (reopen != std::string::npos && reopen < close))
        parse_fail(ln + 1, "unclosed cycle starting at column " + std::to_string(i + 1));
      std::string inner = body.substr(i + 1, close - i - 1);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      std::vector<std::uint32_t> cycle;
      for (const auto& tok : split_ws(inner)) {
        const auto v = to_int(tok);
        if (!v || *v < 0 || *v > 1'000'000) parse_fail(ln + 1, "bad point '" + tok + "'");
        const auto pt = static_cast<std::uint32_t>(*v);
        if (!used.insert(pt).second) parse_fail(ln + 1, "point " + tok + " repeated");
        degree = std::max(degree, pt + 1);
        cycle.push_back(pt);
      }
      cycles.push_back(std::move(cycle));
      i = close + 1;
    }
    gens.push_back(std::move(cycles));
  }
  std::vector<Permutation> perms;
  for (const auto& cycles : gens) {
    Permutation p(degree);
    for (std::uint32_t k = 0; k < degree; ++k) p[k] = k;
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
    perms.push_back(std::move(p));
  }
  return build_from_permutations(degree, perms, std::move(name), cap);
}

FiniteGroup parse_cayley_table(std::string_view text, std::string name) {
  const auto lines = lines_of(text);
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto body = strip_comment(lines[ln]);
    if (!body.empty()) rows.emplace_back(ln + 1, split_ws(body));
  }
  if (rows.empty()) parse_fail(1, "missing order line");
  if (rows[0].second.size() != 1) parse_fail(rows[0].first, "first line must hold the order");
  const auto n = to_int(rows[0].second[0]);
  if (!n || *n < 1) parse_fail(rows[0].first, "bad order '" + rows[0].second[0] + "'");
  const auto order = static_cast<std::size_t>(*n);
  if (rows.size() - 1 != order)
    parse_fail(rows.back().first, "expected " + std::to_string(order) + " table rows, found " +
                                      std::to_string(rows.size() - 1));
  std::vector<std::vector<std::int64_t>> table;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [ln, toks] = rows[r];
    if (toks.size() != order) parse_fail(ln, "expected " + std::to_string(order) + " entries");
    std::vector<std::int64_t> row;
    for (const auto& t : toks) {
      const auto v = to_int(t);
      if (!v) parse_fail(ln, "bad entry '" + t + "'");
      row.push_back(*v);
    }
    table.push_back(std::move(row));
  }
  return build_from_cayley_table(table, std::move(name));
}

FiniteGroup parse_matrix_generators(std::string_view text, std::string name, std::size_t cap) {
  const auto lines = lines_of(text);
  std::size_t ln = 0;
  std::vector<std::string> header;
  for (; ln < lines.size(); ++ln) {
    const auto body = strip_comment(lines[ln]);
    if (body.empty()) continue;
    header = split_ws(body);
    break;
  }
  if (header.size() != 2) parse_fail(ln + 1, "header must be 'p d'");
  const auto p = to_int(header[0]);
  const auto d = to_int(header[1]);
  if (!p || *p < 2 || !d || *d < 1 || *d > 16) parse_fail(ln + 1, "bad header");
  const auto dim = static_cast<std::uint32_t>(*d);
  std::vector<ModMatrix> gens;
  ModMatrix cur{dim, {}};
  auto flush = [&](std::size_t at) {
    if (cur.entries.empty()) return;
    if (cur.entries.size() != static_cast<std::size_t>(dim) * dim)
      parse_fail(at, "matrix has " + std::to_string(cur.entries.size() / dim) + " rows, expected " +
                         std::to_string(dim));
    gens.push_back(cur);
    cur.entries.clear();
  };
  for (++ln; ln < lines.size(); ++ln) {
    const auto body = strip_comment(lines[ln]);
    if (body.empty()) {
      flush(ln + 1);
      continue;
    }
    const auto toks = split_ws(body);
    if (toks.size() != dim) parse_fail(ln + 1, "expected " + std::to_string(dim) + " entries");
    for (const auto& t : toks) {
      const auto v = to_int(t);
      if (!v) parse_fail(ln + 1, "bad entry '" + t + "'");
      cur.entries.push_back(*v);
    }
    if (cur.entries.size() > static_cast<std::size_t>(dim) * dim)
      parse_fail(ln + 1, "matrices must be separated by a blank line");
  }
  flush(lines.size());
  return build_from_matrix_generators(static_cast<std::uint32_t>(*p), dim, gens, std::move(name), cap);
}

FiniteGroup load_group(const std::filesystem::path& path, GroupFileFormat format, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string name = path.stem().string();
  switch (format) {
    case GroupFileFormat::Permutations: return parse_permutation_generators(text, std::move(name), cap);
    case GroupFileFormat::Cayley: return parse_cayley_table(text, std::move(name));
    case GroupFileFormat::Matrix: return parse_matrix_generators(text, std::move(name), cap);
  }
  throw Error(ErrorCode::ParseError, "unknown format");
}

std::vector<FiniteGroup> witness_targets(std::size_t bound) {
  if (bound > kMaxWitnessBound)
    throw Error(ErrorCode::InvalidArgument,
                "order bound " + std::to_string(bound) + " exceeds the target catalog limit " +
                    std::to_string(kMaxWitnessBound));
  std::vector<FiniteGroup> out;
  for (std::size_t n = 2; n <= bound; ++n) out.push_back(cyclic_group(n));
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (!small_prime(p)) continue;
    std::size_t order = static_cast<std::size_t>(p) * p;
    for (std::uint32_t k = 2; order <= bound; ++k, order *= p) out.push_back(elementary_abelian(p, k));
  }
  // D3 is S3, which is listed by its own name.
  for (std::size_t n = 4; 2 * n <= bound; ++n) out.push_back(dihedral_group(n));
  if (bound >= 6) out.push_back(symmetric_group(3));
  if (bound >= 8) out.push_back(quaternion_group());
  if (bound >= 12) out.push_back(alternating_group(4));
  if (bound >= 24) {
    out.push_back(symmetric_group(4));
    out.push_back(special_linear_2(3));
  }
  if (bound >= 60) out.push_back(alternating_group(5));
  std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.name() < b.name();
  });
  return out;
}

std::string_view witness_catalog_description() {
  return "cyclic C_n, elementary abelian (C_p)^k, dihedral D_n (n >= 4), S3, S4, A4, A5, Q8, SL(2,3)";
}

}  // namespace finann
