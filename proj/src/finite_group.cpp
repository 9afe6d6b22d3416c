#include "finann/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "finann/error.hpp"
#include "group_assembler.hpp"

namespace finann {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using Key = std::vector<std::uint32_t>;

// BFS closure of `generators` from `identity` under `mul`, then the full
// multiplication table by lookup.
template <class Mul>
FiniteGroup close_under(std::string name, const Key& identity, const std::vector<Key>& generators,
                        Mul mul, std::size_t cap) {
  std::vector<Key> elements{identity};
  std::unordered_map<Key, Elem, VectorHash> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Key next = mul(elements[head], g);
      if (index.contains(next)) continue;
      if (elements.size() + 1 > cap) {
        throw Error(ErrorCode::ClosureExceedsCap,
                    name + ": generated group exceeds order cap " + std::to_string(cap));
      }
      index.emplace(next, static_cast<Elem>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(mul(elements[a], elements[b]));
  return GroupAssembler::make(std::move(name), n, std::move(table));
}

// Light's associativity test: (xy)s == x(ys) for all x, y and all s in a
// set generating the table as a magma.
bool associative_on(const std::vector<std::vector<std::int64_t>>& t, const std::vector<std::size_t>& gens) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (auto s : gens) {
        const auto xy = static_cast<std::size_t>(t[x][y]);
        const auto ys = static_cast<std::size_t>(t[y][s]);
        if (t[xy][s] != t[x][ys]) return false;
      }
  return true;
}

std::vector<std::size_t> magma_generators(const std::vector<std::vector<std::int64_t>>& t) {
  const std::size_t n = t.size();
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> reached_list;
  std::vector<std::size_t> gens;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    reached[cand] = true;
    reached_list.push_back(cand);
    // Re-close: products of any two reached elements.
    for (std::size_t i = 0; i < reached_list.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto [a, b] : {std::pair{reached_list[i], reached_list[j]}, std::pair{reached_list[j], reached_list[i]}}) {
          const auto c = static_cast<std::size_t>(t[a][b]);
          if (!reached[c]) {
            reached[c] = true;
            reached_list.push_back(c);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)), inverse_(order), orders_(order) {
  for (std::size_t a = 0; a < order_; ++a) {
    const auto r = row(static_cast<Elem>(a));
    const auto it = std::find(r.begin(), r.end(), Elem{0});
    inverse_[a] = it == r.end() ? 0 : static_cast<Elem>(it - r.begin());
    std::uint32_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0 && k <= order_) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    orders_[a] = k;
  }
}

FiniteGroup FiniteGroup::trivial(std::string name) {
  return FiniteGroup(std::move(name), 1, std::vector<Elem>{0});
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const noexcept {
  const auto ord = static_cast<std::int64_t>(orders_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

std::optional<std::string> FiniteGroup::validate() const {
  const std::size_t n = order_;
  if (n == 0) return "empty group";
  if (table_.size() != n * n) return "table size mismatch";
  for (std::size_t x = 0; x < n; ++x) {
    if (table_[x] != x || table_[x * n] != x) return "element 0 is not the identity at " + std::to_string(x);
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = table_[a * n + b];
      if (c >= n || seen[c]) return "row " + std::to_string(a) + " is not a permutation";
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = table_[b * n + a];
      if (c >= n || seen[c]) return "column " + std::to_string(a) + " is not a permutation";
      seen[c] = 1;
    }
    if (mul(static_cast<Elem>(a), inverse_[a]) != 0 || mul(inverse_[a], static_cast<Elem>(a)) != 0)
      return "inverse of " + std::to_string(a) + " is inconsistent";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
      }
    }
  return std::nullopt;
}

FiniteGroup build_from_permutations(std::uint32_t degree, const std::vector<Permutation>& generators,
                                    std::string name, std::size_t cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.size() != degree)
      throw Error(ErrorCode::InvalidPermutation,
                  "generator " + std::to_string(i) + " has length " + std::to_string(g.size()) +
                      ", expected " + std::to_string(degree));
    std::vector<char> seen(degree, 0);
    for (auto v : g) {
      if (v >= degree || seen[v])
        throw Error(ErrorCode::InvalidPermutation, "generator " + std::to_string(i) + " is not a bijection");
      seen[v] = 1;
    }
  }
  Key identity(degree);
  for (std::uint32_t i = 0; i < degree; ++i) identity[i] = i;
  auto compose = [](const Key& a, const Key& b) {
    Key c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  return close_under(std::move(name), identity, generators, compose, cap);
}

FiniteGroup build_from_cayley_table(const std::vector<std::vector<std::int64_t>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                            " entries, expected " + std::to_string(n));
    for (auto v : table[a])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " has out-of-range entry " + std::to_string(v));
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = static_cast<std::size_t>(table[a][b]);
      if (seen[c]) throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = static_cast<std::size_t>(table[b][a]);
      if (seen[c]) throw Error(ErrorCode::NotAGroup, "column " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[0][x] != static_cast<std::int64_t>(x) || table[x][0] != static_cast<std::int64_t>(x))
      throw Error(ErrorCode::NotAGroup, "element 0 is not the identity (fails at " + std::to_string(x) + ")");
  }
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = static_cast<std::size_t>(table[a][b]);
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][static_cast<std::size_t>(table[b][c])]) {
            std::ostringstream os;
            os << "associativity fails at (" << a << "," << b << "," << c << ")";
            throw Error(ErrorCode::NotAGroup, os.str());
          }
        }
      }
  } else if (!associative_on(table, magma_generators(table))) {
    throw Error(ErrorCode::NotAGroup, "associativity fails (generator test)");
  }
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>(table[a][b]);
  return FiniteGroup(std::move(name), n, std::move(flat));
}

FiniteGroup build_from_matrix_generators(std::uint32_t p, std::uint32_t dim, const std::vector<ModMatrix>& generators,
                                         std::string name, std::size_t cap) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const std::size_t d = dim;
  auto mul = [p, d](const Key& a, const Key& b) {
    Key c(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const std::uint64_t aik = a[i * d + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < d; ++j) c[i * d + j] = static_cast<std::uint32_t>((c[i * d + j] + aik * b[k * d + j]) % p);
      }
    return c;
  };
  // Determinant mod p by Gaussian elimination; p is expected prime.
  auto det = [p, d](Key m) -> std::uint64_t {
    std::uint64_t result = 1;
    auto inverse = [p](std::uint64_t a) {
      std::uint64_t r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
      }
      return r;
    };
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (piv < d && m[piv * d + col] == 0) ++piv;
      if (piv == d) return 0;
      if (piv != col) {
        for (std::size_t j = 0; j < d; ++j) std::swap(m[piv * d + j], m[col * d + j]);
        result = (p - result) % p;
      }
      const std::uint64_t pv = m[col * d + col];
      result = result * pv % p;
      const std::uint64_t pinv = inverse(pv);
      for (std::size_t r = col + 1; r < d; ++r) {
        const std::uint64_t f = m[r * d + col] * pinv % p;
        if (f == 0) continue;
        for (std::size_t j = col; j < d; ++j)
          m[r * d + j] = static_cast<std::uint32_t>((m[r * d + j] + (p - f) * m[col * d + j]) % p);
      }
    }
    return result;
  };
  std::vector<Key> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.dim != dim || g.entries.size() != d * d)
      throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(i) + " has wrong dimension");
    Key k(d * d);
    for (std::size_t j = 0; j < d * d; ++j) {
      const auto m = static_cast<std::int64_t>(p);
      k[j] = static_cast<std::uint32_t>(((g.entries[j] % m) + m) % m);
    }
    if (det(k) == 0) throw Error(ErrorCode::SingularGenerator, "generator " + std::to_string(i) + " is singular mod " + std::to_string(p));
    gens.push_back(std::move(k));
  }
  Key identity(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) identity[i * d + i] = 1;
  return close_under(std::move(name), identity, gens, mul, cap);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > cap)
    throw Error(ErrorCode::ClosureExceedsCap, "direct product of order " + std::to_string(n) + " exceeds cap " +
                                                  std::to_string(cap));
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = static_cast<Elem>(a / nh), ha = static_cast<Elem>(a % nh);
      const auto gb = static_cast<Elem>(b / nh), hb = static_cast<Elem>(b % nh);
      table[a * n + b] = static_cast<Elem>(g.mul(ga, gb) * nh + h.mul(ha, hb));
    }
  return GroupAssembler::make(g.name() + "x" + h.name(), n, std::move(table));
}

}  // namespace finann
