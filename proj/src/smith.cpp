#include "finann/smith.hpp"

#include <optional>
#include <utility>

namespace finann {

namespace {

BigInt magnitude(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_mag;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      BigInt m = magnitude(d(r, c));
      if (!best || m < best_mag) {
        best = {r, c};
        best_mag = std::move(m);
      }
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  auto& d = res.d;
  auto& u = res.u;
  auto& v = res.v;
  const std::size_t steps = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      const auto pivot = smallest_nonzero(d, t);
      if (!pivot) return res;
      const auto [pr, pc] = *pivot;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const BigInt q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const BigInt q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < d.rows() && divisible; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;
      if (d(t, t) < 0) {
        d.negate_row(t);
        u.negate_row(t);
      }
      break;
    }
  }
  return res;
}

AbelianInvariants invariants_of_relation_matrix(const IntMatrix& a) {
  return invariants_from_diagonal(smith_normal_form(a).d.diagonal(), a.cols());
}

}  // namespace finann
