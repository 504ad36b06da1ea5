// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/splitting.hpp"

#include "fsle/lu.hpp"

namespace fsle {

std::optional<BlockInverse> block_inverse(const BCSplit& s) {
  const auto lu_sum = lu_factor(sum_bc(s));
  const auto lu_diff = lu_factor(s.b - s.c);
  if (!lu_sum || !lu_diff) {
    return std::nullopt;
  }
  const std::size_t n = s.b.rows();
  const CrispMatrix sum_inv = lu_sum->solve(CrispMatrix::identity(n));
  const CrispMatrix diff_inv = lu_diff->solve(CrispMatrix::identity(n));
  return BlockInverse{0.5 * (sum_inv + diff_inv), 0.5 * (sum_inv - diff_inv)};
}

CrispMatrix assemble(const BlockInverse& inv) {
  return build_s(BCSplit{inv.d, inv.e});
}

}  // namespace fsle
