#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtfin/bases.hpp"
#include "rtfin/cyclotomic.hpp"
#include "rtfin/sign.hpp"

namespace rtfin {

/// Dense (embedding x ratio) sign table, row-major by embedding.
struct SignMatrix {
  std::vector<EmbeddingIndex> embeddings;
  std::size_t ratio_count = 0;
  std::vector<Sign> entries;

  Sign at(std::size_t embedding, std::size_t ratio) const {
    return entries[embedding * ratio_count + ratio];
  }
  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
};

/// Reference fill, one entry at a time in row-major order.
SignMatrix fill_sign_matrix_serial(std::span<const GramRatio> ratios,
                                   std::span<const EmbeddingIndex> embeddings);

/// OpenMP fill over the flattened (embedding, ratio) index space.
/// threads <= 0 uses the OpenMP default. A DivisionByZeroQuantumInteger is
/// rethrown for the lowest offending flat index, as in the serial fill.
SignMatrix fill_sign_matrix_parallel(std::span<const GramRatio> ratios,
                                     std::span<const EmbeddingIndex> embeddings,
                                     int threads = 0);

}  // namespace rtfin
