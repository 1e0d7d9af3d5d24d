#include "rtfin/sign_kernels.hpp"

#include <omp.h>

#include <exception>
#include <limits>

#include "rtfin/errors.hpp"

namespace rtfin {

namespace {

SignMatrix empty_matrix(std::span<const GramRatio> ratios, std::span<const EmbeddingIndex> embeddings) {
  SignMatrix m;
  m.embeddings.assign(embeddings.begin(), embeddings.end());
  m.ratio_count = ratios.size();
  m.entries.assign(embeddings.size() * ratios.size(), Sign::Zero);
  return m;
}

Sign evaluate_entry(const GramRatio& ratio, const EmbeddingIndex& k) {
  try {
    return eval_sign(ratio.value, k);
  } catch (const DivisionByZeroQuantumInteger& e) {
    throw DivisionByZeroQuantumInteger(e.index(), e.embedding(), e.level(), "ratio " + ratio.id());
  }
}

}  // namespace

SignMatrix fill_sign_matrix_serial(std::span<const GramRatio> ratios,
                                   std::span<const EmbeddingIndex> embeddings) {
  SignMatrix m = empty_matrix(ratios, embeddings);
  for (std::size_t e = 0; e < embeddings.size(); ++e) {
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      m.entries[e * ratios.size() + r] = evaluate_entry(ratios[r], embeddings[e]);
    }
  }
  return m;
}

SignMatrix fill_sign_matrix_parallel(std::span<const GramRatio> ratios,
                                     std::span<const EmbeddingIndex> embeddings, int threads) {
  SignMatrix m = empty_matrix(ratios, embeddings);
  const auto cols = static_cast<std::int64_t>(ratios.size());
  const auto total = static_cast<std::int64_t>(m.entries.size());
  if (total == 0) return m;

  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr failure;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (std::int64_t flat = 0; flat < total; ++flat) {
    try {
      m.entries[flat] = evaluate_entry(ratios[flat % cols], embeddings[flat / cols]);
    } catch (...) {
#pragma omp critical(rtfin_sign_fill_failure)
      {
        if (flat < first_failure) {
          first_failure = flat;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

}  // namespace rtfin
