#pragma once

#include <vector>

#include "sic/evaluator.hpp"
#include "sic/load_vector.hpp"
#include "sic/rng.hpp"

namespace sic::testing {

// Random member of the increasing contractive class over the given box:
// values are drawn in lexicographic order with g_k(n) uniform between the
// componentwise max over immediate predecessors and n_k. The result is a
// non-saturating table; queries used by the algebra stay inside the box
// because every operation is contractive.
inline SuccessEvaluator random_increasing_contractive_table(Rng& rng,
                                                            const LoadVector& caps) {
  const int K = caps.dim();
  std::vector<LoadVector> values;
  std::vector<int> strides(static_cast<std::size_t>(K), 1);
  for (int k = K - 2; k >= 0; --k) strides[k] = strides[k + 1] * (caps[k + 1] + 1);

  LoadVector n = LoadVector::zeros(K);
  std::size_t index = 0;
  do {
    std::vector<int> value(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      int lower = 0;
      for (int j = 0; j < K; ++j) {
        if (n[j] == 0) continue;
        const LoadVector& pred = values[index - static_cast<std::size_t>(strides[j])];
        lower = std::max(lower, pred[k]);
      }
      value[k] = lower + rng.uniform_int(n[k] - lower + 1);
    }
    values.emplace_back(std::move(value));
    ++index;
  } while (next_in_box(n, caps));

  return SuccessEvaluator::from_table(caps, std::move(values), /*saturating=*/false);
}

// Random increasing contractive table dominated pointwise by `upper_fn`.
inline SuccessEvaluator random_increasing_below(Rng& rng, const LoadVector& caps,
                                                const SuccessEvaluator& upper_fn) {
  const int K = caps.dim();
  std::vector<LoadVector> values;
  std::vector<int> strides(static_cast<std::size_t>(K), 1);
  for (int k = K - 2; k >= 0; --k) strides[k] = strides[k + 1] * (caps[k + 1] + 1);

  LoadVector n = LoadVector::zeros(K);
  std::size_t index = 0;
  do {
    const LoadVector cap_here = upper_fn(n);
    std::vector<int> value(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      int lower = 0;
      for (int j = 0; j < K; ++j) {
        if (n[j] == 0) continue;
        const LoadVector& pred = values[index - static_cast<std::size_t>(strides[j])];
        lower = std::max(lower, pred[k]);
      }
      const int hi = std::min(cap_here[k], n[k]);
      value[k] = lower + rng.uniform_int(hi - lower + 1);
    }
    values.emplace_back(std::move(value));
    ++index;
  } while (next_in_box(n, caps));

  return SuccessEvaluator::from_table(caps, std::move(values), /*saturating=*/false);
}

// Random contractive table with no structure beyond phi(n) <= n.
inline SuccessEvaluator random_contractive_table(Rng& rng, const LoadVector& caps) {
  const int K = caps.dim();
  std::vector<LoadVector> values;
  LoadVector n = LoadVector::zeros(K);
  do {
    std::vector<int> value(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) value[k] = rng.uniform_int(n[k] + 1);
    values.emplace_back(std::move(value));
  } while (next_in_box(n, caps));
  return SuccessEvaluator::from_table(caps, std::move(values), /*saturating=*/false);
}

// Pointwise equality over the whole box.
inline bool equal_on_box(const SuccessEvaluator& f, const SuccessEvaluator& g,
                         const LoadVector& caps) {
  LoadVector n = LoadVector::zeros(caps.dim());
  do {
    if (!(f(n) == g(n))) return false;
  } while (next_in_box(n, caps));
  return true;
}

// Pointwise f <= g over the whole box.
inline bool leq_on_box(const SuccessEvaluator& f, const SuccessEvaluator& g,
                       const LoadVector& caps) {
  LoadVector n = LoadVector::zeros(caps.dim());
  do {
    if (!f(n).dominated_by(g(n))) return false;
  } while (next_in_box(n, caps));
  return true;
}

}  // namespace sic::testing
