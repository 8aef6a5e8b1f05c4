#pragma once

#include <iterator>
#include <vector>

#include "sic/evaluator.hpp"
#include "sic/topology.hpp"

namespace sic {

/// One synchronous pass of the max-sum message exchange. `sent[k][j]` is the
/// message class k sent to its j-th receiver in B_k; `returned[k][j]` is the
/// reply (the original message when the receiver's incoming sum was <= D,
/// otherwise 0). `residual` is n^{(i)} after the pass.
struct MaxSumState {
  int iteration = 0;
  LoadVector residual;
  std::vector<std::vector<int>> sent;
  std::vector<std::vector<int>> returned;
};

/// Success function of a network of cooperative D-fold receivers joined by an
/// arbitrary binary bi-adjacency matrix, computed by max-sum message passing.
/// Returns phi(n) = n - n^(final). Terminates within total(n) + 1 passes.
LoadVector max_sum_decode(const BipartiteTopology& h, int d, const LoadVector& n);

/// Full iteration trace of max_sum_decode (one entry per pass, including the
/// final pass in which nothing decodes).
std::vector<MaxSumState> max_sum_trace(const BipartiteTopology& h, int d,
                                       const LoadVector& n);

/// Lexicographic enumeration of the (D+2)^K decoding equivalence classes:
/// every load with entries in {0,...,D+1}. Loads with any entry beyond D+1
/// decode identically to the clamped load, so this box determines the whole
/// success function. Construction fails when (D+2)^K exceeds `limit`.
class ClassEnumeration {
 public:
  ClassEnumeration(int classes, int d, long long limit = 10'000'000);

  long long size() const { return size_; }
  const LoadVector& caps() const { return caps_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LoadVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const LoadVector*;
    using reference = const LoadVector&;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& other) const { return done_ == other.done_; }

   private:
    friend class ClassEnumeration;
    iterator(LoadVector caps, bool done);
    LoadVector caps_;
    LoadVector current_;
    bool done_;
  };

  iterator begin() const { return iterator(caps_, false); }
  iterator end() const { return iterator(caps_, true); }

 private:
  LoadVector caps_;
  long long size_;
};

/// Materializes max_sum_decode over the equivalence-class box into a
/// saturating table evaluator (caps D+1 per class) and verifies its
/// monotone-failure and all-or-nothing flags exhaustively.
SuccessEvaluator build_success_table(const BipartiteTopology& h, int d,
                                     long long limit = 10'000'000);

}  // namespace sic
