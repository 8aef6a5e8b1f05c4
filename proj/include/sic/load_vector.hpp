#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sic {

/// Deterministic per-class packet counts. Entries are non-negative integers;
/// the dimension is fixed at construction.
class LoadVector {
 public:
  LoadVector() = default;
  LoadVector(std::initializer_list<int> counts);
  explicit LoadVector(std::vector<int> counts);

  static LoadVector zeros(int dim);

  int dim() const { return static_cast<int>(counts_.size()); }
  int operator[](int k) const { return counts_[static_cast<std::size_t>(k)]; }
  int total() const;
  bool is_zero() const;

  bool operator==(const LoadVector&) const = default;

  /// Componentwise partial order: every entry of *this is <= the other's.
  bool dominated_by(const LoadVector& other) const;

  LoadVector cwise_min(const LoadVector& other) const;

  /// Componentwise difference. Requires other <= *this; throws otherwise.
  LoadVector minus(const LoadVector& other) const;

  /// Componentwise clamp to [0, cap_k].
  LoadVector clamped(const LoadVector& caps) const;

  LoadVector concat(const LoadVector& other) const;
  LoadVector head(int k) const;
  LoadVector tail(int k) const;

  const std::vector<int>& counts() const { return counts_; }
  std::string to_string() const;  // "(n_1,...,n_K)"

 private:
  std::vector<int> counts_;
};

struct LoadVectorHash {
  std::size_t operator()(const LoadVector& v) const;
};

/// Advances n one step in lexicographic order over the box
/// {0..upper_1} x ... x {0..upper_K} (last coordinate fastest).
/// Returns false once the enumeration wraps past the last load.
bool next_in_box(LoadVector& n, const LoadVector& upper);

}  // namespace sic
