#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sic/load_vector.hpp"

namespace sic {

/// K x T binary bi-adjacency matrix between external traffic classes (rows)
/// and internal classes / receivers (columns). Row k's nonzero columns form
/// B_k, column t's nonzero rows form C_t.
class BipartiteTopology {
 public:
  BipartiteTopology(int external_classes, int receivers,
                    std::vector<std::uint8_t> row_major);
  static BipartiteTopology from_rows(const std::vector<std::vector<int>>& rows);

  int external_classes() const { return k_; }  // K
  int receivers() const { return t_; }         // T
  bool edge(int k, int t) const;
  int edge_count() const;

  const std::vector<int>& receivers_of(int k) const;  // B_k
  const std::vector<int>& classes_of(int t) const;    // C_t

  /// Every external class has at most one edge.
  bool multiplexing_valid() const;
  /// Every internal class has at most one edge.
  bool coding_valid() const;

  /// Internal load n * H.
  LoadVector internal_load(const LoadVector& n) const;

  bool operator==(const BipartiteTopology& other) const;

  // 0/1 matrix CSV, one row per external class.
  void save_matrix_csv(std::ostream& out) const;
  static BipartiteTopology load_matrix_csv(std::istream& in);

  // Edge list, one `k,t` pair per line (0-based). Loading infers dimensions
  // from the largest indices, so isolated rows/columns need the matrix form.
  void save_edge_list(std::ostream& out) const;
  static BipartiteTopology load_edge_list(std::istream& in);

 private:
  int k_;
  int t_;
  std::vector<std::uint8_t> h_;          // row-major
  std::vector<std::vector<int>> b_;      // B_k per row
  std::vector<std::vector<int>> c_;      // C_t per column
};

/// Factorization H = coding * multiplexing through one intermediate node per
/// edge of H: `coding` is K x E (edge e belongs to its row), `multiplexing`
/// is E x T (edge e feeds its column). Edges are numbered in row-major order.
struct SplitTopology {
  BipartiteTopology coding;
  BipartiteTopology multiplexing;
};
SplitTopology split_bipartite(const BipartiteTopology& h);

}  // namespace sic
