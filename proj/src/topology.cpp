#include "sic/topology.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sic {

BipartiteTopology::BipartiteTopology(int external_classes, int receivers,
                                     std::vector<std::uint8_t> row_major)
    : k_(external_classes), t_(receivers), h_(std::move(row_major)) {
  if (k_ < 1 || t_ < 1)
    throw std::invalid_argument("topology: dimensions must be >= 1");
  if (h_.size() != static_cast<std::size_t>(k_) * static_cast<std::size_t>(t_))
    throw std::invalid_argument("topology: matrix size mismatch");
  for (std::uint8_t v : h_) {
    if (v > 1) throw std::invalid_argument("topology: entries must be 0 or 1");
  }
  b_.resize(k_);
  c_.resize(t_);
  for (int k = 0; k < k_; ++k) {
    for (int t = 0; t < t_; ++t) {
      if (h_[static_cast<std::size_t>(k) * t_ + t]) {
        b_[k].push_back(t);
        c_[t].push_back(k);
      }
    }
  }
}

BipartiteTopology BipartiteTopology::from_rows(
    const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("topology: empty matrix");
  const int k = static_cast<int>(rows.size());
  const int t = static_cast<int>(rows[0].size());
  std::vector<std::uint8_t> h;
  h.reserve(static_cast<std::size_t>(k) * t);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t)
      throw std::invalid_argument("topology: ragged matrix");
    for (int v : row) {
      if (v != 0 && v != 1)
        throw std::invalid_argument("topology: entries must be 0 or 1");
      h.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return BipartiteTopology(k, t, std::move(h));
}

bool BipartiteTopology::edge(int k, int t) const {
  if (k < 0 || k >= k_ || t < 0 || t >= t_)
    throw std::out_of_range("topology: edge index out of range");
  return h_[static_cast<std::size_t>(k) * t_ + t] != 0;
}

int BipartiteTopology::edge_count() const {
  int e = 0;
  for (std::uint8_t v : h_) e += v;
  return e;
}

const std::vector<int>& BipartiteTopology::receivers_of(int k) const {
  if (k < 0 || k >= k_) throw std::out_of_range("topology: row out of range");
  return b_[k];
}

const std::vector<int>& BipartiteTopology::classes_of(int t) const {
  if (t < 0 || t >= t_) throw std::out_of_range("topology: column out of range");
  return c_[t];
}

bool BipartiteTopology::multiplexing_valid() const {
  for (const auto& row : b_) {
    if (row.size() > 1) return false;
  }
  return true;
}

bool BipartiteTopology::coding_valid() const {
  for (const auto& col : c_) {
    if (col.size() > 1) return false;
  }
  return true;
}

LoadVector BipartiteTopology::internal_load(const LoadVector& n) const {
  if (n.dim() != k_)
    throw std::invalid_argument("topology: load dimension mismatch");
  std::vector<int> out(static_cast<std::size_t>(t_), 0);
  for (int t = 0; t < t_; ++t) {
    for (int k : c_[t]) out[t] += n[k];
  }
  return LoadVector(std::move(out));
}

bool BipartiteTopology::operator==(const BipartiteTopology& other) const {
  return k_ == other.k_ && t_ == other.t_ && h_ == other.h_;
}

void BipartiteTopology::save_matrix_csv(std::ostream& out) const {
  for (int k = 0; k < k_; ++k) {
    for (int t = 0; t < t_; ++t)
      out << static_cast<int>(h_[static_cast<std::size_t>(k) * t_ + t])
          << (t == t_ - 1 ? "" : ",");
    out << "\n";
  }
}

BipartiteTopology BipartiteTopology::load_matrix_csv(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> row;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(std::stoi(field));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

void BipartiteTopology::save_edge_list(std::ostream& out) const {
  for (int k = 0; k < k_; ++k) {
    for (int t : b_[k]) out << k << "," << t << "\n";
  }
}

BipartiteTopology BipartiteTopology::load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_k = -1, max_t = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw std::runtime_error("edge list: malformed line '" + line + "'");
    int k = std::stoi(a), t = std::stoi(b);
    if (k < 0 || t < 0) throw std::runtime_error("edge list: negative index");
    max_k = std::max(max_k, k);
    max_t = std::max(max_t, t);
    edges.emplace_back(k, t);
  }
  if (edges.empty()) throw std::runtime_error("edge list: no edges");
  std::vector<std::uint8_t> h(
      static_cast<std::size_t>(max_k + 1) * static_cast<std::size_t>(max_t + 1), 0);
  for (auto [k, t] : edges)
    h[static_cast<std::size_t>(k) * (max_t + 1) + t] = 1;
  return BipartiteTopology(max_k + 1, max_t + 1, std::move(h));
}

SplitTopology split_bipartite(const BipartiteTopology& h) {
  const int k = h.external_classes();
  const int t = h.receivers();
  const int e = h.edge_count();
  if (e == 0)
    throw std::invalid_argument("split_bipartite: topology has no edges");
  std::vector<std::uint8_t> h1(static_cast<std::size_t>(k) * e, 0);
  std::vector<std::uint8_t> h2(static_cast<std::size_t>(e) * t, 0);
  int edge = 0;
  for (int row = 0; row < k; ++row) {
    for (int col : h.receivers_of(row)) {
      h1[static_cast<std::size_t>(row) * e + edge] = 1;
      h2[static_cast<std::size_t>(edge) * t + col] = 1;
      ++edge;
    }
  }
  return SplitTopology{BipartiteTopology(k, e, std::move(h1)),
                       BipartiteTopology(e, t, std::move(h2))};
}

}  // namespace sic
