#include "sic/load_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace sic {

namespace {
void check_entries(const std::vector<int>& counts) {
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("LoadVector: negative entry");
  }
}
}  // namespace

LoadVector::LoadVector(std::initializer_list<int> counts) : counts_(counts) {
  check_entries(counts_);
}

LoadVector::LoadVector(std::vector<int> counts) : counts_(std::move(counts)) {
  check_entries(counts_);
}

LoadVector LoadVector::zeros(int dim) {
  if (dim < 1) throw std::invalid_argument("LoadVector: dimension must be >= 1");
  return LoadVector(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

int LoadVector::total() const {
  int t = 0;
  for (int c : counts_) t += c;
  return t;
}

bool LoadVector::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
}

bool LoadVector::dominated_by(const LoadVector& other) const {
  if (dim() != other.dim())
    throw std::invalid_argument("LoadVector: dimension mismatch");
  for (int k = 0; k < dim(); ++k) {
    if (counts_[k] > other.counts_[k]) return false;
  }
  return true;
}

LoadVector LoadVector::cwise_min(const LoadVector& other) const {
  if (dim() != other.dim())
    throw std::invalid_argument("LoadVector: dimension mismatch");
  std::vector<int> out(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k)
    out[k] = std::min(counts_[k], other.counts_[k]);
  return LoadVector(std::move(out));
}

LoadVector LoadVector::minus(const LoadVector& other) const {
  if (dim() != other.dim())
    throw std::invalid_argument("LoadVector: dimension mismatch");
  std::vector<int> out(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (other.counts_[k] > counts_[k])
      throw std::invalid_argument("LoadVector: subtraction would go negative at class " +
                                  std::to_string(k + 1));
    out[k] = counts_[k] - other.counts_[k];
  }
  return LoadVector(std::move(out));
}

LoadVector LoadVector::clamped(const LoadVector& caps) const {
  return cwise_min(caps);
}

LoadVector LoadVector::concat(const LoadVector& other) const {
  std::vector<int> out = counts_;
  out.insert(out.end(), other.counts_.begin(), other.counts_.end());
  return LoadVector(std::move(out));
}

LoadVector LoadVector::head(int k) const {
  if (k < 1 || k > dim()) throw std::invalid_argument("LoadVector::head: bad length");
  return LoadVector(std::vector<int>(counts_.begin(), counts_.begin() + k));
}

LoadVector LoadVector::tail(int k) const {
  if (k < 1 || k > dim()) throw std::invalid_argument("LoadVector::tail: bad length");
  return LoadVector(std::vector<int>(counts_.end() - k, counts_.end()));
}

std::string LoadVector::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(counts_[k]);
  }
  s += ")";
  return s;
}

std::size_t LoadVectorHash::operator()(const LoadVector& v) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int c : v.counts()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool next_in_box(LoadVector& n, const LoadVector& upper) {
  if (n.dim() != upper.dim())
    throw std::invalid_argument("next_in_box: dimension mismatch");
  std::vector<int> c = n.counts();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[k] < upper[k]) {
      ++c[k];
      n = LoadVector(std::move(c));
      return true;
    }
    c[k] = 0;
  }
  n = LoadVector(std::move(c));
  return false;
}

}  // namespace sic
