#include "sic/evaluator.hpp"

#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace sic {

namespace detail {

class EvalNode {
 public:
  virtual ~EvalNode() = default;
  virtual int dim() const = 0;
  virtual LoadVector eval(const LoadVector& n) const = 0;
};

namespace {

class FunctionNode final : public EvalNode {
 public:
  FunctionNode(int dim, std::string name,
               std::function<LoadVector(const LoadVector&)> rule)
      : dim_(dim), name_(std::move(name)), rule_(std::move(rule)) {}

  int dim() const override { return dim_; }

  LoadVector eval(const LoadVector& n) const override {
    LoadVector out = rule_(n);
    if (out.dim() != dim_ || !out.dominated_by(n))
      throw std::logic_error("evaluator '" + name_ +
                             "' violated contractivity at " + n.to_string());
    return out;
  }

 private:
  int dim_;
  std::string name_;
  std::function<LoadVector(const LoadVector&)> rule_;
};

class TableNode final : public EvalNode {
 public:
  TableNode(LoadVector caps, std::vector<LoadVector> values, bool saturating)
      : caps_(std::move(caps)),
        values_(std::move(values)),
        saturating_(saturating) {
    long long size = 1;
    for (int k = 0; k < caps_.dim(); ++k) size *= caps_[k] + 1;
    if (static_cast<long long>(values_.size()) != size)
      throw std::invalid_argument("table: expected " + std::to_string(size) +
                                  " rows, got " + std::to_string(values_.size()));
    LoadVector n = LoadVector::zeros(caps_.dim());
    std::size_t i = 0;
    do {
      if (values_[i].dim() != caps_.dim() || !values_[i].dominated_by(n))
        throw std::invalid_argument("table: non-contractive row at " + n.to_string());
      ++i;
    } while (next_in_box(n, caps_));
  }

  int dim() const override { return caps_.dim(); }

  LoadVector eval(const LoadVector& n) const override {
    if (!n.dominated_by(caps_)) {
      if (!saturating_)
        throw std::domain_error("table: load " + n.to_string() +
                                " outside box with caps " + caps_.to_string());
      // Equivalence-class clamping: the stored value is contractive with
      // respect to the clamped load, hence also to n.
      return values_[index_of(n.clamped(caps_))];
    }
    return values_[index_of(n)];
  }

  const LoadVector& caps() const { return caps_; }
  bool saturating() const { return saturating_; }

 private:
  std::size_t index_of(const LoadVector& n) const {
    std::size_t idx = 0;
    for (int k = 0; k < caps_.dim(); ++k)
      idx = idx * static_cast<std::size_t>(caps_[k] + 1) +
            static_cast<std::size_t>(n[k]);
    return idx;
  }

  LoadVector caps_;
  std::vector<LoadVector> values_;
  bool saturating_;
};

class ComplementNode final : public EvalNode {
 public:
  explicit ComplementNode(std::shared_ptr<const EvalNode> inner)
      : inner_(std::move(inner)) {}
  int dim() const override { return inner_->dim(); }
  LoadVector eval(const LoadVector& n) const override {
    return n.minus(inner_->eval(n));
  }
  const std::shared_ptr<const EvalNode>& inner() const { return inner_; }

 private:
  std::shared_ptr<const EvalNode> inner_;
};

class MinNode final : public EvalNode {
 public:
  MinNode(std::shared_ptr<const EvalNode> f, std::shared_ptr<const EvalNode> g)
      : f_(std::move(f)), g_(std::move(g)) {}
  int dim() const override { return f_->dim(); }
  LoadVector eval(const LoadVector& n) const override {
    return f_->eval(n).cwise_min(g_->eval(n));
  }

 private:
  std::shared_ptr<const EvalNode> f_, g_;
};

class ComposeNode final : public EvalNode {
 public:
  ComposeNode(std::shared_ptr<const EvalNode> f, std::shared_ptr<const EvalNode> g)
      : f_(std::move(f)), g_(std::move(g)) {}
  int dim() const override { return f_->dim(); }
  LoadVector eval(const LoadVector& n) const override {
    return f_->eval(g_->eval(n));
  }

 private:
  std::shared_ptr<const EvalNode> f_, g_;
};

class ParallelNode final : public EvalNode {
 public:
  ParallelNode(std::shared_ptr<const EvalNode> f, std::shared_ptr<const EvalNode> g)
      : f_(std::move(f)), g_(std::move(g)) {}
  int dim() const override { return f_->dim() + g_->dim(); }
  LoadVector eval(const LoadVector& n) const override {
    return f_->eval(n.head(f_->dim())).concat(g_->eval(n.tail(g_->dim())));
  }

 private:
  std::shared_ptr<const EvalNode> f_, g_;
};

class ClosureNode final : public EvalNode {
 public:
  explicit ClosureNode(std::shared_ptr<const EvalNode> inner)
      : inner_(std::move(inner)) {}
  int dim() const override { return inner_->dim(); }

  LoadVector eval(const LoadVector& n) const override {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(n);
      if (it != memo_.end()) return it->second;
    }
    // Each non-terminal step strictly decreases the total, so the fixed
    // point is reached within 1 + total(n) iterations.
    LoadVector current = n;
    const int max_steps = n.total() + 1;
    for (int step = 0; step < max_steps; ++step) {
      LoadVector next = inner_->eval(current);
      if (next == current) break;
      if (!next.dominated_by(current))
        throw std::logic_error("closure: iterate increased at " + current.to_string());
      current = std::move(next);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(n, current);
    return current;
  }

 private:
  std::shared_ptr<const EvalNode> inner_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<LoadVector, LoadVector, LoadVectorHash> memo_;
};

void check_same_dim(const EvalNode& f, const EvalNode& g) {
  if (f.dim() != g.dim())
    throw std::invalid_argument("evaluator dimension mismatch: " +
                                std::to_string(f.dim()) + " vs " +
                                std::to_string(g.dim()));
}

}  // namespace
}  // namespace detail

VerificationBox::VerificationBox(LoadVector upper) : upper_(std::move(upper)) {
  grid_size_ = 1;
  for (int k = 0; k < upper_.dim(); ++k) grid_size_ *= upper_[k] + 1;
}

SuccessEvaluator::SuccessEvaluator(std::shared_ptr<const detail::EvalNode> node)
    : node_(std::move(node)) {}

int SuccessEvaluator::dim() const { return node_->dim(); }

LoadVector SuccessEvaluator::operator()(const LoadVector& n) const {
  if (n.dim() != node_->dim())
    throw std::invalid_argument("evaluate: load has dimension " +
                                std::to_string(n.dim()) + ", evaluator has " +
                                std::to_string(node_->dim()));
  return node_->eval(n);
}

SuccessEvaluator SuccessEvaluator::with_properties(const PropertyReport& report) const {
  SuccessEvaluator out = *this;
  if (report.contractive) {
    out.monotone_failure_ = out.monotone_failure_ || report.monotone_failure;
    out.all_or_nothing_ = out.all_or_nothing_ || report.all_or_nothing;
  }
  return out;
}

SuccessEvaluator SuccessEvaluator::from_function(
    int dim, std::string name, std::function<LoadVector(const LoadVector&)> rule) {
  if (dim < 1) throw std::invalid_argument("evaluator dimension must be >= 1");
  return SuccessEvaluator(std::make_shared<detail::FunctionNode>(
      dim, std::move(name), std::move(rule)));
}

SuccessEvaluator SuccessEvaluator::from_table(LoadVector caps,
                                              std::vector<LoadVector> values,
                                              bool saturating) {
  return SuccessEvaluator(std::make_shared<detail::TableNode>(
      std::move(caps), std::move(values), saturating));
}

SuccessEvaluator SuccessEvaluator::identity(int dim) {
  return from_function(dim, "identity", [](const LoadVector& n) { return n; });
}

std::optional<LoadVector> SuccessEvaluator::table_caps() const {
  if (auto* t = dynamic_cast<const detail::TableNode*>(node_.get()))
    return t->caps();
  return std::nullopt;
}

bool SuccessEvaluator::table_saturating() const {
  if (auto* t = dynamic_cast<const detail::TableNode*>(node_.get()))
    return t->saturating();
  return false;
}

SuccessEvaluator complement(const SuccessEvaluator& f) {
  // c is an involution; unwrap instead of stacking nodes.
  if (auto* c = dynamic_cast<const detail::ComplementNode*>(f.node_.get()))
    return SuccessEvaluator(c->inner());
  return SuccessEvaluator(std::make_shared<detail::ComplementNode>(f.node_));
}

SuccessEvaluator minimum(const SuccessEvaluator& f, const SuccessEvaluator& g) {
  detail::check_same_dim(*f.node_, *g.node_);
  return SuccessEvaluator(std::make_shared<detail::MinNode>(f.node_, g.node_));
}

SuccessEvaluator compose(const SuccessEvaluator& f, const SuccessEvaluator& g) {
  detail::check_same_dim(*f.node_, *g.node_);
  return SuccessEvaluator(std::make_shared<detail::ComposeNode>(f.node_, g.node_));
}

SuccessEvaluator closure(const SuccessEvaluator& f) {
  return SuccessEvaluator(std::make_shared<detail::ClosureNode>(f.node_));
}

SuccessEvaluator parallel(const SuccessEvaluator& f, const SuccessEvaluator& g) {
  SuccessEvaluator out(std::make_shared<detail::ParallelNode>(f.node_, g.node_));
  PropertyReport carried;
  carried.contractive = true;
  carried.monotone_failure =
      f.monotone_failure_verified() && g.monotone_failure_verified();
  carried.all_or_nothing =
      f.all_or_nothing_verified() && g.all_or_nothing_verified();
  return out.with_properties(carried);
}

namespace {

// Def. 3 clause (i) at one load: every class decodes all or nothing.
bool all_or_nothing_at(const LoadVector& n, const LoadVector& phi, int* bad_class) {
  for (int k = 0; k < n.dim(); ++k) {
    if (phi[k] != 0 && phi[k] != n[k]) {
      *bad_class = k;
      return false;
    }
  }
  return true;
}

}  // namespace

PropertyReport verify_properties(const SuccessEvaluator& f,
                                 const VerificationBox& box) {
  if (f.dim() != box.upper().dim())
    throw std::invalid_argument("verify_properties: box dimension mismatch");

  PropertyReport report;
  report.contractive = true;
  report.monotone_failure = true;
  report.all_or_nothing = true;

  const LoadVector& upper = box.upper();
  const int K = f.dim();

  LoadVector n = LoadVector::zeros(K);
  do {
    LoadVector phi;
    try {
      phi = f(n);
    } catch (const std::exception& e) {
      report.contractive = false;
      if (!report.contractive_violation)
        report.contractive_violation = std::string("evaluation failed at ") +
                                       n.to_string() + ": " + e.what();
      break;
    }
    if (report.contractive && !phi.dominated_by(n)) {
      report.contractive = false;
      report.contractive_violation =
          "phi" + n.to_string() + " = " + phi.to_string() + " exceeds the load";
    }
    int bad_class = -1;
    if (report.all_or_nothing && !all_or_nothing_at(n, phi, &bad_class)) {
      report.all_or_nothing = false;
      report.all_or_nothing_violation =
          "phi_" + std::to_string(bad_class + 1) + n.to_string() + " = " +
          std::to_string(phi[bad_class]) + " is neither 0 nor the load";
    }

    // Covering pairs n <= n + e_j.
    for (int j = 0; j < K; ++j) {
      if (n[j] >= upper[j]) continue;
      std::vector<int> up = n.counts();
      ++up[j];
      LoadVector m(std::move(up));
      LoadVector phi_m = f(m);
      LoadVector fail_n = n.minus(n.cwise_min(phi));   // phi^c(n), safe even
      LoadVector fail_m = m.minus(m.cwise_min(phi_m)); // if contractivity failed
      if (report.monotone_failure && !fail_n.dominated_by(fail_m)) {
        report.monotone_failure = false;
        report.monotone_violation = "phi^c" + n.to_string() + " = " +
                                    fail_n.to_string() + " exceeds phi^c" +
                                    m.to_string() + " = " + fail_m.to_string();
      }
      if (report.all_or_nothing) {
        for (int k = 0; k < K; ++k) {
          // On-off: "on" (full decode) propagates downward, "off" (a failing
          // class with packets present) propagates upward.
          bool on_at_m = phi_m[k] == m[k];
          bool off_at_n = phi[k] == 0 && n[k] > 0;
          if ((on_at_m && phi[k] != n[k]) || (off_at_n && phi_m[k] != 0)) {
            report.all_or_nothing = false;
            report.all_or_nothing_violation =
                "on-off violated for class " + std::to_string(k + 1) +
                " between " + n.to_string() + " and " + m.to_string();
            break;
          }
        }
      }
    }
  } while (next_in_box(n, upper));

  if (!report.contractive) {
    // Downstream flags are only meaningful for members of the function class.
    report.monotone_failure = false;
    report.all_or_nothing = false;
  }
  return report;
}

void save_table_csv(const SuccessEvaluator& f, const LoadVector& caps,
                    std::ostream& out) {
  if (f.dim() != caps.dim())
    throw std::invalid_argument("save_table_csv: caps dimension mismatch");
  const int K = caps.dim();
  for (int k = 1; k <= K; ++k) out << "n_" << k << ",";
  for (int k = 1; k <= K; ++k) out << "phi_" << k << (k == K ? "" : ",");
  out << "\n";
  LoadVector n = LoadVector::zeros(K);
  do {
    LoadVector phi = f(n);
    for (int k = 0; k < K; ++k) out << n[k] << ",";
    for (int k = 0; k < K; ++k) out << phi[k] << (k == K - 1 ? "" : ",");
    out << "\n";
  } while (next_in_box(n, caps));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

SuccessEvaluator load_table_csv(std::istream& in, bool saturating) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("table csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.size() % 2 != 0)
    throw std::runtime_error("table csv: malformed header");
  const int K = static_cast<int>(header.size()) / 2;
  for (int k = 0; k < K; ++k) {
    if (header[k] != "n_" + std::to_string(k + 1) ||
        header[K + k] != "phi_" + std::to_string(k + 1))
      throw std::runtime_error("table csv: unexpected header column '" +
                               header[k] + "'");
  }

  std::vector<LoadVector> loads;
  std::vector<LoadVector> values;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != 2 * K)
      throw std::runtime_error("table csv: row with wrong field count");
    std::vector<int> n(K), phi(K);
    for (int k = 0; k < K; ++k) {
      n[k] = std::stoi(fields[k]);
      phi[k] = std::stoi(fields[K + k]);
    }
    loads.emplace_back(std::move(n));
    values.emplace_back(std::move(phi));
  }
  if (loads.empty()) throw std::runtime_error("table csv: no rows");

  // Rows must be the full box in lexicographic order; the caps are the last row.
  const LoadVector caps = loads.back();
  LoadVector expected = LoadVector::zeros(K);
  std::size_t i = 0;
  do {
    if (i >= loads.size() || !(loads[i] == expected))
      throw std::runtime_error("table csv: rows are not the lexicographic box");
    ++i;
  } while (next_in_box(expected, caps));
  if (i != loads.size())
    throw std::runtime_error("table csv: extra rows after the box");

  return SuccessEvaluator::from_table(caps, std::move(values), saturating);
}

}  // namespace sic
