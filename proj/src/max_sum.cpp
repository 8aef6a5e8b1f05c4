#include "sic/max_sum.hpp"

#include <stdexcept>
#include <string>

namespace sic {

namespace {

struct PassResult {
  MaxSumState state;
  bool any_decoded = false;
};

// One synchronous pass of Steps 1-3. Classes with zero residual load carry no
// packets; they are excluded from messaging and from the termination test.
PassResult run_pass(const BipartiteTopology& h, int d, const LoadVector& residual,
                    int iteration) {
  const int K = h.external_classes();
  const int T = h.receivers();

  // Step 2 precomputation: incoming sum per receiver.
  std::vector<long long> sums(static_cast<std::size_t>(T), 0);
  for (int t = 0; t < T; ++t) {
    for (int k : h.classes_of(t)) sums[t] += residual[k];
  }

  PassResult result;
  result.state.iteration = iteration;
  result.state.sent.resize(static_cast<std::size_t>(K));
  result.state.returned.resize(static_cast<std::size_t>(K));

  std::vector<int> next(static_cast<std::size_t>(K), 0);
  for (int k = 0; k < K; ++k) {
    const auto& bk = h.receivers_of(k);
    auto& sent = result.state.sent[k];
    auto& returned = result.state.returned[k];
    sent.assign(bk.size(), 0);
    returned.assign(bk.size(), 0);
    if (residual[k] == 0) continue;
    int best = 0;
    for (std::size_t j = 0; j < bk.size(); ++j) {
      sent[j] = residual[k];
      returned[j] = sums[bk[j]] <= d ? residual[k] : 0;
      best = std::max(best, returned[j]);
    }
    if (best > 0) {
      result.any_decoded = true;
      next[k] = 0;
    } else {
      next[k] = residual[k];
    }
  }
  result.state.residual = LoadVector(std::move(next));
  return result;
}

}  // namespace

std::vector<MaxSumState> max_sum_trace(const BipartiteTopology& h, int d,
                                       const LoadVector& n) {
  if (d < 1) throw std::invalid_argument("max_sum: d must be >= 1");
  if (n.dim() != h.external_classes())
    throw std::invalid_argument("max_sum: load dimension mismatch");

  std::vector<MaxSumState> trace;
  LoadVector residual = n;
  const int max_passes = n.total() + 1;
  for (int i = 1; i <= max_passes; ++i) {
    PassResult pass = run_pass(h, d, residual, i);
    residual = pass.state.residual;
    trace.push_back(std::move(pass.state));
    if (!pass.any_decoded) return trace;
  }
  throw std::logic_error("max_sum: did not terminate within total(n)+1 passes");
}

LoadVector max_sum_decode(const BipartiteTopology& h, int d, const LoadVector& n) {
  const auto trace = max_sum_trace(h, d, n);
  return n.minus(trace.back().residual);
}

ClassEnumeration::ClassEnumeration(int classes, int d, long long limit) {
  if (classes < 1) throw std::invalid_argument("enumeration: classes must be >= 1");
  if (d < 1) throw std::invalid_argument("enumeration: d must be >= 1");
  caps_ = LoadVector(std::vector<int>(static_cast<std::size_t>(classes), d + 1));
  size_ = 1;
  for (int k = 0; k < classes; ++k) {
    size_ *= d + 2;
    if (size_ > limit)
      throw std::runtime_error("enumeration: (D+2)^K exceeds the limit of " +
                               std::to_string(limit) + " classes");
  }
}

ClassEnumeration::iterator::iterator(LoadVector caps, bool done)
    : caps_(std::move(caps)),
      current_(LoadVector::zeros(caps_.dim())),
      done_(done) {}

ClassEnumeration::iterator& ClassEnumeration::iterator::operator++() {
  if (!next_in_box(current_, caps_)) done_ = true;
  return *this;
}

SuccessEvaluator build_success_table(const BipartiteTopology& h, int d,
                                     long long limit) {
  ClassEnumeration classes(h.external_classes(), d, limit);
  std::vector<LoadVector> values;
  values.reserve(static_cast<std::size_t>(classes.size()));
  for (const LoadVector& n : classes)
    values.push_back(max_sum_decode(h, d, n));
  auto table = SuccessEvaluator::from_table(classes.caps(), std::move(values),
                                            /*saturating=*/true);
  PropertyReport report = verify_properties(table, VerificationBox(classes.caps()));
  if (!report.contractive || !report.monotone_failure || !report.all_or_nothing)
    throw std::logic_error("build_success_table: network table failed verification");
  return table.with_properties(report);
}

}  // namespace sic
