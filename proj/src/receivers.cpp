#include "sic/receivers.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace sic {

namespace {

// Canonical receivers get their flags from an exhaustive check over a box
// that exercises the on/off boundary; the closed forms are constant beyond it.
SuccessEvaluator verified(SuccessEvaluator f, const LoadVector& box) {
  PropertyReport report = verify_properties(f, VerificationBox(box));
  if (!report.contractive || !report.monotone_failure || !report.all_or_nothing)
    throw std::logic_error("canonical receiver failed its property check");
  return f.with_properties(report);
}

PropertyReport carried_flags(bool monotone, bool all_or_nothing) {
  PropertyReport r;
  r.contractive = true;
  r.monotone_failure = monotone;
  r.all_or_nothing = all_or_nothing;
  return r;
}

}  // namespace

SuccessEvaluator slotted_aloha() { return d_fold(1); }

SuccessEvaluator d_fold(int d) {
  if (d < 1) throw std::invalid_argument("d_fold: d must be >= 1");
  auto f = SuccessEvaluator::from_function(
      1, "d_fold(" + std::to_string(d) + ")", [d](const LoadVector& n) {
        return n[0] <= d ? n : LoadVector{0};
      });
  return verified(f, LoadVector{d + 1});
}

SuccessEvaluator near_far() {
  auto f = SuccessEvaluator::from_function(
      2, "near_far", [](const LoadVector& n) {
        return n.dominated_by(LoadVector{1, 1}) ? n : LoadVector{0, 0};
      });
  return verified(f, LoadVector{2, 2});
}

SuccessEvaluator zero_receiver(int dim) {
  auto f = SuccessEvaluator::from_function(
      dim, "zero", [dim](const LoadVector&) { return LoadVector::zeros(dim); });
  // phi == 0: the failure function is the identity, trivially increasing,
  // and every class is "off" at every load.
  return f.with_properties(carried_flags(true, true));
}

SuccessEvaluator tandem(const SuccessEvaluator& phi, const SuccessEvaluator& psi) {
  if (phi.dim() != psi.dim())
    throw std::invalid_argument("tandem: dimension mismatch");
  SuccessEvaluator zeta = complement(compose(complement(psi), complement(phi)));
  // The tandem failure function is psi^c o phi^c: composition preserves
  // membership in the increasing class, and a residual class under an
  // all-or-nothing second stage still decodes all or nothing.
  bool mono = phi.monotone_failure_verified() && psi.monotone_failure_verified();
  bool aon = phi.all_or_nothing_verified() && psi.all_or_nothing_verified();
  return zeta.with_properties(carried_flags(mono, mono && aon));
}

SuccessEvaluator cooperative(const SuccessEvaluator& phi, const SuccessEvaluator& psi) {
  if (phi.dim() != psi.dim())
    throw std::invalid_argument("cooperative: dimension mismatch");
  SuccessEvaluator eta =
      complement(closure(compose(complement(psi), complement(phi))));
  bool mono = phi.monotone_failure_verified() && psi.monotone_failure_verified();
  bool aon = phi.all_or_nothing_verified() && psi.all_or_nothing_verified();
  return eta.with_properties(carried_flags(mono, mono && aon));
}

SuccessEvaluator cooperative(const std::vector<SuccessEvaluator>& receivers) {
  if (receivers.empty())
    throw std::invalid_argument("cooperative: need at least one receiver");
  SuccessEvaluator acc = receivers.front();
  for (std::size_t i = 1; i < receivers.size(); ++i)
    acc = cooperative(acc, receivers[i]);
  return acc;
}

SuccessEvaluator multiplex(const SuccessEvaluator& phi, const BipartiteTopology& h) {
  if (!h.multiplexing_valid())
    throw std::invalid_argument("multiplex: some external class has more than one edge");
  if (phi.dim() != h.receivers())
    throw std::invalid_argument("multiplex: receiver dimension must match columns of H");
  if (!phi.all_or_nothing_verified())
    throw std::invalid_argument(
        "multiplex: receiver lacks a verified all-or-nothing flag");

  const int K = h.external_classes();
  auto rule = [phi, h, K](const LoadVector& n) {
    LoadVector internal = phi(h.internal_load(n));
    std::vector<int> out(static_cast<std::size_t>(K), 0);
    for (int k = 0; k < K; ++k) {
      for (int t : h.receivers_of(k)) {
        if (internal[t] > 0) out[k] = n[k];
      }
    }
    return LoadVector(std::move(out));
  };
  auto psi = SuccessEvaluator::from_function(K, "multiplex", rule);
  return psi.with_properties(carried_flags(true, true));
}

SuccessEvaluator packet_code(const SuccessEvaluator& phi, const BipartiteTopology& h) {
  if (!h.coding_valid())
    throw std::invalid_argument("packet_code: some internal class has more than one edge");
  if (phi.dim() != h.receivers())
    throw std::invalid_argument("packet_code: receiver dimension must match columns of H");
  if (!phi.all_or_nothing_verified())
    throw std::invalid_argument(
        "packet_code: receiver lacks a verified all-or-nothing flag");

  const int K = h.external_classes();
  auto theta_rule = [phi, h, K](const LoadVector& n) {
    LoadVector internal = phi(h.internal_load(n));
    std::vector<int> out(static_cast<std::size_t>(K), 0);
    for (int k = 0; k < K; ++k) {
      for (int t : h.receivers_of(k)) out[k] = std::max(out[k], internal[t]);
    }
    return LoadVector(std::move(out));
  };
  auto theta = SuccessEvaluator::from_function(K, "packet_code_stage", theta_rule);
  SuccessEvaluator result = complement(closure(complement(theta)));
  return result.with_properties(carried_flags(true, true));
}

}  // namespace sic
