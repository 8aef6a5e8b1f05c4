#pragma once

#include <vector>

#include "sic/evaluator.hpp"
#include "sic/topology.hpp"

namespace sic {

/// Slotted ALOHA: one class, phi(1) = 1 and phi(n) = 0 otherwise.
SuccessEvaluator slotted_aloha();

/// D-fold ALOHA: one class, phi(n) = n for n <= d, 0 otherwise. d >= 1.
SuccessEvaluator d_fold(int d);

/// Near-far SIC decoding: two classes, phi(n) = n for n <= (1,1), else (0,0).
SuccessEvaluator near_far();

/// Receiver that decodes nothing (the complement of the identity).
SuccessEvaluator zero_receiver(int dim);

/// Two receivers in tandem: packets decoded by the first stage are removed
/// before the second stage sees the load. Result (psi^c o phi^c)^c, i.e.
/// zeta_k(n) = phi_k(n) + psi_k(n - phi(n)).
SuccessEvaluator tandem(const SuccessEvaluator& phi, const SuccessEvaluator& psi);

/// Two cooperative receivers: SIC decoding alternates between stages until
/// nothing more decodes. Result ((psi^c o phi^c)^*)^c. Order invariance is
/// guaranteed when both receivers have verified monotone failure.
SuccessEvaluator cooperative(const SuccessEvaluator& phi, const SuccessEvaluator& psi);

/// Left fold of pairwise cooperative over three or more receivers.
SuccessEvaluator cooperative(const std::vector<SuccessEvaluator>& receivers);

/// External classes multiplexed into an all-or-nothing receiver through a
/// multiplexing-valid H (each external class feeds at most one internal
/// class): psi_k(n) = n_k when class k's internal class decodes, else 0.
/// Requires phi's all-or-nothing flag; the result is all-or-nothing.
SuccessEvaluator multiplex(const SuccessEvaluator& phi, const BipartiteTopology& h);

/// External classes multicast into an all-or-nothing receiver through a
/// coding-valid H (each internal class serves at most one external class).
/// Builds theta_k(n) = max over t in B_k of phi_t(nH) and returns
/// ((theta^c)^*)^c. Requires phi's all-or-nothing flag; without it the SIC
/// recursion on counts is not valid (decoded copies of different packets
/// cannot be matched up), so the construction is rejected.
SuccessEvaluator packet_code(const SuccessEvaluator& phi, const BipartiteTopology& h);

}  // namespace sic
