#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sic/load_vector.hpp"

namespace sic {

namespace detail {
class EvalNode;
}

/// Outcome of an exhaustive property check over a finite box. A property is
/// reported true only if it held at every grid point (or covering pair); the
/// first violation found is described in the matching message.
struct PropertyReport {
  bool contractive = false;
  bool monotone_failure = false;
  bool all_or_nothing = false;
  std::optional<std::string> contractive_violation;
  std::optional<std::string> monotone_violation;
  std::optional<std::string> all_or_nothing_violation;
};

/// Finite grid {0..u_1} x ... x {0..u_K} over which property checks run
/// exhaustively. The grid size is computed (and can be inspected) before any
/// enumeration starts.
class VerificationBox {
 public:
  explicit VerificationBox(LoadVector upper);
  const LoadVector& upper() const { return upper_; }
  long long grid_size() const { return grid_size_; }

 private:
  LoadVector upper_;
  long long grid_size_;
};

/**
 * An immutable success function: a deterministic map n -> phi(n) on packet
 * loads with phi(n) <= n componentwise.
 *
 * Evaluators are composites evaluated on demand — closed-form rules, finite
 * lookup tables with explicit per-class caps, or combinations built by the
 * operations below. No global tabulation is ever materialized; a query at
 * load n only touches loads dominated by n.
 *
 * Saturating tables clamp queries to their caps (equivalence-class
 * semantics); non-saturating tables reject out-of-box queries with
 * std::domain_error so modeling mistakes surface.
 *
 * The monotone-failure and all-or-nothing flags are metadata, set only after
 * verification: either via verify_properties() + with_properties() over a
 * caller-chosen box, or by constructors and combinators whose output provably
 * has the property. Instances are immutable and safe to share across
 * threads; closure memoization is internally synchronized.
 */
class SuccessEvaluator {
 public:
  int dim() const;

  /// Evaluates phi(n). Throws std::invalid_argument on dimension mismatch,
  /// std::domain_error on an out-of-box query against a non-saturating table.
  LoadVector operator()(const LoadVector& n) const;

  bool monotone_failure_verified() const { return monotone_failure_; }
  bool all_or_nothing_verified() const { return all_or_nothing_; }

  /// Copy of this evaluator carrying the flags established by a verification
  /// report (flags are never set from a report that failed contractivity).
  SuccessEvaluator with_properties(const PropertyReport& report) const;

  /// Closed-form rule. Contractivity of the rule is checked at every
  /// evaluation; a violating rule raises std::logic_error.
  static SuccessEvaluator from_function(
      int dim, std::string name,
      std::function<LoadVector(const LoadVector&)> rule);

  /// Table over the box {0..cap_1} x ... x {0..cap_K}. `values` holds phi(n)
  /// for every load in the box in lexicographic order and is validated for
  /// contractivity up front.
  static SuccessEvaluator from_table(LoadVector caps,
                                     std::vector<LoadVector> values,
                                     bool saturating);

  /// The identity element for minimum and composition.
  static SuccessEvaluator identity(int dim);

  // Table introspection; nullopt / false unless table-backed.
  std::optional<LoadVector> table_caps() const;
  bool table_saturating() const;

 private:
  explicit SuccessEvaluator(std::shared_ptr<const detail::EvalNode> node);
  std::shared_ptr<const detail::EvalNode> node_;
  bool monotone_failure_ = false;
  bool all_or_nothing_ = false;

  friend SuccessEvaluator complement(const SuccessEvaluator&);
  friend SuccessEvaluator minimum(const SuccessEvaluator&,
                                  const SuccessEvaluator&);
  friend SuccessEvaluator compose(const SuccessEvaluator&,
                                  const SuccessEvaluator&);
  friend SuccessEvaluator closure(const SuccessEvaluator&);
  friend SuccessEvaluator parallel(const SuccessEvaluator&,
                                   const SuccessEvaluator&);
};

/// f^c with f^c(n) = n - f(n). complement(complement(f)) evaluates
/// identically to f.
SuccessEvaluator complement(const SuccessEvaluator& f);

/// (f ^ g)(n) = componentwise min[f(n), g(n)].
SuccessEvaluator minimum(const SuccessEvaluator& f, const SuccessEvaluator& g);

/// (f o g)(n) = f(g(n)).
SuccessEvaluator compose(const SuccessEvaluator& f, const SuccessEvaluator& g);

/// f*(n): the fixed point of iterating f from n. For contractive f the
/// iterates at a fixed load are non-increasing and integer-valued, so the
/// fixed point is reached within 1 + sum_k n_k steps. Results are memoized
/// per evaluator instance keyed by load.
SuccessEvaluator closure(const SuccessEvaluator& f);

/// Independent juxtaposition: dimension dim(f)+dim(g), f on the leading
/// coordinates and g on the rest. Verified flags carry over when both inputs
/// have them (each block checks its own coordinates only).
SuccessEvaluator parallel(const SuccessEvaluator& f, const SuccessEvaluator& g);

/// Exhaustively checks contractivity, failure monotonicity and the
/// all-or-nothing/on-off properties over the box. Monotonicity and the
/// on-off clause are checked over covering pairs (n, n+e_j), which is
/// equivalent to all ordered pairs by transitivity.
PropertyReport verify_properties(const SuccessEvaluator& f,
                                 const VerificationBox& box);

/// CSV table serialization: header `n_1,...,n_K,phi_1,...,phi_K`, one row per
/// load in the box in lexicographic order. save evaluates f over the box, so
/// it also materializes composite evaluators.
void save_table_csv(const SuccessEvaluator& f, const LoadVector& caps,
                    std::ostream& out);
SuccessEvaluator load_table_csv(std::istream& in, bool saturating);

}  // namespace sic
