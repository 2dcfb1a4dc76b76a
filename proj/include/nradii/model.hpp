#pragma once

#include <memory>
#include <optional>

#include "nradii/errors.hpp"

namespace nradii {

/// Parameters (a, b, c) of the combination a z^2 J'' + b z J' + c J.
///
/// The standing admissibility hypothesis is
///     (c = 0 and a != b)  or  (c > 0 and a < b),
/// under which all positive zeros of the combination are real for orders at
/// or above max{0, nu0}. q = b - a is derived, never stored.
struct CoefficientTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double q() const noexcept { return b - a; }
    bool admissible() const noexcept {
        return (c == 0.0 && a != b) || (c > 0.0 && a < b);
    }
    /// Human-readable reason when not admissible, empty string otherwise.
    const char* rejection_reason() const noexcept;
};

/// Q(t) = a t(t-1) + b t + c, the quadratic whose values at 2n+nu weight the
/// series coefficients.
double eval_q(const CoefficientTriple& k, double t) noexcept;

/// Largest real root nu0 of Q and the admissible-order threshold max{0, nu0}.
/// When Q has no real root, nu0 is empty and the threshold degenerates to 0.
struct OrderThreshold {
    std::optional<double> nu0;
    double threshold = 0.0;
};

/// Throws InvalidParameters when the triple is not admissible.
OrderThreshold largest_root(const CoefficientTriple& k);

struct EvaluationPolicy {
    double tolerance = 1e-15;   ///< relative series-truncation bound
    int max_terms = 500;
    double domain_cap = 100.0;  ///< max |z| accepted by series evaluation
    /// Accept orders below the threshold. Zeros are then not guaranteed real
    /// and results carry a warning; see EvaluationContext::verified().
    bool allow_unverified = false;
};

namespace detail {
class BaseTermCache;
}

/// A validated (coefficients, order, policy) triple. Immutable; copies share
/// the coefficient cache and are safe to use from multiple threads.
class EvaluationContext {
public:
    /// Validates: triple admissible, nu >= max{0, nu0} (unless
    /// allow_unverified), Q(nu) != 0. Throws InvalidParameters with the
    /// failing reason otherwise.
    EvaluationContext(CoefficientTriple coeffs, double nu,
                      EvaluationPolicy policy = {});

    const CoefficientTriple& coeffs() const noexcept { return coeffs_; }
    double nu() const noexcept { return nu_; }
    const EvaluationPolicy& policy() const noexcept { return policy_; }
    double threshold() const noexcept { return threshold_; }
    double q_at_nu() const noexcept { return q_nu_; }

    /// False only when the order was accepted through allow_unverified;
    /// downstream results then carry a zeros-not-guaranteed-real warning.
    bool verified() const noexcept { return verified_; }

    /// n-th base series term (-1)^n Q(2n+nu) / (n! 4^n (nu+1)_n Q(nu)),
    /// computed by the ratio recurrence and cached. Thread safe. Underflows
    /// to zero past n ~ 90; summation carries term ratios instead.
    double base_term(std::size_t n) const;

    /// base_term(n+1) / base_term(n) evaluated directly from the recurrence,
    /// = -Q(2n+2+nu) / (4 Q(2n+nu) (n+1) (n+1+nu)). Always representable.
    /// Throws DegenerateCoefficient when Q(2n+nu) vanishes.
    double base_ratio(std::size_t n) const;

private:
    CoefficientTriple coeffs_;
    double nu_;
    EvaluationPolicy policy_;
    double threshold_;
    double q_nu_;
    bool verified_;
    std::shared_ptr<detail::BaseTermCache> cache_;
};

/// Convenience wrapper matching the operation name.
EvaluationContext validate_context(CoefficientTriple coeffs, double nu,
                                   EvaluationPolicy policy = {});

}  // namespace nradii
