#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nradii/series.hpp"

namespace nradii {

/// The two closed-form Rayleigh sums over the psi zeros lambda_n:
///   first  = sum 1/lambda^2 = Q(nu+2) / (4(nu+1)Q(nu))
///   second = sum 1/lambda^4
///          = [Q^2(nu+2)/((nu+1)Q(nu)) - Q(nu+4)/(nu+2)] / (16(nu+1)Q(nu))
std::pair<double, double> rayleigh_sums(const EvaluationContext& ctx);

/// Euler-Rayleigh power sums of the reciprocal zeros of one family,
/// S_k = sum zero^(-e*k) with e = 2 for squared-convention families and 1
/// for plain ones. `newton` is the source of truth (Newton's identities on
/// the series coefficients); `published` holds the published closed forms for
/// k <= 3 (NaN beyond) for cross-checking -- several of them carry typos,
/// see published_form_audit().
struct EulerRayleighSums {
    FamilyKind kind = FamilyKind::gprime;
    std::vector<double> newton;  ///< k = 1..kmax at index k-1
    std::vector<double> published;
    bool precision_loss = false;
};

/// kmax <= 12; beyond that binary64 cancellation dominates. precision_loss
/// is set when the Newton recurrence cancels more than six orders.
EulerRayleighSums coefficient_sums(const SeriesFamily& family, int kmax);

/// The four first-zero targets the Euler-Rayleigh brackets apply to; each is
/// the beta = 0 radius of the matching problem.
enum class BoundTarget { starlike_g, starlike_h, convex_g, convex_h };

std::string_view bound_target_name(BoundTarget t) noexcept;
BoundTarget bound_target_from_name(std::string_view name);
FamilyKind bound_target_family(BoundTarget t) noexcept;

struct BoundBracket {
    int k = 0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Brackets on the target radius for k = 1..kmax, nested in k:
///   lower_k = S_k^(-1/(e k)),
///   upper_k = (S_{k-1}/S_k)^(1/e)   (k >= 2; k = 1 uses S_1/S_2).
/// plus the k-independent Kreyszig-Todd ceiling for the starlike targets
/// (one over sqrt of twice the inverse-square sum for g, its plain inverse for h).
struct BoundBracketSet {
    BoundTarget target = BoundTarget::starlike_g;
    std::vector<BoundBracket> brackets;
    std::optional<double> kreyszig_todd;
    bool precision_loss = false;
};

BoundBracketSet bound_brackets(const EvaluationContext& ctx, BoundTarget target,
                               int kmax = 4);

/// One row of the published-closed-form audit.
struct AuditEntry {
    std::string name;        ///< e.g. "omega_2"
    double published_value = 0;  ///< the formula exactly as published
    double newton_value = 0; ///< Newton-identity consistent value
    bool match = false;      ///< within 1e-12 relative
    std::string note;
};

/// Tabulates published closed forms against the Newton-identity values for
/// sigma/rho/kappa/omega (k <= 3) plus the two Kreyszig-Todd constants and
/// the k=1 lower-bound display for starlike h. Deterministic ordering.
std::vector<AuditEntry> published_form_audit(const EvaluationContext& ctx);

/// Fixed-format text report of the audit (one line per entry).
std::string format_audit_report(const EvaluationContext& ctx);

}  // namespace nradii
