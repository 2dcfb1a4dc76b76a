#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include "nradii/model.hpp"

namespace nradii {

/// The six normalized entire series derived from N(z) = a z^2 J'' + b z J' + c J.
///
/// With the base term b_n = (-1)^n Q(2n+nu) / (n! 4^n (nu+1)_n Q(nu)):
///
///   psi     sum b_n z^(2n)            normalized N(z)/z^nu; zeros lambda_n
///   psi1    sum (2n+nu)/nu b_n z^(2n) normalized N'(z)/z^(nu-1); zeros lambda'_n
///   gprime  sum (2n+1) b_n z^(2n)     g'(z); zeros delta_n
///   hprime  sum (n+1) b_n z^n         h'(z), plain variable; zeros gamma_n
///   delta   sum (2n+1)^2 b_n z^(2n)   (z g'(z))'; zeros d_n
///   theta   sum (n+1)^2 b_n z^n       (z h'(z))', plain variable; zeros l_n
///
/// psi/psi1/gprime/delta are series in z^2 ("squared convention"),
/// hprime/theta in z ("plain convention"). Coefficient 0 is exactly 1 for
/// every kind and the coefficients alternate in sign for verified contexts.
enum class FamilyKind { psi, psi1, gprime, hprime, delta, theta };

constexpr bool squared_argument(FamilyKind k) noexcept {
    return k == FamilyKind::psi || k == FamilyKind::psi1 ||
           k == FamilyKind::gprime || k == FamilyKind::delta;
}

std::string_view family_name(FamilyKind k) noexcept;
FamilyKind family_from_name(std::string_view name);  // throws InvalidParameters

/// A series or ratio evaluation together with convergence metadata.
/// cancellation set means partial-sum cancellation exceeded 1e6 x the final
/// value; do not trust more than ~10 significant digits then.
struct RatioValue {
    double value = 0.0;
    int terms_used = 0;
    bool cancellation = false;
};

struct ComplexRatioValue {
    std::complex<double> value;
    int terms_used = 0;
    bool cancellation = false;
};

class SeriesFamily {
public:
    /// psi1 requires nu != 0 (its normalization divides by nu).
    SeriesFamily(EvaluationContext context, FamilyKind kind);

    FamilyKind kind() const noexcept { return kind_; }
    const EvaluationContext& context() const noexcept { return context_; }

    /// n-th series coefficient (weight times cached base term).
    double coefficient(std::size_t n) const;

    /// Series value at z. Kahan-compensated; stops once two consecutive
    /// terms fall below tolerance x partial sum and the index has passed
    /// |z|^2/4 (squared convention) resp. |z|/4 (plain). Throws
    /// InvalidParameters beyond the domain cap, TruncationFailure when the
    /// term budget is exhausted.
    RatioValue eval(double z) const;
    ComplexRatioValue eval(std::complex<double> z) const;

    /// z * d/dz of the series at z (branch-free form used by the
    /// logarithmic-derivative ratios).
    RatioValue eval_zdz(double z) const;
    ComplexRatioValue eval_zdz(std::complex<double> z) const;

private:
    EvaluationContext context_;
    FamilyKind kind_;
};

/// z N'(z) / N(z) = nu + z psi'(z)/psi(z). Valid for |z| below the first
/// psi zero on the real line. Throws ZeroDenominator when |psi(z)| < 1e-300.
RatioValue log_deriv_n(const EvaluationContext& ctx, double z);
ComplexRatioValue log_deriv_n(const EvaluationContext& ctx, std::complex<double> z);

/// z N''(z) / N'(z) = (nu - 1) + z psi1'(z)/psi1(z). Requires nu != 0.
RatioValue log_deriv_np(const EvaluationContext& ctx, double z);

}  // namespace nradii
