#include "nradii/series.hpp"

#include <cmath>
#include <sstream>

namespace nradii {

std::string_view family_name(FamilyKind k) noexcept {
    switch (k) {
        case FamilyKind::psi: return "psi";
        case FamilyKind::psi1: return "psi1";
        case FamilyKind::gprime: return "gprime";
        case FamilyKind::hprime: return "hprime";
        case FamilyKind::delta: return "delta";
        case FamilyKind::theta: return "theta";
    }
    return "?";
}

FamilyKind family_from_name(std::string_view name) {
    for (FamilyKind k : {FamilyKind::psi, FamilyKind::psi1, FamilyKind::gprime,
                         FamilyKind::hprime, FamilyKind::delta, FamilyKind::theta})
        if (name == family_name(k)) return k;
    throw InvalidParameters("unknown series family: " + std::string(name));
}

SeriesFamily::SeriesFamily(EvaluationContext context, FamilyKind kind)
    : context_(std::move(context)), kind_(kind) {
    if (kind_ == FamilyKind::psi1 && context_.nu() == 0.0)
        throw InvalidParameters("psi1 normalization divides by nu; nu = 0 rejected");
}

double SeriesFamily::coefficient(std::size_t n) const {
    const double base = context_.base_term(n);
    const double dn = static_cast<double>(n);
    switch (kind_) {
        case FamilyKind::psi: return base;
        case FamilyKind::psi1:
            return (2.0 * dn + context_.nu()) / context_.nu() * base;
        case FamilyKind::gprime: return (2.0 * dn + 1.0) * base;
        case FamilyKind::hprime: return (dn + 1.0) * base;
        // Apply the squared weights as w*(w*base) so the derivative
        // identities delta_n = (2n+1)*gprime_n and theta_n = (n+1)*hprime_n
        // hold bit-for-bit, not just to rounding.
        case FamilyKind::delta: {
            const double w = 2.0 * dn + 1.0;
            return w * (w * base);
        }
        case FamilyKind::theta: {
            const double w = dn + 1.0;
            return w * (w * base);
        }
    }
    return 0.0;
}

namespace {

template <class Scalar>
struct Summation {
    Scalar value{};
    int terms = 0;
    bool cancellation = false;
};

double family_weight(FamilyKind kind, double n, double nu) {
    switch (kind) {
        case FamilyKind::psi: return 1.0;
        case FamilyKind::psi1: return (2.0 * n + nu) / nu;
        case FamilyKind::gprime: return 2.0 * n + 1.0;
        case FamilyKind::hprime: return n + 1.0;
        case FamilyKind::delta: return (2.0 * n + 1.0) * (2.0 * n + 1.0);
        case FamilyKind::theta: return (n + 1.0) * (n + 1.0);
    }
    return 0.0;
}

// Kahan-compensated sum of weight(n) * base_n * t^n, optionally scaled by
// the z-exponent k_n of term n (z d/dz form). base_n * t^n is carried by its
// term-to-term ratio: t^n alone overflows long before the terms themselves
// leave binary64 range. Stops after two consecutive terms below
// tolerance * |sum| once n has passed |t|/4.
template <class Scalar>
Summation<Scalar> accumulate(const SeriesFamily& fam, Scalar t, bool z_ddz) {
    const EvaluationContext& ctx = fam.context();
    const EvaluationPolicy& pol = ctx.policy();
    const bool squared = squared_argument(fam.kind());
    const double n_floor = std::abs(t) / 4.0;

    Summation<Scalar> out;
    Scalar sum{};
    Scalar comp{};
    Scalar base_pow{1.0};  // base_term(n) * t^n
    double max_mag = 0.0;
    int small_streak = 0;

    for (int n = 0; n < pol.max_terms; ++n) {
        const double k_n = squared ? 2.0 * n : 1.0 * n;
        double w = family_weight(fam.kind(), static_cast<double>(n), ctx.nu());
        if (z_ddz) w *= k_n;
        const Scalar term = w * base_pow;

        const Scalar y = term - comp;
        const Scalar s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;

        out.terms = n + 1;
        max_mag = std::max(max_mag, std::abs(sum));

        if (std::abs(term) <= pol.tolerance * std::abs(sum))
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 2 && n > n_floor) {
            out.value = sum;
            out.cancellation = max_mag > 1e6 * std::abs(sum);
            return out;
        }

        base_pow *= t * ctx.base_ratio(static_cast<std::size_t>(n));
    }
    std::ostringstream msg;
    msg << "series did not converge within " << pol.max_terms << " terms ("
        << family_name(fam.kind()) << ", |t| = " << std::abs(t) << ")";
    throw TruncationFailure(msg.str());
}

template <class Scalar>
void check_domain(const SeriesFamily& fam, Scalar z) {
    if (std::abs(z) > fam.context().policy().domain_cap) {
        std::ostringstream msg;
        msg << "|z| = " << std::abs(z) << " beyond domain cap "
            << fam.context().policy().domain_cap;
        throw InvalidParameters(msg.str());
    }
}

}  // namespace

RatioValue SeriesFamily::eval(double z) const {
    check_domain(*this, z);
    const double t = squared_argument(kind_) ? z * z : z;
    auto s = accumulate<double>(*this, t, false);
    return {s.value, s.terms, s.cancellation};
}

ComplexRatioValue SeriesFamily::eval(std::complex<double> z) const {
    check_domain(*this, z);
    const std::complex<double> t = squared_argument(kind_) ? z * z : z;
    auto s = accumulate<std::complex<double>>(*this, t, false);
    return {s.value, s.terms, s.cancellation};
}

RatioValue SeriesFamily::eval_zdz(double z) const {
    check_domain(*this, z);
    const double t = squared_argument(kind_) ? z * z : z;
    auto s = accumulate<double>(*this, t, true);
    return {s.value, s.terms, s.cancellation};
}

ComplexRatioValue SeriesFamily::eval_zdz(std::complex<double> z) const {
    check_domain(*this, z);
    const std::complex<double> t = squared_argument(kind_) ? z * z : z;
    auto s = accumulate<std::complex<double>>(*this, t, true);
    return {s.value, s.terms, s.cancellation};
}

namespace {
constexpr double kDenominatorFloor = 1e-300;
}

RatioValue log_deriv_n(const EvaluationContext& ctx, double z) {
    SeriesFamily psi(ctx, FamilyKind::psi);
    const RatioValue den = psi.eval(z);
    if (std::abs(den.value) < kDenominatorFloor)
        throw ZeroDenominator("psi(z) vanished in z N'/N");
    const RatioValue num = psi.eval_zdz(z);
    return {ctx.nu() + num.value / den.value,
            std::max(num.terms_used, den.terms_used),
            num.cancellation || den.cancellation};
}

ComplexRatioValue log_deriv_n(const EvaluationContext& ctx,
                              std::complex<double> z) {
    SeriesFamily psi(ctx, FamilyKind::psi);
    const ComplexRatioValue den = psi.eval(z);
    if (std::abs(den.value) < kDenominatorFloor)
        throw ZeroDenominator("psi(z) vanished in z N'/N");
    const ComplexRatioValue num = psi.eval_zdz(z);
    return {ctx.nu() + num.value / den.value,
            std::max(num.terms_used, den.terms_used),
            num.cancellation || den.cancellation};
}

RatioValue log_deriv_np(const EvaluationContext& ctx, double z) {
    SeriesFamily psi1(ctx, FamilyKind::psi1);
    const RatioValue den = psi1.eval(z);
    if (std::abs(den.value) < kDenominatorFloor)
        throw ZeroDenominator("psi1(z) vanished in z N''/N'");
    const RatioValue num = psi1.eval_zdz(z);
    return {(ctx.nu() - 1.0) + num.value / den.value,
            std::max(num.terms_used, den.terms_used),
            num.cancellation || den.cancellation};
}

}  // namespace nradii
