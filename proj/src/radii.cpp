#include "nradii/radii.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "nradii/zeros.hpp"

namespace nradii {

std::string_view normalization_name(Normalization n) noexcept {
    switch (n) {
        case Normalization::f: return "f";
        case Normalization::g: return "g";
        case Normalization::h: return "h";
    }
    return "?";
}

Normalization normalization_from_name(std::string_view name) {
    if (name == "f") return Normalization::f;
    if (name == "g") return Normalization::g;
    if (name == "h") return Normalization::h;
    throw InvalidParameters("unknown normalization: " + std::string(name));
}

std::string_view radius_kind_name(RadiusKind k) noexcept {
    return k == RadiusKind::starlike ? "starlike" : "convex";
}

RadiusKind radius_kind_from_name(std::string_view name) {
    if (name == "starlike") return RadiusKind::starlike;
    if (name == "convex") return RadiusKind::convex;
    throw InvalidParameters("unknown radius kind: " + std::string(name));
}

namespace {

constexpr double kSolveTol = 1e-10;  // absolute, in r

void validate_query(const EvaluationContext& ctx, const RadiusQuery& q) {
    if (!(q.beta >= 0.0 && q.beta < 1.0))
        throw InvalidParameters("beta must lie in [0, 1)");
    if (q.norm == Normalization::f) {
        if (ctx.nu() == 0.0)
            throw InvalidParameters(
                "f normalization requires nu != 0 (its log-derivative has a pole)");
        if (q.kind == RadiusKind::convex && !(ctx.nu() > ctx.threshold()))
            throw InvalidParameters(
                "convex radius of f requires nu strictly above the threshold");
    }
}

// Left-hand side minus beta of the defining equation; strictly decreasing
// from 1 - beta at 0+ to -inf at the solve ceiling.
double defining_value(const EvaluationContext& ctx, const RadiusQuery& q,
                      double r) {
    switch (q.kind) {
        case RadiusKind::starlike:
            switch (q.norm) {
                case Normalization::f:
                    return log_deriv_n(ctx, r).value / ctx.nu() - q.beta;
                case Normalization::g:
                    return (1.0 - ctx.nu()) + log_deriv_n(ctx, r).value - q.beta;
                case Normalization::h:
                    return (1.0 - 0.5 * ctx.nu()) +
                           0.5 * log_deriv_n(ctx, std::sqrt(r)).value - q.beta;
            }
            break;
        case RadiusKind::convex:
            switch (q.norm) {
                case Normalization::f:
                    return 1.0 + log_deriv_np(ctx, r).value +
                           (1.0 / ctx.nu() - 1.0) * log_deriv_n(ctx, r).value -
                           q.beta;
                case Normalization::g: {
                    SeriesFamily gp(ctx, FamilyKind::gprime);
                    const double den = gp.eval(r).value;
                    if (std::abs(den) < 1e-300)
                        throw ZeroDenominator("gprime vanished in convexity ratio");
                    return 1.0 + gp.eval_zdz(r).value / den - q.beta;
                }
                case Normalization::h: {
                    SeriesFamily hp(ctx, FamilyKind::hprime);
                    const double den = hp.eval(r).value;
                    if (std::abs(den) < 1e-300)
                        throw ZeroDenominator("hprime vanished in convexity ratio");
                    return 1.0 + hp.eval_zdz(r).value / den - q.beta;
                }
            }
            break;
    }
    throw InvalidParameters("unreachable radius query");
}

double solve_ceiling(const EvaluationContext& ctx, const RadiusQuery& q) {
    switch (q.kind) {
        case RadiusKind::starlike: {
            const double lam1 =
                find_zeros(SeriesFamily(ctx, FamilyKind::psi), 1).zeros[0];
            return q.norm == Normalization::h ? lam1 * lam1 : lam1;
        }
        case RadiusKind::convex: {
            FamilyKind k = FamilyKind::psi1;
            if (q.norm == Normalization::g) k = FamilyKind::gprime;
            if (q.norm == Normalization::h) k = FamilyKind::hprime;
            return find_zeros(SeriesFamily(ctx, k), 1).zeros[0];
        }
    }
    throw InvalidParameters("unreachable radius query");
}

RadiusResult solve(const EvaluationContext& ctx, const RadiusQuery& q) {
    validate_query(ctx, q);
    const double ceiling = solve_ceiling(ctx, q);
    const auto F = [&](double r) { return defining_value(ctx, q, r); };

    // Upper end of the bracket: just below the ceiling, shrinking inward on
    // a vanishing denominator.
    double hi = ceiling * (1.0 - 1e-12);
    double fhi;
    for (int attempt = 0;; ++attempt) {
        try {
            fhi = F(hi);
        } catch (const ZeroDenominator&) {
            hi = ceiling - 2.0 * (ceiling - hi);
            if (attempt > 60 || hi <= 0.0)
                throw Error("could not bracket radius below its ceiling");
            continue;
        }
        if (fhi < 0.0) break;
        hi = ceiling - 0.5 * (ceiling - hi);
        if (attempt > 60)
            throw Error("defining function failed to turn negative below ceiling");
    }

    // Geometric shrink towards 0 where the value tends to 1 - beta > 0.
    double lo = 0.5 * hi;
    double flo = F(lo);
    while (flo <= 0.0) {
        hi = lo;
        fhi = flo;
        lo *= 0.5;
        if (lo < 1e-280) throw Error("could not bracket radius above zero");
        flo = F(lo);
    }

    for (int it = 0; it < 200 && (hi - lo) > kSolveTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }

    RadiusResult out;
    out.radius = 0.5 * (lo + hi);
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.residual = F(out.radius);
    out.upper_limit = ceiling;
    return out;
}

}  // namespace

RadiusResult starlike_radius(const EvaluationContext& ctx, Normalization norm,
                             double beta) {
    return solve(ctx, RadiusQuery{norm, RadiusKind::starlike, beta});
}

RadiusResult convex_radius(const EvaluationContext& ctx, Normalization norm,
                           double beta) {
    return solve(ctx, RadiusQuery{norm, RadiusKind::convex, beta});
}

RadiusResult solve_radius(const EvaluationContext& ctx, const RadiusQuery& q) {
    return solve(ctx, q);
}

double defining_function(const EvaluationContext& ctx, const RadiusQuery& q,
                         double r) {
    validate_query(ctx, q);
    if (!(r > 0.0)) throw InvalidParameters("r must be positive");
    return defining_value(ctx, q, r);
}

}  // namespace nradii
