#pragma once

#include "nradii/series.hpp"

namespace nradii {

/// The three normalizations of N carrying the usual f(0) = f'(0) - 1 = 0
/// structure: f = (const * N)^(1/nu), g = const * z^(1-nu) * N(z),
/// h = const * z^(1-nu/2) * N(sqrt(z)).
enum class Normalization { f, g, h };

enum class RadiusKind { starlike, convex };

std::string_view normalization_name(Normalization n) noexcept;
Normalization normalization_from_name(std::string_view name);
std::string_view radius_kind_name(RadiusKind k) noexcept;
RadiusKind radius_kind_from_name(std::string_view name);

struct RadiusQuery {
    Normalization norm = Normalization::g;
    RadiusKind kind = RadiusKind::starlike;
    double beta = 0.0;  ///< order, in [0,1)
};

struct RadiusResult {
    double radius = 0.0;
    double bracket_lo = 0.0;  ///< certified sign-change interval
    double bracket_hi = 0.0;
    double residual = 0.0;    ///< defining function at `radius`
    double upper_limit = 0.0; ///< first-zero ceiling of the solve interval
};

/// Radius of starlikeness of order beta. Solves, by bisection to 1e-10
/// absolute, the strictly decreasing equations
///   f: (1/nu) zN'/N = beta              on (0, lambda_1)      [nu != 0]
///   g: (1-nu) + zN'/N = beta            on (0, lambda_1)
///   h: (1-nu/2) + zN'/N(sqrt r)/2 = beta  on (0, lambda_1^2), plain variable
RadiusResult starlike_radius(const EvaluationContext& ctx, Normalization norm,
                             double beta);

/// Radius of convexity of order beta. Solves
///   f: 1 + zN''/N' + (1/nu - 1) zN'/N = beta  on (0, lambda'_1)
///      [nu above threshold and nu != 0]
///   g: 1 + r gprime'(r)/gprime(r) = beta      on (0, delta_1)
///   h: 1 + r hprime'(r)/hprime(r) = beta      on (0, gamma_1), plain variable
/// For beta = 0 the g root is the first zero of (z g')' and the h root the
/// first zero of (z h')'.
RadiusResult convex_radius(const EvaluationContext& ctx, Normalization norm,
                           double beta);

RadiusResult solve_radius(const EvaluationContext& ctx, const RadiusQuery& q);

/// Left-hand side of the defining equation minus beta, exposed for plotting
/// and for the monotonicity property tests. r must lie inside the query's
/// solve interval.
double defining_function(const EvaluationContext& ctx, const RadiusQuery& q,
                         double r);

}  // namespace nradii
