#pragma once

#include <string>
#include <vector>

#include "nradii/radii.hpp"
#include "nradii/zeros.hpp"

namespace nradii::oracle {

// Independent brute-force verification used by the test suite and the
// `verify` subcommand. Nothing here shares evaluation paths with the series
// modules: values come from the Bessel-ODE recombination
//     N(z) = (c + a(nu^2 - z^2)) J_nu(z) + (b - a) z J'_nu(z)
// through std::cyl_bessel_j, and ratio samples from locally re-derived
// coefficients, so agreement with the primary path is evidence rather than
// tautology.

/// N, N' and N'' at z > 0 via the J recombination.
double n_value(const CoefficientTriple& k, double nu, double z);
double n_derivative(const CoefficientTriple& k, double nu, double z);
double n_second_derivative(const CoefficientTriple& k, double nu, double z);

/// Value proportional to the requested family at z (same zeros, different
/// normalization). Plain-convention families are evaluated at sqrt(z).
double family_value(const EvaluationContext& ctx, FamilyKind kind, double z);

/// Zero catalog built by scanning the J-form expressions. Not limited by the
/// series domain cap; suitable for the 1000-zero Rayleigh sums.
ZeroCatalog zero_catalog(const EvaluationContext& ctx, FamilyKind kind,
                         std::size_t count, double tol = 1e-12);

/// sum zero^(-power) over the catalog, optionally adding the integral tail
/// under the asymptotic spacing pi of the underlying squared-convention
/// zeros. Requires at least 100 catalog zeros.
double direct_zero_sum(const ZeroCatalog& catalog, int power, bool tail);

struct CircleScan {
    double min_re = 0.0;
    double theta_at_min = 0.0;
    int samples = 0;
};

/// Minimum over the circle |z| = r of Re(z w'(z)/w(z)) for the requested
/// normalization w in {f, g, h}, sampled at `samples` >= 360 angles.
CircleScan sample_min_re_ratio(const EvaluationContext& ctx, Normalization norm,
                               double r, int samples);

struct VerificationReport {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool relative = true;
    bool pass = false;
    std::string notes;
};

/// Central-difference derivative of the family series against its termwise
/// derivative; relative tolerance 1e-6 at the default step 1e-5.
VerificationReport finite_diff_check(const SeriesFamily& family, double z,
                                     double step = 1e-5);

/// The full verification battery for one context: finite differences, the
/// z^nu*psi / psi1 derivative relation, interlacing, Mittag-Leffler
/// log-derivative summation, truncated product reconstruction, the two
/// Rayleigh identities against 1000-zero direct sums, the exact coefficient
/// identities and the circle-minimum location property.
std::vector<VerificationReport> run_verification(const EvaluationContext& ctx);

}  // namespace nradii::oracle
