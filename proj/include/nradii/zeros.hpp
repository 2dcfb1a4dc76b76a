#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nradii/series.hpp"

namespace nradii {

/// Ascending positive zeros of one series family, each certified by a sign
/// change and refined by bisection. Zeros of plain-convention families
/// (hprime, theta) live in the plain variable.
struct ZeroCatalog {
    FamilyKind kind = FamilyKind::psi;
    std::vector<double> zeros;
    double refined_tol = 0.0;   ///< absolute bisection tolerance achieved
    double scan_ceiling = 0.0;  ///< largest abscissa scanned
};

/// Scans outward from 0 and bisects every sign change until `count` zeros
/// are found. Squared-convention families are scanned with step
/// min(0.25, pi/2); plain-convention families with a step that tracks the
/// squared spacing of the underlying zeros. Suspected double-zero windows
/// (|f| collapsing without a sign change; possible only under
/// allow_unverified) are rescanned at 1/16 step.
///
/// Throws InvalidParameters (count < 1 or tol < 1e-14) and ScanExhausted
/// when the ceiling -- 10*count*pi in the squared-convention variable,
/// capped by the context's domain_cap -- is reached short of `count`.
ZeroCatalog find_zeros(const SeriesFamily& family, std::size_t count,
                       double tol = 1e-12);

struct InterlacingReport {
    bool pass = false;
    std::size_t pairs_checked = 0;
    std::size_t violation_index = 0;  ///< 1-based k of the first violation
    double lhs = 0.0, rhs = 0.0;      ///< the two values that failed to order
    std::string message;
};

/// Checks the chain lambda'_k < lambda_k < lambda'_{k+1} between a psi
/// catalog and a psi1 catalog of the same context. Report-valued; never
/// throws on a violation.
InterlacingReport interlacing_check(const ZeroCatalog& psi_catalog,
                                    const ZeroCatalog& psi1_catalog);

}  // namespace nradii
