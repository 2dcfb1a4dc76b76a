#include "nradii/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nradii {

namespace {

constexpr double kPi = std::numbers::pi;

double series_at(const SeriesFamily& fam, double z) { return fam.eval(z).value; }

struct Refined {
    double zero;
    double achieved;  // bracket width, or the residual's noise floor in z
};

// Bisection on a verified sign change; monotone convergence, no derivative.
// Deep in the oscillatory range the evaluation noise floor can exceed the
// requested tolerance, so the achieved tolerance is estimated from the final
// residual against a slope sampled while the bracket was still noise-free.
Refined refine_bisect(const SeriesFamily& fam, double lo, double hi, double flo,
                      double tol) {
    double slope = 0.0;
    double fhi = series_at(fam, hi);
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        if (slope == 0.0 && (hi - lo) < 1e-5 * std::max(1.0, hi))
            slope = (fhi - flo) / (hi - lo);
        const double mid = 0.5 * (lo + hi);
        const double fm = series_at(fam, mid);
        if (fm == 0.0) return {mid, hi - lo};
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    const double mid = 0.5 * (lo + hi);
    double achieved = hi - lo;
    if (slope != 0.0)
        achieved = std::max(achieved, std::abs(series_at(fam, mid) / slope));
    return {mid, achieved};
}

// Scan step: half-of-asymptotic-spacing in the squared convention; for the
// plain convention the underlying zeros sit at squares, so the local gap
// grows like 2*pi*sqrt(z).
double scan_step(FamilyKind kind, double z) {
    if (squared_argument(kind)) return std::min(0.25, kPi / 2.0);
    return std::max(0.25, 0.5 * std::sqrt(std::max(z, 0.0)));
}

}  // namespace

ZeroCatalog find_zeros(const SeriesFamily& family, std::size_t count, double tol) {
    if (count < 1) throw InvalidParameters("find_zeros: count must be >= 1");
    if (tol < 1e-14) throw InvalidParameters("find_zeros: tol must be >= 1e-14");

    const double cap = family.context().policy().domain_cap;
    const double raw = 10.0 * static_cast<double>(count) * kPi;
    const double ceiling =
        std::min(cap, squared_argument(family.kind()) ? raw : raw * raw);

    ZeroCatalog cat;
    cat.kind = family.kind();
    cat.refined_tol = tol;

    double z = 0.0;
    double fz = 1.0;  // coefficient 0 is exactly 1
    double recent_mag = 1.0;
    while (cat.zeros.size() < count && z < ceiling) {
        const double step = scan_step(family.kind(), z);
        const double z2 = std::min(z + step, ceiling);
        const double f2 = series_at(family, z2);
        if ((fz < 0.0) != (f2 < 0.0) || f2 == 0.0) {
            const Refined r = refine_bisect(family, z, z2, fz, tol);
            cat.zeros.push_back(r.zero);
            cat.refined_tol = std::max(cat.refined_tol, r.achieved);
        } else if (std::abs(f2) < 1e-9 * recent_mag) {
            // |f| collapsed by nine orders without a sign change: suspected
            // double zero (possible only under allow_unverified). Rescan the
            // window at 1/16 step and take any sign changes found.
            const double fine = step / 16.0;
            double a = z, fa = fz;
            for (double b = z + fine; b <= z2 + step && cat.zeros.size() < count;
                 b += fine) {
                const double fb = series_at(family, b);
                if ((fa < 0.0) != (fb < 0.0)) {
                    const Refined r = refine_bisect(family, a, b, fa, tol);
                    cat.zeros.push_back(r.zero);
                    cat.refined_tol = std::max(cat.refined_tol, r.achieved);
                }
                a = b;
                fa = fb;
            }
            z = a;
            fz = fa;
            cat.scan_ceiling = std::max(cat.scan_ceiling, z);
            recent_mag = std::max(std::abs(fz), 1e-30);
            continue;
        }
        z = z2;
        fz = f2;
        cat.scan_ceiling = z;
        recent_mag = std::max(std::abs(f2), 1e-30);
    }

    if (cat.zeros.size() < count) {
        std::ostringstream msg;
        msg << "zero scan for " << family_name(family.kind()) << " exhausted at "
            << cat.scan_ceiling << " with " << cat.zeros.size() << " of " << count
            << " zeros";
        throw ScanExhausted(msg.str());
    }
    return cat;
}

InterlacingReport interlacing_check(const ZeroCatalog& psi_catalog,
                                    const ZeroCatalog& psi1_catalog) {
    InterlacingReport rep;
    const std::size_t n =
        std::min(psi_catalog.zeros.size(), psi1_catalog.zeros.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = psi_catalog.zeros[k];
        const double lamp = psi1_catalog.zeros[k];
        if (!(lamp < lam)) {
            rep.pass = false;
            rep.violation_index = k + 1;
            rep.lhs = lamp;
            rep.rhs = lam;
            std::ostringstream msg;
            msg << "lambda'_" << k + 1 << " = " << lamp << " !< lambda_" << k + 1
                << " = " << lam;
            rep.message = msg.str();
            return rep;
        }
        if (k + 1 < n) {
            const double lamp_next = psi1_catalog.zeros[k + 1];
            if (!(lam < lamp_next)) {
                rep.pass = false;
                rep.violation_index = k + 1;
                rep.lhs = lam;
                rep.rhs = lamp_next;
                std::ostringstream msg;
                msg << "lambda_" << k + 1 << " = " << lam << " !< lambda'_"
                    << k + 2 << " = " << lamp_next;
                rep.message = msg.str();
                return rep;
            }
        }
        rep.pairs_checked = k + 1;
    }
    rep.pass = true;
    rep.message = "interlacing chain holds";
    return rep;
}

}  // namespace nradii
