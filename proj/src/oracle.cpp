#include "nradii/oracle.hpp"

#include "nradii/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace nradii::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

double bessel_j(double nu, double z) { return std::cyl_bessel_j(nu, z); }

// J'_nu(z) = (nu/z) J_nu(z) - J_{nu+1}(z); keeps all orders nonnegative.
double bessel_jp(double nu, double z) {
    return (nu / z) * bessel_j(nu, z) - bessel_j(nu + 1.0, z);
}

struct JPair {
    double j, jp;
};

JPair jpair(double nu, double z) { return {bessel_j(nu, z), bessel_jp(nu, z)}; }

}  // namespace

double n_value(const CoefficientTriple& k, double nu, double z) {
    const JPair v = jpair(nu, z);
    return (k.c + k.a * (nu * nu - z * z)) * v.j + (k.b - k.a) * z * v.jp;
}

double n_derivative(const CoefficientTriple& k, double nu, double z) {
    const JPair v = jpair(nu, z);
    const double B = k.c + k.a * (nu * nu - z * z);
    const double A = -2.0 * k.a * z + (k.b - k.a) * (nu * nu - z * z) / z;
    return A * v.j + B * v.jp;
}

double n_second_derivative(const CoefficientTriple& k, double nu, double z) {
    const JPair v = jpair(nu, z);
    const double B = k.c + k.a * (nu * nu - z * z);
    const double Bp = -2.0 * k.a * z;
    const double A = -2.0 * k.a * z + (k.b - k.a) * (nu * nu - z * z) / z;
    const double Ap = -2.0 * k.a - (k.b - k.a) * (nu * nu + z * z) / (z * z);
    return (Ap + B * (nu * nu - z * z) / (z * z)) * v.j + (A + Bp - B / z) * v.jp;
}

namespace {

// Same zeros as the series family, evaluated through the J recombination in
// the underlying (squared-convention) variable.
double underlying_value(const EvaluationContext& ctx, FamilyKind kind,
                        double s) {
    const CoefficientTriple& k = ctx.coeffs();
    const double nu = ctx.nu();
    switch (kind) {
        case FamilyKind::psi: return n_value(k, nu, s);
        case FamilyKind::psi1: return n_derivative(k, nu, s);
        case FamilyKind::gprime:
            return (1.0 - nu) * n_value(k, nu, s) + s * n_derivative(k, nu, s);
        case FamilyKind::delta:
            return (1.0 - nu) * (1.0 - nu) * n_value(k, nu, s) +
                   (3.0 - 2.0 * nu) * s * n_derivative(k, nu, s) +
                   s * s * n_second_derivative(k, nu, s);
        case FamilyKind::hprime:
            return (2.0 - nu) * n_value(k, nu, s) + s * n_derivative(k, nu, s);
        case FamilyKind::theta:
            return (2.0 - nu) * (2.0 - nu) * n_value(k, nu, s) +
                   (5.0 - 2.0 * nu) * s * n_derivative(k, nu, s) +
                   s * s * n_second_derivative(k, nu, s);
    }
    return 0.0;
}

double bisect_underlying(const EvaluationContext& ctx, FamilyKind kind,
                         double lo, double hi, double flo, double tol) {
    for (int it = 0; it < 300 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = underlying_value(ctx, kind, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0))
            hi = mid;
        else
            lo = mid, flo = fm;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double family_value(const EvaluationContext& ctx, FamilyKind kind, double z) {
    const double s = squared_argument(kind) ? z : std::sqrt(z);
    return underlying_value(ctx, kind, s);
}

ZeroCatalog zero_catalog(const EvaluationContext& ctx, FamilyKind kind,
                         std::size_t count, double tol) {
    if (count < 1) throw InvalidParameters("zero_catalog: count must be >= 1");
    const bool squared = squared_argument(kind);

    ZeroCatalog cat;
    cat.kind = kind;
    cat.refined_tol = tol;

    std::vector<double> underlying;
    underlying.reserve(count);
    double s = 1e-4;
    double fs = underlying_value(ctx, kind, s);
    const double ceiling =
        (static_cast<double>(count) + ctx.nu() / 2.0 + 10.0) * kPi + 20.0;
    while (underlying.size() < count && s < ceiling) {
        const double step = s < 20.0 ? 0.25 : 0.5;
        const double s2 = s + step;
        const double f2 = underlying_value(ctx, kind, s2);
        if ((fs < 0.0) != (f2 < 0.0) || f2 == 0.0) {
            const double utol = squared ? tol : tol / (2.0 * std::max(s2, 1.0));
            underlying.push_back(bisect_underlying(ctx, kind, s, s2, fs, utol));
        }
        s = s2;
        fs = f2;
        cat.scan_ceiling = s;
    }
    if (underlying.size() < count) {
        std::ostringstream msg;
        msg << "J-form zero scan exhausted at " << s << " with "
            << underlying.size() << " of " << count << " zeros";
        throw ScanExhausted(msg.str());
    }
    cat.zeros = std::move(underlying);
    if (!squared)
        for (double& z : cat.zeros) z = z * z;
    return cat;
}

double direct_zero_sum(const ZeroCatalog& catalog, int power, bool tail) {
    if (catalog.zeros.size() < 100)
        throw InvalidParameters("direct_zero_sum: needs at least 100 zeros");
    if (power < 1) throw InvalidParameters("direct_zero_sum: power must be >= 1");

    const bool squared = squared_argument(catalog.kind);
    const int p_underlying = squared ? power : 2 * power;
    if (p_underlying < 2)
        throw InvalidParameters("direct_zero_sum: divergent power for this family");

    // Sum smallest contributions first.
    double sum = 0.0;
    for (auto it = catalog.zeros.rbegin(); it != catalog.zeros.rend(); ++it)
        sum += std::pow(*it, -static_cast<double>(power));

    if (tail) {
        // Midpoint integral of the asymptotic zero density (spacing pi in
        // the underlying variable).
        const double last = squared ? catalog.zeros.back()
                                    : std::sqrt(catalog.zeros.back());
        const double x0 = last + kPi / 2.0;
        sum += std::pow(x0, 1.0 - p_underlying) / (kPi * (p_underlying - 1.0));
    }
    return sum;
}

namespace {

// Locally re-derived base coefficients via lgamma -- independent from the
// ratio recurrence the series module uses.
std::vector<double> lgamma_coefficients(const EvaluationContext& ctx, int n_terms) {
    const CoefficientTriple& k = ctx.coeffs();
    const double nu = ctx.nu();
    const double q0 = eval_q(k, nu);
    std::vector<double> b(static_cast<std::size_t>(n_terms));
    for (int n = 0; n < n_terms; ++n) {
        const double mag = std::exp(std::lgamma(nu + 1.0) - std::lgamma(n + 1.0) -
                                    std::lgamma(n + nu + 1.0) -
                                    n * std::log(4.0));
        b[static_cast<std::size_t>(n)] =
            ((n % 2) ? -1.0 : 1.0) * mag * eval_q(k, 2.0 * n + nu) / q0;
    }
    return b;
}

struct RatioSums {
    std::complex<double> s0, s1;  // sum b_n t^n and sum 2n b_n t^n
};

RatioSums ratio_sums(const std::vector<double>& b, std::complex<double> t) {
    std::complex<double> s0 = 0.0, s1 = 0.0, tp = 1.0;
    for (std::size_t n = 0; n < b.size(); ++n) {
        s0 += b[n] * tp;
        s1 += 2.0 * static_cast<double>(n) * b[n] * tp;
        tp *= t;
    }
    return {s0, s1};
}

}  // namespace

CircleScan sample_min_re_ratio(const EvaluationContext& ctx, Normalization norm,
                               double r, int samples) {
    if (samples < 360)
        throw InvalidParameters("sample_min_re_ratio: samples must be >= 360");
    if (!(r > 0.0)) throw InvalidParameters("sample_min_re_ratio: r must be > 0");
    if (norm == Normalization::f && ctx.nu() == 0.0)
        throw InvalidParameters("f normalization requires nu != 0");

    const int n_terms =
        std::max(40, static_cast<int>(std::ceil(r * r)) + 40);
    const std::vector<double> b = lgamma_coefficients(ctx, n_terms);

    CircleScan out;
    out.samples = samples;
    out.min_re = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * kPi * i / samples;
        const std::complex<double> z = std::polar(r, theta);
        const std::complex<double> t =
            (norm == Normalization::h) ? z : z * z;
        const RatioSums s = ratio_sums(b, t);
        double value;
        switch (norm) {
            case Normalization::f:
                value = 1.0 + (s.s1 / (ctx.nu() * s.s0)).real();
                break;
            case Normalization::g:
                value = 1.0 + (s.s1 / s.s0).real();
                break;
            case Normalization::h:
            default:
                value = 1.0 + (s.s1 / (2.0 * s.s0)).real();
                break;
        }
        if (value < out.min_re) {
            out.min_re = value;
            out.theta_at_min = theta;
        }
    }
    return out;
}

VerificationReport finite_diff_check(const SeriesFamily& family, double z,
                                     double step) {
    VerificationReport rep;
    rep.name = std::string("finite-diff ") + std::string(family_name(family.kind()));
    rep.tolerance = 1e-6;
    rep.relative = true;
    const double fd =
        (family.eval(z + step).value - family.eval(z - step).value) /
        (2.0 * step);
    const double series = family.eval_zdz(z).value / z;
    rep.computed = fd;
    rep.reference = series;
    rep.pass = std::abs(fd - series) <= rep.tolerance * std::abs(series);
    std::ostringstream note;
    note << "z = " << z << ", step = " << step;
    rep.notes = note.str();
    return rep;
}

namespace {

VerificationReport make_report(std::string name, double computed,
                               double reference, double tol, bool relative,
                               std::string notes = {}) {
    VerificationReport rep;
    rep.name = std::move(name);
    rep.computed = computed;
    rep.reference = reference;
    rep.tolerance = tol;
    rep.relative = relative;
    const double err = std::abs(computed - reference);
    rep.pass = relative ? err <= tol * std::abs(reference) : err <= tol;
    rep.notes = std::move(notes);
    return rep;
}

}  // namespace

std::vector<VerificationReport> run_verification(const EvaluationContext& ctx) {
    std::vector<VerificationReport> reports;
    const double nu = ctx.nu();

    // Termwise derivatives against central differences.
    for (FamilyKind kind :
         {FamilyKind::psi, FamilyKind::psi1, FamilyKind::gprime,
          FamilyKind::hprime, FamilyKind::delta, FamilyKind::theta}) {
        if (kind == FamilyKind::psi1 && nu == 0.0) continue;
        reports.push_back(finite_diff_check(SeriesFamily(ctx, kind), 0.5));
    }

    // d/dz [z^nu psi(z)] = nu z^(nu-1) psi1(z) at 20 seeded points in (0,3).
    if (nu != 0.0) {
        SeriesFamily psi(ctx, FamilyKind::psi);
        SeriesFamily psi1(ctx, FamilyKind::psi1);
        std::mt19937 rng(20240915u);
        std::uniform_real_distribution<double> pick(0.05, 3.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double z = pick(rng);
            const double h = 1e-6 * std::max(1.0, z);
            const auto phi = [&](double x) {
                return std::pow(x, nu) * psi.eval(x).value;
            };
            const double lhs = (phi(z + h) - phi(z - h)) / (2.0 * h);
            const double rhs =
                nu * std::pow(z, nu - 1.0) * psi1.eval(z).value;
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max(1e-30, std::abs(rhs)));
        }
        reports.push_back(make_report("derivative relation psi1", worst, 0.0,
                                      1e-7, false, "max rel err at 20 points"));
    }

    // Interlacing of the first five zero pairs via the J form.
    if (nu != 0.0) {
        const ZeroCatalog lam = zero_catalog(ctx, FamilyKind::psi, 5);
        const ZeroCatalog lamp = zero_catalog(ctx, FamilyKind::psi1, 5);
        const InterlacingReport rep = interlacing_check(lam, lamp);
        reports.push_back(make_report("interlacing chain", rep.pass ? 1.0 : 0.0,
                                      1.0, 0.0, false, rep.message));
    }

    const ZeroCatalog lam200 = zero_catalog(ctx, FamilyKind::psi, 200);

    // Mittag-Leffler: z N'/N = nu - sum 2z^2/(lambda^2 - z^2), summed over
    // 200 catalog zeros plus the integral tail.
    {
        const double z = 0.5 * lam200.zeros.front();
        double sum = 0.0;
        for (auto it = lam200.zeros.rbegin(); it != lam200.zeros.rend(); ++it)
            sum += 2.0 * z * z / (*it * *it - z * z);
        const double x0 = lam200.zeros.back() + kPi / 2.0;
        sum += (z / kPi) * std::log((x0 + z) / (x0 - z));
        const double reference = nu - sum;
        const double computed = log_deriv_n(ctx, z).value;
        reports.push_back(make_report("mittag-leffler log-derivative", computed,
                                      reference, 1e-6, false));
    }

    // Truncated product reconstruction for the squared-convention families.
    for (FamilyKind kind :
         {FamilyKind::psi, FamilyKind::gprime, FamilyKind::delta}) {
        const ZeroCatalog cat =
            kind == FamilyKind::psi ? lam200 : zero_catalog(ctx, kind, 200);
        const double z = 0.5 * cat.zeros.front();
        const auto partial_product = [&](std::size_t n_factors) {
            double p = 1.0;
            for (std::size_t i = 0; i < n_factors; ++i)
                p *= 1.0 - z * z / (cat.zeros[i] * cat.zeros[i]);
            return p;
        };
        const double direct = SeriesFamily(ctx, kind).eval(z).value;
        const double err200 = std::abs(partial_product(200) / direct - 1.0);
        const double err100 = std::abs(partial_product(100) / direct - 1.0);
        std::ostringstream note;
        note << "rel err " << err200 << " at N=200, " << err100
             << " at N=100 (monotone: " << (err200 <= err100 ? "yes" : "no")
             << ")";
        reports.push_back(
            make_report("product reconstruction " +
                            std::string(family_name(kind)),
                        err200 <= err100 ? err200 : 1.0, 0.0, 2e-3, false,
                        note.str()));
    }

    // Rayleigh identities against 1000-zero direct sums.
    {
        const ZeroCatalog lam1000 = zero_catalog(ctx, FamilyKind::psi, 1000);
        const auto [inv2, inv4] = rayleigh_sums(ctx);
        reports.push_back(make_report("rayleigh sum power 2",
                                      direct_zero_sum(lam1000, 2, true), inv2,
                                      1e-3, true));
        reports.push_back(make_report("rayleigh sum power 4",
                                      direct_zero_sum(lam1000, 4, true), inv4,
                                      1e-8, true));
    }

    // Exact coefficient identities between the derivative pairs.
    {
        SeriesFamily gp(ctx, FamilyKind::gprime), dl(ctx, FamilyKind::delta);
        SeriesFamily hp(ctx, FamilyKind::hprime), th(ctx, FamilyKind::theta);
        double worst_g = 0.0, worst_h = 0.0;
        for (std::size_t n = 0; n <= 100; ++n) {
            worst_g = std::max(worst_g,
                               std::abs(dl.coefficient(n) -
                                        (2.0 * n + 1.0) * gp.coefficient(n)));
            worst_h = std::max(
                worst_h,
                std::abs(th.coefficient(n) - (n + 1.0) * hp.coefficient(n)));
        }
        reports.push_back(make_report("coefficient identity (z g')'", worst_g,
                                      0.0, 0.0, false, "n <= 100, exact"));
        reports.push_back(make_report("coefficient identity (z h')'", worst_h,
                                      0.0, 0.0, false, "n <= 100, exact"));
    }

    // The circle minimum of Re(z g'/g) sits on the real axis.
    {
        const double lam1 = lam200.zeros.front();
        const CircleScan scan =
            sample_min_re_ratio(ctx, Normalization::g, 0.6 * lam1, 720);
        const double step = 2.0 * kPi / scan.samples;
        double dist = std::fmod(scan.theta_at_min, kPi);
        dist = std::min(dist, kPi - dist);
        reports.push_back(make_report("circle minimum on real axis", dist, 0.0,
                                      step + 1e-12, false));
    }

    return reports;
}

}  // namespace nradii::oracle
