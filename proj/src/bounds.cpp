#include "nradii/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace nradii {

std::pair<double, double> rayleigh_sums(const EvaluationContext& ctx) {
    const CoefficientTriple& k = ctx.coeffs();
    const double nu = ctx.nu();
    const double q0 = eval_q(k, nu);
    const double q2 = eval_q(k, nu + 2.0);
    const double q4 = eval_q(k, nu + 4.0);
    const double first = q2 / (4.0 * (nu + 1.0) * q0);
    const double second =
        (q2 * q2 / ((nu + 1.0) * q0) - q4 / (nu + 2.0)) / (16.0 * (nu + 1.0) * q0);
    return {first, second};
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Newton's identities on the elementary symmetric sums e_1..e_kmax of the
// reciprocal zeros: s_k = (-1)^(k-1) k e_k + sum_{j<k} (-1)^(j-1) e_j s_{k-j}.
std::vector<double> newton_from_elementary(const std::vector<double>& e,
                                           bool* precision_loss) {
    std::vector<double> s;
    s.reserve(e.size());
    for (std::size_t k = 1; k <= e.size(); ++k) {
        double acc = ((k % 2) ? 1.0 : -1.0) * static_cast<double>(k) * e[k - 1];
        double mag = std::abs(acc);
        for (std::size_t j = 1; j < k; ++j) {
            const double term = ((j % 2) ? 1.0 : -1.0) * e[j - 1] * s[k - 1 - j];
            acc += term;
            mag += std::abs(term);
        }
        if (precision_loss && mag > 1e6 * std::abs(acc)) *precision_loss = true;
        s.push_back(acc);
    }
    return s;
}

// Published closed forms for the four Euler-Rayleigh sum families, exactly
// as displayed in their source (several carry typos; the Newton values are
// authoritative and the audit reports every divergence).
struct PublishedForms {
    double v[4][3];  // [sigma, rho, kappa, omega][k-1]
};

PublishedForms published_closed_forms(const EvaluationContext& ctx) {
    const CoefficientTriple& kk = ctx.coeffs();
    const double nu = ctx.nu();
    const double q0 = eval_q(kk, nu);
    const double q2 = eval_q(kk, nu + 2.0);
    const double q4 = eval_q(kk, nu + 4.0);
    const double q6 = eval_q(kk, nu + 6.0);
    const double n1 = nu + 1.0, n2 = nu + 2.0, n3 = nu + 3.0;

    PublishedForms p;
    // sigma (zeros of g')
    p.v[0][0] = 3.0 * q2 / (4.0 * n1 * q0);
    p.v[0][1] = (9.0 * n2 * q2 * q2 - 5.0 * n1 * q0 * q4) /
                (16.0 * n1 * n1 * n2 * q0 * q0);
    p.v[0][2] = (54.0 * n2 * n3 * q2 * q2 * q2 -
                 45.0 * n1 * n1 * n3 * q0 * q2 * q4 + 7.0 * n1 * n1 * q0 * q0 * q6) /
                (128.0 * n1 * n1 * n1 * n2 * n3 * q0 * q0 * q0);
    // rho (zeros of h', plain variable)
    p.v[1][0] = q2 / (2.0 * n1 * q0);
    p.v[1][1] = (q2 * q2 / (n1 * q0) - 3.0 * q4 / (4.0 * n2)) / (4.0 * n1 * q0);
    p.v[1][2] = (8.0 * q2 * q2 * q2 - 9.0 * n1 * q0 * q2 * q4 / n2 +
                 2.0 * n1 * n1 * q0 * q0 * q6 / (n2 * n3)) /
                (64.0 * n1 * n1 * n1 * q0 * q0 * q0);
    // kappa (zeros of (z g')')
    p.v[2][0] = 9.0 * q2 / (4.0 * n1 * q0);
    p.v[2][1] = (81.0 * n2 * q2 * q2 - 25.0 * n1 * q0 * q4) /
                (16.0 * n1 * n1 * n2 * q0);
    p.v[2][2] = (27.0 * n3 * q2 * (54.0 * n2 * q2 * q2 - 25.0 * n1 * n1 * q0 * q4) +
                 49.0 * n1 * n1 * q0 * q0 * q6) /
                (128.0 * n1 * n1 * n1 * n2 * n3 * q0 * q0 * q0);
    // omega (zeros of (z h')', plain variable)
    p.v[3][0] = q2 / (n1 * q0);
    p.v[3][1] =
        (16.0 * n2 * q2 * q2 - 9.0 * q0 * q4) / (16.0 * n1 * n2 * q0 * q0);
    p.v[3][2] = (32.0 * q2 * q2 * q2 - 27.0 * n1 * n1 * q0 * q2 * q4 / n2 +
                 4.0 * n1 * n1 * q0 * q0 * q6 / (n2 * n3)) /
                (32.0 * n1 * n1 * n1 * q0 * q0 * q0);
    return p;
}

int published_form_index(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::gprime: return 0;
        case FamilyKind::hprime: return 1;
        case FamilyKind::delta: return 2;
        case FamilyKind::theta: return 3;
        default: return -1;
    }
}

}  // namespace

EulerRayleighSums coefficient_sums(const SeriesFamily& family, int kmax) {
    if (kmax < 1) throw InvalidParameters("coefficient_sums: kmax must be >= 1");
    if (kmax > 12)
        throw InvalidParameters(
            "coefficient_sums: kmax > 12 rejected (binary64 cancellation)");

    std::vector<double> e(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k)
        e[k - 1] = ((k % 2) ? -1.0 : 1.0) *
                   family.coefficient(static_cast<std::size_t>(k));

    EulerRayleighSums out;
    out.kind = family.kind();
    out.precision_loss = false;
    out.newton = newton_from_elementary(e, &out.precision_loss);

    out.published.assign(static_cast<std::size_t>(kmax), kNaN);
    const int idx = published_form_index(family.kind());
    if (idx >= 0) {
        const PublishedForms p = published_closed_forms(family.context());
        for (int k = 1; k <= std::min(kmax, 3); ++k) out.published[k - 1] = p.v[idx][k - 1];
    }
    return out;
}

std::string_view bound_target_name(BoundTarget t) noexcept {
    switch (t) {
        case BoundTarget::starlike_g: return "starlike_g";
        case BoundTarget::starlike_h: return "starlike_h";
        case BoundTarget::convex_g: return "convex_g";
        case BoundTarget::convex_h: return "convex_h";
    }
    return "?";
}

BoundTarget bound_target_from_name(std::string_view name) {
    for (BoundTarget t : {BoundTarget::starlike_g, BoundTarget::starlike_h,
                          BoundTarget::convex_g, BoundTarget::convex_h})
        if (name == bound_target_name(t)) return t;
    throw InvalidParameters("unknown bound target: " + std::string(name));
}

FamilyKind bound_target_family(BoundTarget t) noexcept {
    switch (t) {
        case BoundTarget::starlike_g: return FamilyKind::gprime;
        case BoundTarget::starlike_h: return FamilyKind::hprime;
        case BoundTarget::convex_g: return FamilyKind::delta;
        case BoundTarget::convex_h: return FamilyKind::theta;
    }
    return FamilyKind::gprime;
}

BoundBracketSet bound_brackets(const EvaluationContext& ctx, BoundTarget target,
                               int kmax) {
    if (kmax < 1) throw InvalidParameters("bound_brackets: kmax must be >= 1");
    const FamilyKind kind = bound_target_family(target);
    const double expo = squared_argument(kind) ? 2.0 : 1.0;

    SeriesFamily family(ctx, kind);
    const EulerRayleighSums sums = coefficient_sums(family, std::max(kmax, 2));
    const std::vector<double>& s = sums.newton;

    BoundBracketSet out;
    out.target = target;
    out.precision_loss = sums.precision_loss;
    for (int k = 1; k <= kmax; ++k) {
        BoundBracket b;
        b.k = k;
        b.lower = std::pow(s[k - 1], -1.0 / (expo * k));
        const int j = std::max(k - 1, 1);  // k = 1 reuses the (1,2) ratio
        b.upper = std::pow(s[j - 1] / s[j], 1.0 / expo);
        out.brackets.push_back(b);
    }

    const auto [inv2, inv4] = rayleigh_sums(ctx);
    (void)inv4;
    if (target == BoundTarget::starlike_g)
        out.kreyszig_todd = 1.0 / std::sqrt(2.0 * inv2);
    else if (target == BoundTarget::starlike_h)
        out.kreyszig_todd = 1.0 / inv2;
    return out;
}

std::vector<AuditEntry> published_form_audit(const EvaluationContext& ctx) {
    static const char* kGroup[4] = {"sigma", "rho", "kappa", "omega"};
    static const FamilyKind kFam[4] = {FamilyKind::gprime, FamilyKind::hprime,
                                       FamilyKind::delta, FamilyKind::theta};
    static const char* kNotes[4][3] = {
        {"", "", "middle term carries an extra (nu+1)"},
        {"", "", ""},
        {"", "denominator printed one power of Q(nu) short",
         "inner bracket carries an extra (nu+1)"},
        {"", "missing (nu+1) on the Q(nu)Q(nu+4) term and in the denominator",
         "middle term carries an extra (nu+1)"}};
    const PublishedForms p = published_closed_forms(ctx);

    std::vector<AuditEntry> entries;
    for (int g = 0; g < 4; ++g) {
        SeriesFamily fam(ctx, kFam[g]);
        const std::vector<double> newton =
            coefficient_sums(fam, 3).newton;
        for (int k = 1; k <= 3; ++k) {
            AuditEntry e;
            e.name = std::string(kGroup[g]) + "_" + std::to_string(k);
            e.published_value = p.v[g][k - 1];
            e.newton_value = newton[k - 1];
            e.match = std::abs(e.published_value - e.newton_value) <=
                      1e-12 * std::abs(e.newton_value);
            if (!e.match) {
                e.note = kNotes[g][k - 1];
                if (e.note.empty()) e.note = "published form disagrees";
            }
            entries.push_back(e);
        }
    }

    const CoefficientTriple& kk = ctx.coeffs();
    const double nu = ctx.nu();
    const double q0 = eval_q(kk, nu);
    const double q2 = eval_q(kk, nu + 2.0);
    const auto [inv2, inv4] = rayleigh_sums(ctx);
    (void)inv4;

    {
        AuditEntry e;
        e.name = "kreyszig_todd_g";
        e.published_value = std::sqrt(2.0 * (nu + 1.0) * q0 / q2);
        e.newton_value = 1.0 / std::sqrt(2.0 * inv2);
        e.match = std::abs(e.published_value - e.newton_value) <=
                  1e-12 * std::abs(e.newton_value);
        entries.push_back(e);
    }
    {
        AuditEntry e;
        e.name = "kreyszig_todd_h";
        e.published_value = 2.0 * (nu + 1.0) * q0 / q2;
        e.newton_value = 1.0 / inv2;  // = 4(nu+1)Q(nu)/Q(nu+2)
        e.match = std::abs(e.published_value - e.newton_value) <=
                  1e-12 * std::abs(e.newton_value);
        if (!e.match) e.note = "printed ceiling is half the consistent one";
        entries.push_back(e);
    }
    {
        AuditEntry e;
        e.name = "starlike_h_k1_lower";
        e.published_value = 2.0 * (nu + 1.0) * q0 / (3.0 * q2);
        // Newton k=1 lower bound is 1/rho_1.
        SeriesFamily hp(ctx, FamilyKind::hprime);
        e.newton_value = 1.0 / coefficient_sums(hp, 1).newton[0];
        e.match = std::abs(e.published_value - e.newton_value) <=
                  1e-12 * std::abs(e.newton_value);
        if (!e.match) e.note = "printed lower bound carries a spurious 1/3";
        entries.push_back(e);
    }
    return entries;
}

std::string format_audit_report(const EvaluationContext& ctx) {
    const std::vector<AuditEntry> entries = published_form_audit(ctx);
    std::ostringstream os;
    os << "closed-form audit: a=" << ctx.coeffs().a << " b=" << ctx.coeffs().b
       << " c=" << ctx.coeffs().c << " nu=" << ctx.nu() << "\n";
    os << std::left << std::setw(22) << "name" << std::setw(24) << "published"
       << std::setw(24) << "newton" << "verdict\n";
    for (const AuditEntry& e : entries) {
        os << std::left << std::setw(22) << e.name << std::setprecision(15)
           << std::setw(24) << e.published_value << std::setw(24) << e.newton_value
           << (e.match ? "MATCH" : "MISMATCH");
        if (!e.note.empty()) os << "  (" << e.note << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace nradii
