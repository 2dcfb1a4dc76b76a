#include "nradii/sums.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nradii {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Determinant by LU with partial pivoting; n <= 10 here so nothing fancier
// is warranted.
double lu_determinant(std::vector<double> m, int n) {
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
        if (m[pivot * n + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            det = -det;
        }
        det *= m[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / m[col * n + col];
            for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
        }
    }
    return det;
}

// The n x n power-sum matrix: lower-triangular Toeplitz in E_1.. with unit
// diagonal across the first n-1 columns, last column -(i+1) E_{i+1}.
double power_sum_determinant(const std::vector<double>& E, int n) {
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n - 1; ++j) {
            if (i == j)
                m[i * n + j] = 1.0;
            else if (i > j)
                m[i * n + j] = E[static_cast<std::size_t>(i - j - 1)];
        }
        m[i * n + (n - 1)] = -(i + 1.0) * E[static_cast<std::size_t>(i)];
    }
    return lu_determinant(std::move(m), n);
}

}  // namespace

std::vector<double> elementary_sums(const EvaluationContext& ctx, int nmax) {
    if (nmax < 1) throw InvalidParameters("elementary_sums: nmax must be >= 1");
    const CoefficientTriple& k = ctx.coeffs();
    const double nu = ctx.nu();
    // e_{n+1}/e_n = (1/4) Q(2n+2+nu) / [Q(2n+nu) (n+1) (n+1+nu)], e_0 = 1.
    std::vector<double> e;
    e.reserve(static_cast<std::size_t>(nmax));
    double cur = 1.0;
    for (int n = 0; n < nmax; ++n) {
        const double qn = eval_q(k, 2.0 * n + nu);
        if (qn == 0.0) throw DegenerateCoefficient("Q(2n+nu) vanished");
        cur *= 0.25 * eval_q(k, 2.0 * n + 2.0 + nu) /
               (qn * (n + 1.0) * (n + 1.0 + nu));
        e.push_back(cur);
    }
    return e;
}

SymmetricData power_sums_det(const EvaluationContext& ctx, int nmax,
                             bool alternating) {
    if (nmax < 1) throw InvalidParameters("power_sums_det: nmax must be >= 1");
    if (nmax > 10)
        throw InvalidParameters("power_sums_det: nmax > 10 rejected");

    SymmetricData out;
    out.alternating = alternating;
    out.e = elementary_sums(ctx, nmax);

    // Scaled entries: the alternating variant reuses the same determinant
    // with 4^k-weighted terms and evaluates sum 4^n (-1)^n / lambda^(2n).
    std::vector<double> E(out.e);
    if (alternating) {
        double scale = 1.0;
        for (std::size_t i = 0; i < E.size(); ++i) {
            scale *= 4.0;
            E[i] *= scale;
        }
    }

    // Newton recurrence on the scaled elementary terms.
    out.precision_loss = false;
    for (int n = 1; n <= nmax; ++n) {
        double acc = ((n % 2) ? 1.0 : -1.0) * n * E[n - 1];
        double mag = std::abs(acc);
        for (int j = 1; j < n; ++j) {
            const double term =
                ((j % 2) ? 1.0 : -1.0) * E[j - 1] * out.s_newton[n - 1 - j];
            acc += term;
            mag += std::abs(term);
        }
        if (mag > 1e6 * std::abs(acc)) out.precision_loss = true;
        out.s_newton.push_back(acc);
    }
    if (alternating)
        for (int n = 1; n <= nmax; ++n)
            out.s_newton[n - 1] *= ((n % 2) ? -1.0 : 1.0);

    // Determinant route. Plain variant: s_n = (-1)^n det; the alternating
    // scaling already carries its sign in the entries.
    for (int n = 1; n <= nmax; ++n) {
        const double det = power_sum_determinant(E, n);
        out.s_det.push_back(alternating ? det : ((n % 2) ? -det : det));
    }

    // Published closed forms for s_1..s_4 (the s_4 display is garbled in its
    // source; reported informationally).
    out.s_closed.assign(static_cast<std::size_t>(nmax), kNaN);
    {
        const CoefficientTriple& kk = ctx.coeffs();
        const double nu = ctx.nu();
        const auto q = [&](double t) { return eval_q(kk, t); };
        const auto poch = [&](double x, int n) {
            double p = 1.0;
            for (int i = 0; i < n; ++i) p *= x + i;
            return p;
        };
        const double q0 = q(nu);
        std::vector<double> closed;
        closed.push_back(q(nu + 2.0) / (4.0 * poch(nu + 1.0, 1) * q0));
        closed.push_back(((nu + 2.0) * q(nu + 2.0) * q(nu + 2.0) -
                          (nu + 1.0) * q0 * q(nu + 4.0)) /
                         (16.0 * q0 * q0 * poch(nu + 1.0, 1) * poch(nu + 1.0, 2)));
        closed.push_back(
            (poch(nu + 2.0, 2) * q(nu + 2.0) *
                 (2.0 * (nu + 2.0) * q(nu + 2.0) * q(nu + 2.0) -
                  3.0 * (nu + 1.0) * q0 * q(nu + 4.0)) +
             (nu + 1.0) * (nu + 1.0) * (nu + 2.0) * q0 * q0 * q(nu + 6.0)) /
            (2.0 * 64.0 * q0 * q0 * q0 * poch(nu + 1.0, 1) * poch(nu + 1.0, 2) *
             poch(nu + 1.0, 3)));
        closed.push_back(
            poch(nu + 2.0, 2) *
            (6.0 * (nu + 2.0) * poch(nu + 2.0, 3) * std::pow(q(nu + 2.0), 4) -
             12.0 * poch(nu + 1.0, 4) * q0 * q(nu + 2.0) * q(nu + 2.0) *
                 q(nu + 4.0) +
             (nu + 1.0) * poch(nu + 1.0, 2) * (nu + 4.0) * q0 * q0 * q(nu + 2.0) *
                 (q(nu + 4.0) + 3.0 * q(nu + 6.0)) +
             (nu + 1.0) * (nu + 1.0) * q0 * q0 *
                 (3.0 * poch(nu + 2.0, 2) * q(nu + 4.0) * q(nu + 4.0) -
                  poch(nu + 1.0, 2) * q0 * q(nu + 8.0))) /
            (6.0 * 256.0 * std::pow(q0, 4) * poch(nu + 1.0, 1) *
             poch(nu + 1.0, 2) * poch(nu + 1.0, 3) * poch(nu + 1.0, 4)));
        double scale = 1.0;
        for (int n = 1; n <= std::min(nmax, 4); ++n) {
            scale *= alternating ? -4.0 : 1.0;
            out.s_closed[n - 1] = closed[static_cast<std::size_t>(n - 1)] * scale;
        }
    }
    return out;
}

}  // namespace nradii
