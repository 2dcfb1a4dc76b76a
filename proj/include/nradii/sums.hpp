#pragma once

#include <vector>

#include "nradii/model.hpp"

namespace nradii {

/// Elementary symmetric sums of the reciprocal squared psi zeros,
///   e_n = sum_{k1<...<kn} 1/(lambda_{k1}^2 ... lambda_{kn}^2)
///       = Q(2n+nu) / (n! 4^n (nu+1)_n Q(nu)),
/// returned for n = 1..nmax. These equal |psi coefficient_n|.
std::vector<double> elementary_sums(const EvaluationContext& ctx, int nmax);

/// Power sums s_n = sum 1/lambda^(2n) computed three ways:
/// `s_det` expands the n x n first-column/superdiagonal determinant (LU with
/// partial pivoting), `s_newton` runs the Newton recurrence
/// s_n = (-1)^(n-1) n e_n + sum_j (-1)^(j-1) e_j s_{n-j}, and `s_closed`
/// evaluates the published closed forms for n <= 4 (NaN beyond; the n = 4
/// display is garbled in its source and reported informationally).
struct SymmetricData {
    std::vector<double> e;         ///< e_1..e_nmax
    std::vector<double> s_newton;  ///< s_1..s_nmax
    std::vector<double> s_det;
    std::vector<double> s_closed;
    bool alternating = false;
    bool precision_loss = false;
};

/// nmax <= 10. With `alternating` set, computes the signed scaled variant
/// sum_k 4^n (-1)^n / lambda_k^(2n) by reusing the same determinant with
/// 4^k-scaled entries (all three routes scaled consistently).
SymmetricData power_sums_det(const EvaluationContext& ctx, int nmax,
                             bool alternating = false);

}  // namespace nradii
