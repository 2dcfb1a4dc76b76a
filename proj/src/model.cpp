#include "nradii/model.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <vector>

namespace nradii {

const char* CoefficientTriple::rejection_reason() const noexcept {
    if (admissible()) return "";
    if (c == 0.0) return "inadmissible triple: c = 0 requires a != b";
    if (c > 0.0) return "inadmissible triple: c > 0 requires a < b";
    return "inadmissible triple: c must be zero or positive";
}

double eval_q(const CoefficientTriple& k, double t) noexcept {
    return k.a * t * (t - 1.0) + k.b * t + k.c;
}

OrderThreshold largest_root(const CoefficientTriple& k) {
    if (!k.admissible()) throw InvalidParameters(k.rejection_reason());

    OrderThreshold out;
    if (k.a == 0.0) {
        // Q linear: b t + c with b = q != 0 under admissibility.
        out.nu0 = -k.c / k.b;
    } else {
        // Q(t) = a t^2 + (b-a) t + c
        const double p = k.b - k.a;
        const double disc = p * p - 4.0 * k.a * k.c;
        if (disc < 0.0) {
            out.threshold = 0.0;
            return out;
        }
        // Stable quadratic formula; p != 0 for admissible triples.
        const double w = -0.5 * (p + std::copysign(std::sqrt(disc), p));
        const double r1 = w / k.a;
        const double r2 = (w == 0.0) ? 0.0 : k.c / w;
        out.nu0 = std::max(r1, r2);
    }
    out.threshold = std::max(0.0, *out.nu0);
    return out;
}

namespace detail {

double base_ratio_at(const CoefficientTriple& k, double nu, std::size_t n) {
    const double qn = eval_q(k, 2.0 * static_cast<double>(n) + nu);
    if (qn == 0.0) {
        std::ostringstream msg;
        msg << "Q(2n+nu) vanished at n = " << n
            << "; coefficient recurrence degenerate";
        throw DegenerateCoefficient(msg.str());
    }
    const double qn1 = eval_q(k, 2.0 * static_cast<double>(n) + 2.0 + nu);
    return -0.25 * qn1 /
           (qn * (static_cast<double>(n) + 1.0) *
            (static_cast<double>(n) + 1.0 + nu));
}

// Cached base terms b_n with b_0 = 1 and b_{n+1} = b_n * base_ratio_at(n).
// Extension is serialized; reads of already-cached terms take a shared lock.
class BaseTermCache {
public:
    BaseTermCache(const CoefficientTriple& k, double nu)
        : coeffs_(k), nu_(nu), terms_{1.0} {}

    double get(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < terms_.size()) return terms_[n];
        }
        std::unique_lock lock(mutex_);
        while (terms_.size() <= n) {
            const std::size_t k = terms_.size() - 1;
            terms_.push_back(terms_.back() * base_ratio_at(coeffs_, nu_, k));
        }
        return terms_[n];
    }

private:
    CoefficientTriple coeffs_;
    double nu_;
    mutable std::shared_mutex mutex_;
    std::vector<double> terms_;
};

}  // namespace detail

EvaluationContext::EvaluationContext(CoefficientTriple coeffs, double nu,
                                     EvaluationPolicy policy)
    : coeffs_(coeffs), nu_(nu), policy_(policy) {
    if (!coeffs_.admissible()) throw InvalidParameters(coeffs_.rejection_reason());
    if (!std::isfinite(nu_)) throw InvalidParameters("order nu must be finite");

    threshold_ = largest_root(coeffs_).threshold;
    verified_ = nu_ >= threshold_;
    if (!verified_ && !policy_.allow_unverified) {
        std::ostringstream msg;
        msg << "order below threshold: nu = " << nu_ << " < max{0, nu0} = "
            << threshold_ << " (pass allow_unverified to explore anyway)";
        throw InvalidParameters(msg.str());
    }

    q_nu_ = eval_q(coeffs_, nu_);
    if (q_nu_ == 0.0)
        throw InvalidParameters("Q(nu) = 0: every normalization divides by it");

    if (policy_.max_terms < 4) throw InvalidParameters("max_terms must be >= 4");
    if (!(policy_.tolerance > 0.0))
        throw InvalidParameters("tolerance must be positive");
    if (!(policy_.domain_cap > 0.0))
        throw InvalidParameters("domain_cap must be positive");

    cache_ = std::make_shared<detail::BaseTermCache>(coeffs_, nu_);
}

double EvaluationContext::base_term(std::size_t n) const {
    return cache_->get(n);
}

double EvaluationContext::base_ratio(std::size_t n) const {
    return detail::base_ratio_at(coeffs_, nu_, n);
}

EvaluationContext validate_context(CoefficientTriple coeffs, double nu,
                                   EvaluationPolicy policy) {
    return EvaluationContext(coeffs, nu, policy);
}

}  // namespace nradii
