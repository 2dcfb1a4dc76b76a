#include <doctest.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <thread>
#include <vector>

#include "nradii/series.hpp"

using namespace nradii;

namespace {
EvaluationContext ctx15() { return {{2, 1, 0}, 1.5}; }
EvaluationContext ctx25() { return {{2, 1, 0}, 2.5}; }
}  // namespace

TEST_CASE("coefficients: normalization and per-family weights") {
    auto ctx = ctx15();
    for (FamilyKind k : {FamilyKind::psi, FamilyKind::psi1, FamilyKind::gprime,
                         FamilyKind::hprime, FamilyKind::delta, FamilyKind::theta})
        CHECK(SeriesFamily(ctx, k).coefficient(0) == 1.0);

    CHECK(SeriesFamily(ctx, FamilyKind::psi).coefficient(1) ==
          doctest::Approx(-0.7).epsilon(1e-15));
    CHECK(SeriesFamily(ctx, FamilyKind::gprime).coefficient(1) ==
          doctest::Approx(-2.1).epsilon(1e-15));
    CHECK(SeriesFamily(ctx, FamilyKind::psi1).coefficient(1) ==
          doctest::Approx(-1.6333333333333333).epsilon(1e-15));
    CHECK(SeriesFamily(ctx, FamilyKind::hprime).coefficient(1) ==
          doctest::Approx(-1.4).epsilon(1e-15));
    CHECK(SeriesFamily(ctx, FamilyKind::delta).coefficient(1) ==
          doctest::Approx(-6.3).epsilon(1e-15));
    CHECK(SeriesFamily(ctx, FamilyKind::theta).coefficient(1) ==
          doctest::Approx(-2.8).epsilon(1e-15));
}

TEST_CASE("coefficients alternate in sign for the first 100 terms") {
    // signbit-based: past n ~ 90 the magnitudes underflow but the sign of
    // the (sub)normal value still alternates
    for (auto ctx : {ctx15(), ctx25(), EvaluationContext({0, 1, 0}, 1.0),
                     EvaluationContext({1, 2, 2}, 0.5)}) {
        for (FamilyKind k :
             {FamilyKind::psi, FamilyKind::psi1, FamilyKind::gprime,
              FamilyKind::hprime, FamilyKind::delta, FamilyKind::theta}) {
            SeriesFamily fam(ctx, k);
            for (std::size_t n = 0; n < 100; ++n) {
                CHECK(std::signbit(fam.coefficient(n)) !=
                      std::signbit(fam.coefficient(n + 1)));
                // the raw product itself underflows past n ~ 40
                if (n < 40) CHECK(fam.coefficient(n) * fam.coefficient(n + 1) < 0.0);
            }
        }
    }
}

TEST_CASE("coefficient ratio decays (entire function)") {
    SeriesFamily psi(ctx15(), FamilyKind::psi);
    const double r50 = std::abs(psi.coefficient(51) / psi.coefficient(50));
    const double r10 = std::abs(psi.coefficient(11) / psi.coefficient(10));
    CHECK(r50 < r10);
    CHECK(r50 < 1e-3);
}

TEST_CASE("exact derivative identities between family coefficients") {
    auto ctx = ctx25();
    SeriesFamily gp(ctx, FamilyKind::gprime), dl(ctx, FamilyKind::delta);
    SeriesFamily hp(ctx, FamilyKind::hprime), th(ctx, FamilyKind::theta);
    for (std::size_t n = 0; n <= 100; ++n) {
        CHECK(dl.coefficient(n) == (2.0 * n + 1.0) * gp.coefficient(n));
        CHECK(th.coefficient(n) == (n + 1.0) * hp.coefficient(n));
    }
}

TEST_CASE("eval: anchors and limits") {
    SUBCASE("z = 0 gives exactly 1") {
        for (FamilyKind k : {FamilyKind::psi, FamilyKind::gprime, FamilyKind::theta})
            CHECK(SeriesFamily(ctx15(), k).eval(0.0).value == 1.0);
    }
    SUBCASE("gprime nearly vanishes at its tabulated first zero") {
        // 0.7188 is delta_1 to four decimals
        auto v = SeriesFamily(ctx15(), FamilyKind::gprime).eval(0.7188);
        CHECK(std::abs(v.value) < 1e-3);
        CHECK(v.value > 0.0);  // just below the zero
    }
    SUBCASE("theta nearly vanishes at 1.138 for nu = 2.5") {
        auto v = SeriesFamily(ctx25(), FamilyKind::theta).eval(1.138);
        CHECK(std::abs(v.value) < 1e-3);
    }
    SUBCASE("complex eval agrees with real eval on the real axis") {
        SeriesFamily psi(ctx15(), FamilyKind::psi);
        const std::complex<double> z{0.9, 0.0};
        CHECK(psi.eval(z).value.real() == doctest::Approx(psi.eval(0.9).value));
        CHECK(psi.eval(z).value.imag() == 0.0);
    }
}

TEST_CASE("eval: error paths and cancellation metadata") {
    SeriesFamily psi(ctx15(), FamilyKind::psi);
    SUBCASE("domain cap enforced") {
        CHECK_THROWS_AS(psi.eval(150.0), InvalidParameters);
    }
    SUBCASE("term budget exhaustion reported") {
        // |z|^2/4 = 900 term floor exceeds the 500-term default budget
        CHECK_THROWS_AS(psi.eval(60.0), TruncationFailure);
    }
    SUBCASE("cancellation flag set deep in the oscillatory range") {
        auto v = psi.eval(40.0);
        CHECK(v.cancellation);
    }
    SUBCASE("no cancellation flag near the origin") {
        CHECK_FALSE(psi.eval(1.0).cancellation);
    }
}

TEST_CASE("psi1 requires nu != 0") {
    EvaluationContext ctx({1, 2, 2}, 0.0);
    CHECK_THROWS_AS(SeriesFamily(ctx, FamilyKind::psi1), InvalidParameters);
}

TEST_CASE("log_deriv_n") {
    auto ctx = ctx15();
    SUBCASE("limit at zero is nu") {
        CHECK(log_deriv_n(ctx, 1e-8).value == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("vanishes at the tabulated f starlikeness radius") {
        CHECK(std::abs(log_deriv_n(ctx, 0.8231).value) < 1e-3);
    }
    SUBCASE("complex overload is conjugate-symmetric") {
        const std::complex<double> z{0.4, 0.3};
        const auto v = log_deriv_n(ctx, z).value;
        const auto vc = log_deriv_n(ctx, std::conj(z)).value;
        CHECK(v.real() == doctest::Approx(vc.real()).epsilon(1e-14));
        CHECK(v.imag() == doctest::Approx(-vc.imag()).epsilon(1e-14));
    }
}

TEST_CASE("log_deriv_np") {
    SUBCASE("limit at zero is nu - 1") {
        CHECK(log_deriv_np(ctx25(), 1e-8).value ==
              doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("f convexity combination vanishes at the tabulated radius") {
        auto ctx = ctx25();
        const double r = 1.0057;
        const double v = 1.0 + log_deriv_np(ctx, r).value +
                         (1.0 / 2.5 - 1.0) * log_deriv_n(ctx, r).value;
        CHECK(std::abs(v) < 1e-3);
    }
}

TEST_CASE("derivative relation between psi and psi1") {
    // d/dz [z^nu psi(z)] = nu z^(nu-1) psi1(z)
    auto ctx = ctx15();
    SeriesFamily psi(ctx, FamilyKind::psi), psi1(ctx, FamilyKind::psi1);
    const double nu = ctx.nu();
    for (double z : {0.2, 0.7, 1.3, 2.1, 2.9}) {
        const double h = 1e-6;
        const auto phi = [&](double x) {
            return std::pow(x, nu) * psi.eval(x).value;
        };
        const double lhs = (phi(z + h) - phi(z - h)) / (2.0 * h);
        const double rhs = nu * std::pow(z, nu - 1.0) * psi1.eval(z).value;
        CHECK(std::abs(lhs - rhs) <= 1e-7 * std::abs(rhs));
    }
}

TEST_CASE("special case (0,1,0): psi zeros are the J' zeros") {
    // first positive zero of J_1' is 1.84118...
    EvaluationContext ctx({0, 1, 0}, 1.0);
    SeriesFamily psi(ctx, FamilyKind::psi);
    CHECK(psi.eval(1.84).value * psi.eval(1.85).value < 0.0);
}

TEST_CASE("coefficient cache is safe under concurrent evaluation") {
    EvaluationContext ctx({2, 1, 0}, 1.5);  // copies share one cache
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([ctx, t, &mismatches]() {
            SeriesFamily psi(ctx, FamilyKind::psi);
            for (int i = 0; i < 50; ++i) {
                const double z = 0.1 + 0.07 * ((i + 13 * t) % 40);
                const double v = psi.eval(z).value;
                const double again = psi.eval(z).value;
                if (v != again) ++mismatches;
            }
            // force deep cache extension from several threads at once
            (void)psi.coefficient(120 + static_cast<std::size_t>(t));
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches.load() == 0);
    CHECK(SeriesFamily(ctx, FamilyKind::psi).coefficient(1) ==
          doctest::Approx(-0.7).epsilon(1e-15));
}
