#include <doctest.h>

#include <cmath>
#include <random>

#include "nradii/model.hpp"

using namespace nradii;

TEST_CASE("eval_q matches direct arithmetic") {
    CoefficientTriple k{2, 1, 0};
    CHECK(eval_q(k, 1.5) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(eval_q(k, 3.5) == doctest::Approx(21.0).epsilon(1e-15));
    CHECK(eval_q({1.3, 2.7, 5.5}, 0.0) == 5.5);  // both nu terms vanish
}

TEST_CASE("largest_root") {
    SUBCASE("quadratic with real roots") {
        auto t = largest_root({2, 1, 0});  // 2v^2 - v, roots {0, 0.5}
        REQUIRE(t.nu0.has_value());
        CHECK(*t.nu0 == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(t.threshold == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("no real root degenerates to 0") {
        auto t = largest_root({1, 2, 2});  // v^2 + v + 2, discriminant -7
        CHECK_FALSE(t.nu0.has_value());
        CHECK(t.threshold == 0.0);
    }
    SUBCASE("linear case") {
        auto t = largest_root({0, 1, 0});  // Q = v
        REQUIRE(t.nu0.has_value());
        CHECK(*t.nu0 == doctest::Approx(0.0));
        CHECK(t.threshold == 0.0);
    }
    SUBCASE("inadmissible triple rejected") {
        CHECK_THROWS_AS(largest_root({1, 1, 0}), InvalidParameters);
        CHECK_THROWS_AS(largest_root({2, 1, 1}), InvalidParameters);  // c>0, a>b
        CHECK_THROWS_AS(largest_root({0, 0, -1}), InvalidParameters);
    }
}

TEST_CASE("validate_context") {
    SUBCASE("accepted above threshold") {
        EvaluationContext ctx({2, 1, 0}, 1.5);
        CHECK(ctx.verified());
        CHECK(ctx.threshold() == doctest::Approx(0.5));
        CHECK(ctx.q_at_nu() == doctest::Approx(3.0));
        // policy defaults
        CHECK(ctx.policy().tolerance == 1e-15);
        CHECK(ctx.policy().max_terms == 500);
        CHECK(ctx.policy().domain_cap == 100.0);
    }
    SUBCASE("order below threshold rejected") {
        CHECK_THROWS_WITH_AS(validate_context({2, 1, 0}, 0.3),
                             doctest::Contains("below threshold"),
                             InvalidParameters);
    }
    SUBCASE("inadmissible triple rejected with reason") {
        CHECK_THROWS_WITH_AS(validate_context({0, 0, 1}, 1.0),
                             doctest::Contains("inadmissible"),
                             InvalidParameters);
    }
    SUBCASE("Q(nu) = 0 rejected even on the boundary") {
        CHECK_THROWS_WITH_AS(validate_context({2, 1, 0}, 0.5),
                             doctest::Contains("Q(nu)"), InvalidParameters);
    }
    SUBCASE("allow_unverified accepts exploratory orders") {
        EvaluationPolicy pol;
        pol.allow_unverified = true;
        EvaluationContext ctx({2, 1, 0}, 0.3, pol);
        CHECK_FALSE(ctx.verified());
    }
    SUBCASE("exact boundary accepted when Q does not vanish there") {
        // no real root -> threshold 0, Q(0) = c = 2
        EvaluationContext ctx({1, 2, 2}, 0.0);
        CHECK(ctx.verified());
    }
}

TEST_CASE("base terms follow the ratio recurrence") {
    EvaluationContext ctx({2, 1, 0}, 1.5);
    CHECK(ctx.base_term(0) == 1.0);
    CHECK(ctx.base_term(1) == doctest::Approx(-0.7).epsilon(1e-15));
    CHECK(ctx.base_term(2) ==
          doctest::Approx(0.065476190476190476).epsilon(1e-15));
}

TEST_CASE("property: Q vanishes at its largest root") {
    std::mt19937 rng(987123u);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> pos(0.1, 3.0);
    int tested = 0;
    while (tested < 200) {
        CoefficientTriple k{coef(rng), 0, 0};
        k.b = k.a + pos(rng);                    // q > 0
        k.c = (tested % 2) ? pos(rng) : 0.0;     // mix both admissible branches
        if (!k.admissible() || k.a == 0.0) continue;
        auto t = largest_root(k);
        if (!t.nu0.has_value()) {
            ++tested;
            continue;
        }
        const double scale =
            std::max({1.0, std::abs(k.a), std::abs(k.b), std::abs(k.c)});
        CHECK(std::abs(eval_q(k, *t.nu0)) <= 1e-12 * scale);
        // no root beyond nu0: Q keeps the sign of a past the largest root
        const double beyond = eval_q(k, *t.nu0 + 0.5);
        CHECK(beyond * k.a > 0.0);
        ++tested;
    }
}

TEST_CASE("property: threshold is monotone under c -> c + delta") {
    std::mt19937 rng(5150u);
    std::uniform_real_distribution<double> coef(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        CoefficientTriple k{coef(rng), 0, coef(rng)};
        k.b = k.a + coef(rng);  // a < b, c > 0
        const double t0 = largest_root(k).threshold;
        CoefficientTriple k2 = k;
        k2.c += coef(rng);
        CHECK(largest_root(k2).threshold <= t0 + 1e-12);
    }
}

TEST_CASE("property: admissibility is total with a reason") {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 500; ++i) {
        CoefficientTriple k{coef(rng), coef(rng), coef(rng)};
        if (i % 7 == 0) k.c = 0.0;
        const bool ok = k.admissible();
        CHECK(ok == (std::string(k.rejection_reason()).empty()));
    }
}
