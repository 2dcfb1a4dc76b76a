#include <doctest.h>

#include <cmath>

#include "nradii/zeros.hpp"

using namespace nradii;

TEST_CASE("find_zeros reproduces the J_1' zeros for (0,1,0)") {
    EvaluationContext ctx({0, 1, 0}, 1.0);
    auto cat = find_zeros(SeriesFamily(ctx, FamilyKind::psi), 3, 1e-12);
    REQUIRE(cat.zeros.size() == 3);
    CHECK(cat.zeros[0] == doctest::Approx(1.8411837813406593).epsilon(1e-10));
    CHECK(cat.zeros[1] == doctest::Approx(5.3314427735250326).epsilon(1e-10));
    CHECK(cat.zeros[2] == doctest::Approx(8.5363163663462858).epsilon(1e-10));
}

TEST_CASE("first zeros of the derived families") {
    EvaluationContext c15({2, 1, 0}, 1.5);
    EvaluationContext c25({2, 1, 0}, 2.5);
    CHECK(find_zeros(SeriesFamily(c15, FamilyKind::gprime), 1).zeros[0] ==
          doctest::Approx(0.71886779522489208).epsilon(1e-10));
    CHECK(find_zeros(SeriesFamily(c15, FamilyKind::hprime), 1).zeros[0] ==
          doctest::Approx(0.80096140749975154).epsilon(1e-10));
    CHECK(find_zeros(SeriesFamily(c25, FamilyKind::theta), 1).zeros[0] ==
          doctest::Approx(1.1386476358163288).epsilon(1e-10));
    CHECK(find_zeros(SeriesFamily(c25, FamilyKind::delta), 1).zeros[0] ==
          doctest::Approx(0.68396600614503718).epsilon(1e-10));
}

TEST_CASE("catalog invariants") {
    EvaluationContext ctx({2, 1, 0}, 1.5);
    SeriesFamily psi(ctx, FamilyKind::psi);
    auto cat = find_zeros(psi, 5, 1e-12);
    REQUIRE(cat.zeros.size() == 5);

    for (std::size_t i = 0; i + 1 < cat.zeros.size(); ++i)
        CHECK(cat.zeros[i] < cat.zeros[i + 1]);

    for (double z : cat.zeros) {
        // every zero is simple: the sign flips across it
        CHECK(psi.eval(z - 1e-6).value * psi.eval(z + 1e-6).value < 0.0);
        // residual bounded by slope x achieved tolerance
        const double slope =
            (psi.eval(z + 1e-6).value - psi.eval(z - 1e-6).value) / 2e-6;
        CHECK(std::abs(psi.eval(z).value) <=
              10.0 * std::abs(slope) * cat.refined_tol);
    }
}

TEST_CASE("interlacing_check") {
    SUBCASE("holds for (0,1,0), nu = 1") {
        EvaluationContext ctx({0, 1, 0}, 1.0);
        auto lam = find_zeros(SeriesFamily(ctx, FamilyKind::psi), 5);
        auto lamp = find_zeros(SeriesFamily(ctx, FamilyKind::psi1), 5);
        auto rep = interlacing_check(lam, lamp);
        CHECK(rep.pass);
        CHECK(rep.pairs_checked == 5);
    }
    SUBCASE("holds for (2,1,0), nu = 1.5") {
        EvaluationContext ctx({2, 1, 0}, 1.5);
        auto lam = find_zeros(SeriesFamily(ctx, FamilyKind::psi), 5);
        auto lamp = find_zeros(SeriesFamily(ctx, FamilyKind::psi1), 5);
        CHECK(interlacing_check(lam, lamp).pass);
    }
    SUBCASE("swapped catalogs violate at k = 1") {
        EvaluationContext ctx({2, 1, 0}, 1.5);
        auto lam = find_zeros(SeriesFamily(ctx, FamilyKind::psi), 3);
        auto lamp = find_zeros(SeriesFamily(ctx, FamilyKind::psi1), 3);
        auto rep = interlacing_check(lamp, lam);  // deliberately swapped
        CHECK_FALSE(rep.pass);
        CHECK(rep.violation_index == 1);
    }
}

TEST_CASE("find_zeros error paths") {
    EvaluationContext ctx({2, 1, 0}, 1.5);
    SeriesFamily psi(ctx, FamilyKind::psi);
    CHECK_THROWS_AS(find_zeros(psi, 0), InvalidParameters);
    CHECK_THROWS_AS(find_zeros(psi, 1, 1e-15), InvalidParameters);

    SUBCASE("scan ceiling reached short of the requested count") {
        EvaluationPolicy pol;
        pol.domain_cap = 30.0;  // about nine zeros fit below it
        EvaluationContext capped({2, 1, 0}, 1.5, pol);
        CHECK_THROWS_AS(find_zeros(SeriesFamily(capped, FamilyKind::psi), 50),
                        ScanExhausted);
    }
    SUBCASE("truncation failures propagate from the evaluator") {
        // with the default term budget the series gives out near |z| ~ 45,
        // before fifty zeros have been seen
        CHECK_THROWS_AS(find_zeros(psi, 50), TruncationFailure);
    }
}

TEST_CASE("partial reciprocal-square sum stays below the closed form") {
    // positive omitted tail
    EvaluationContext ctx({2, 1, 0}, 1.5);
    auto cat = find_zeros(SeriesFamily(ctx, FamilyKind::psi), 10);
    double sum = 0.0;
    for (double z : cat.zeros) sum += 1.0 / (z * z);
    CHECK(sum < 0.7);
    CHECK(sum > 0.6);  // the first few zeros already dominate
}
