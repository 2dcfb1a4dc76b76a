#include <doctest.h>

#include <cmath>
#include <random>

#include "nradii/bounds.hpp"
#include "nradii/zeros.hpp"

using namespace nradii;

namespace {
EvaluationContext ctx15() { return {{2, 1, 0}, 1.5}; }
EvaluationContext ctx25() { return {{2, 1, 0}, 2.5}; }
}  // namespace

TEST_CASE("rayleigh_sums closed forms") {
    auto [inv2, inv4] = rayleigh_sums(ctx15());
    CHECK(inv2 == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(inv4 == doctest::Approx(0.35904761904761905).epsilon(1e-14));

    auto [t2, t4] = rayleigh_sums(EvaluationContext({0, 1, 0}, 1.0));
    CHECK(t2 == doctest::Approx(0.375).epsilon(1e-15));  // (nu+2)/(4 nu (nu+1))
    CHECK(t4 == doctest::Approx(0.088541666666666667).epsilon(1e-14));
}

TEST_CASE("coefficient_sums: Newton values") {
    auto sig = coefficient_sums(SeriesFamily(ctx15(), FamilyKind::gprime), 4);
    CHECK(sig.newton[0] == doctest::Approx(2.1).epsilon(1e-14));
    CHECK(sig.newton[1] == doctest::Approx(3.7552380952380952).epsilon(1e-13));
    CHECK(sig.newton[2] == doctest::Approx(7.2471111111111111).epsilon(1e-13));

    auto om = coefficient_sums(SeriesFamily(ctx25(), FamilyKind::theta), 2);
    CHECK(om.newton[0] == doctest::Approx(36.0 / 35.0).epsilon(1e-14));
    CHECK(om.newton[1] == doctest::Approx(0.77938775510204082).epsilon(1e-13));

    auto rho = coefficient_sums(SeriesFamily(ctx15(), FamilyKind::hprime), 3);
    CHECK(rho.newton[0] == doctest::Approx(1.4).epsilon(1e-14));
    CHECK(rho.newton[1] == doctest::Approx(1.5671428571428571).epsilon(1e-13));
    CHECK(rho.newton[2] == doctest::Approx(1.9467777777777778).epsilon(1e-13));
}

TEST_CASE("published closed forms match Newton where they are sound") {
    auto sig = coefficient_sums(SeriesFamily(ctx15(), FamilyKind::gprime), 3);
    CHECK(sig.published[0] == doctest::Approx(sig.newton[0]).epsilon(1e-13));
    CHECK(sig.published[1] == doctest::Approx(sig.newton[1]).epsilon(1e-13));
    // sigma_3 as printed disagrees
    CHECK(std::abs(sig.published[2] - sig.newton[2]) > 1.0);

    auto rho = coefficient_sums(SeriesFamily(ctx15(), FamilyKind::hprime), 3);
    for (int k = 0; k < 3; ++k)
        CHECK(rho.published[k] == doctest::Approx(rho.newton[k]).epsilon(1e-13));
}

TEST_CASE("property: Cauchy-Schwarz on the zero measure") {
    // S_k S_{k+2} >= S_{k+1}^2; monotonicity in k is NOT asserted (false in
    // general).
    for (FamilyKind kind : {FamilyKind::gprime, FamilyKind::hprime,
                            FamilyKind::delta, FamilyKind::theta}) {
        auto s = coefficient_sums(SeriesFamily(ctx15(), kind), 6);
        for (std::size_t k = 0; k + 2 < s.newton.size(); ++k)
            CHECK(s.newton[k] * s.newton[k + 2] >=
                  s.newton[k + 1] * s.newton[k + 1] * (1.0 - 1e-12));
        for (double v : s.newton) CHECK(v > 0.0);
    }
}

TEST_CASE("property: sound closed forms agree with Newton across a grid") {
    // kappa_2, omega_2 and the k = 3 sigma/kappa/omega displays carry typos
    // (see the audit); the remaining forms must track Newton everywhere.
    std::mt19937 rng(1618u);
    std::uniform_real_distribution<double> pick(0.2, 3.0);
    for (int i = 0; i < 20; ++i) {
        CoefficientTriple k{pick(rng), 0, (i % 2) ? pick(rng) : 0.0};
        k.b = k.a + pick(rng);
        const double nu = largest_root(k).threshold + 0.05 + pick(rng);
        EvaluationContext ctx(k, nu);
        const auto entries = published_form_audit(ctx);
        for (const auto& e : entries) {
            const bool sound =
                e.name == "sigma_1" || e.name == "sigma_2" ||
                e.name == "rho_1" || e.name == "rho_2" || e.name == "rho_3" ||
                e.name == "kappa_1" || e.name == "omega_1" ||
                e.name == "kreyszig_todd_g";
            if (sound) {
                INFO(e.name, " at a=", k.a, " b=", k.b, " c=", k.c,
                     " nu=", nu);
                CHECK(e.match);
            }
        }
    }
}

TEST_CASE("bound_brackets: pinned values and structure") {
    auto set = bound_brackets(ctx15(), BoundTarget::starlike_g, 4);
    REQUIRE(set.brackets.size() == 4);
    CHECK(set.brackets[0].lower == doctest::Approx(0.69006555934235416).epsilon(1e-9));
    CHECK(set.brackets[1].lower == doctest::Approx(0.71836).epsilon(2e-5));
    CHECK(set.brackets[1].upper == doctest::Approx(0.74781).epsilon(2e-5));

    SUBCASE("nested in k") {
        for (std::size_t i = 0; i + 1 < set.brackets.size(); ++i) {
            CHECK(set.brackets[i + 1].lower >= set.brackets[i].lower);
            CHECK(set.brackets[i + 1].upper <= set.brackets[i].upper);
        }
    }
    SUBCASE("contains the first gprime zero") {
        const double d1 =
            find_zeros(SeriesFamily(ctx15(), FamilyKind::gprime), 1).zeros[0];
        for (const auto& b : set.brackets) {
            CHECK(b.lower < d1);
            CHECK(d1 < b.upper);
        }
    }
    SUBCASE("kreyszig-todd ceilings") {
        CHECK(set.kreyszig_todd.has_value());
        CHECK(*set.kreyszig_todd ==
              doctest::Approx(0.84515425472851657).epsilon(1e-12));
        auto sh = bound_brackets(ctx15(), BoundTarget::starlike_h, 2);
        CHECK(sh.kreyszig_todd.has_value());
        CHECK(*sh.kreyszig_todd == doctest::Approx(1.0 / 0.7).epsilon(1e-12));
        CHECK_FALSE(bound_brackets(ctx15(), BoundTarget::convex_g, 2)
                        .kreyszig_todd.has_value());
    }
}

TEST_CASE("convex_h bracket at k = 1 (nu = 2.5)") {
    auto set = bound_brackets(ctx25(), BoundTarget::convex_h, 1);
    REQUIRE(set.brackets.size() == 1);
    CHECK(set.brackets[0].lower == doctest::Approx(0.97222222222222221).epsilon(1e-9));
    CHECK(set.brackets[0].upper == doctest::Approx(1.3197172026509574).epsilon(1e-9));
}

TEST_CASE("convex_h brackets contain the theta first zero at nu = 1.5 too") {
    for (CoefficientTriple k :
         {CoefficientTriple{2, 1, 0}, {1, 2, 0}, {1, 2, 2}}) {
        EvaluationContext ctx(k, 1.5);
        const double l1 =
            find_zeros(SeriesFamily(ctx, FamilyKind::theta), 1).zeros[0];
        for (const auto& b : bound_brackets(ctx, BoundTarget::convex_h, 4).brackets) {
            CHECK(b.lower < l1);
            CHECK(l1 < b.upper);
        }
    }
}

TEST_CASE("published_form_audit flags the known discrepancies") {
    auto entries = published_form_audit(ctx15());

    const auto find = [&](const std::string& name) -> const AuditEntry& {
        for (const auto& e : entries)
            if (e.name == name) return e;
        REQUIRE(false);
        return entries.front();
    };

    CHECK(find("sigma_1").match);
    CHECK(find("sigma_2").match);
    CHECK_FALSE(find("sigma_3").match);
    CHECK(find("rho_3").match);
    CHECK_FALSE(find("kappa_2").match);
    CHECK_FALSE(find("kappa_3").match);

    const auto& om2 = find("omega_2");
    CHECK_FALSE(om2.match);
    CHECK(om2.published_value == doctest::Approx(18.421428571428571).epsilon(1e-12));
    CHECK(om2.newton_value == doctest::Approx(6.6614285714285715).epsilon(1e-12));

    const auto& kth = find("kreyszig_todd_h");
    CHECK_FALSE(kth.match);
    CHECK(kth.published_value == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
    CHECK(kth.newton_value == doctest::Approx(10.0 / 7.0).epsilon(1e-12));

    CHECK(find("kreyszig_todd_g").match);
    CHECK_FALSE(find("starlike_h_k1_lower").match);
}

TEST_CASE("audit report is deterministic") {
    const std::string a = format_audit_report(ctx15());
    const std::string b = format_audit_report(ctx15());
    CHECK(a == b);
    CHECK(a.find("omega_2") != std::string::npos);
    CHECK(a.find("MISMATCH") != std::string::npos);
}

TEST_CASE("kmax validation") {
    SeriesFamily gp(ctx15(), FamilyKind::gprime);
    CHECK_THROWS_AS(coefficient_sums(gp, 0), InvalidParameters);
    CHECK_THROWS_AS(coefficient_sums(gp, 13), InvalidParameters);
    CHECK_NOTHROW(coefficient_sums(gp, 12));
}
