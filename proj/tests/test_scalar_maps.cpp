#include <cmath>

#include "doctest.h"

#include "jtp/errors.hpp"
#include "jtp/sampling.hpp"
#include "jtp/scalar_maps.hpp"

using jtp::EtaTable;
using jtp::MultDomain;
using jtp::MultiplicativeModel;

TEST_CASE("multiplicative models are multiplicative on their domain") {
    std::vector<MultiplicativeModel> models = {
        MultiplicativeModel::zero(MultDomain::NonNegReals),
        MultiplicativeModel::one(MultDomain::NonNegReals),
        MultiplicativeModel::indicator(MultDomain::NonNegReals),
        MultiplicativeModel::power(MultDomain::NonNegReals, 2),
        MultiplicativeModel::power(MultDomain::NonNegReals, -1),
        MultiplicativeModel::one(MultDomain::NonZeroReals),
        MultiplicativeModel::power(MultDomain::NonZeroReals, 1, -1),
        MultiplicativeModel::power(MultDomain::NonZeroReals, -2, +1),
    };
    const double xs[] = {0.3, 1.0, 2.5, 7.0};
    for (const auto& m : models) {
        for (double x : xs) {
            for (double y : xs) {
                double lhs = jtp::eval_mult(m, x * y);
                double rhs = jtp::eval_mult(m, x) * jtp::eval_mult(m, y);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
            }
            if (m.domain == MultDomain::NonZeroReals) {
                double ln = jtp::eval_mult(m, -x);
                CHECK(std::abs(ln - m.neg_sign * jtp::eval_mult(m, x)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("multiplicative model values at frozen points") {
    CHECK(jtp::eval_mult(MultiplicativeModel::zero(MultDomain::NonNegReals), 3.0) == 0.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::one(MultDomain::NonNegReals), 0.0) == 1.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::indicator(MultDomain::NonNegReals), 0.0) == 0.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::indicator(MultDomain::NonNegReals), 5.0) == 1.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::power(MultDomain::NonNegReals, 2), 3.0) == 9.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::power(MultDomain::NonNegReals, -1), 0.0) == 0.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::power(MultDomain::NonZeroReals, 1, -1), -2.0) ==
          -2.0);
    CHECK(jtp::eval_mult(MultiplicativeModel::power(MultDomain::NonZeroReals, 3, +1), -2.0) ==
          8.0);
}

TEST_CASE("multiplicative model domain violations throw") {
    CHECK_THROWS_AS(jtp::eval_mult(MultiplicativeModel::one(MultDomain::NonNegReals), -1.0),
                    jtp::DomainError);
    CHECK_THROWS_AS(jtp::eval_mult(MultiplicativeModel::one(MultDomain::NonZeroReals), 0.0),
                    jtp::DomainError);
    CHECK_THROWS_AS(MultiplicativeModel::power(MultDomain::NonNegReals, 0), jtp::DomainError);
    CHECK_THROWS_AS(MultiplicativeModel::power(MultDomain::NonNegReals, 1, 2), jtp::DomainError);
}

TEST_CASE("eta tables validate and evaluate") {
    EtaTable t(-1, +1, -1);
    CHECK(t(0) == -1);
    CHECK(t(1) == +1);
    CHECK(t(2) == -1);
    CHECK_THROWS_AS(EtaTable(0, 1, 1), jtp::DomainError);
    CHECK_THROWS_AS(t(3), jtp::DomainError);
}

TEST_CASE("scalar maps satisfy the triple-product identity on sampled pairs") {
    std::vector<jtp::ScalarJtpHom> homs;
    homs.emplace_back(MultiplicativeModel::power(MultDomain::NonNegReals, 1),
                      EtaTable(+1, -1, +1));
    homs.emplace_back(MultiplicativeModel::power(MultDomain::NonNegReals, -1),
                      EtaTable(-1, -1, +1));
    homs.emplace_back(MultiplicativeModel::indicator(MultDomain::NonNegReals),
                      EtaTable(-1, +1, -1));
    for (const auto& h : homs) {
        for (int i = 0; i < 300; ++i) {
            auto [a, b] = jtp::sample_regular_pair(99, i);
            double lhs = jtp::eval_scalar_hom(h, jtp::jordan_triple(a, b));
            double fa = jtp::eval_scalar_hom(h, a);
            double fb = jtp::eval_scalar_hom(h, b);
            CHECK(std::abs(lhs - fa * fa * fb) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("scalar map rejects a wrong psi domain") {
    CHECK_THROWS_AS(jtp::ScalarJtpHom(MultiplicativeModel::one(MultDomain::NonZeroReals), {}),
                    jtp::DomainError);
}

TEST_CASE("functional equation holds exactly for the two unit powers") {
    for (double p : {1.0, -1.0}) {
        MultiplicativeModel gamma = MultiplicativeModel::power(MultDomain::NonNegReals, p);
        for (int i = 1; i <= 100; ++i) {
            jtp::FeCheckResult r = jtp::fe_check(gamma, 0.1 * i, 1e-10);
            CHECK(r.holds);
        }
    }
}

TEST_CASE("functional equation fails for the square with a frozen gap") {
    MultiplicativeModel gamma = MultiplicativeModel::power(MultDomain::NonNegReals, 2);
    jtp::FeCheckResult r = jtp::fe_check(gamma, 7.0, 1e-10);
    CHECK_FALSE(r.holds);
    // lhs = ((7 - 1 + sqrt(100)) / 8)^2 = 4 exactly; rhs computed from
    // gamma(7) = 49.
    CHECK(r.lhs == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(2.3462178760930765).epsilon(1e-14));
    CHECK(std::abs(r.lhs - r.rhs) > 1.0);
    CHECK(std::abs(r.lhs - r.rhs) ==
          doctest::Approx(1.6537821239069235).epsilon(1e-13));
}

TEST_CASE("functional equation rejects nonpositive grid points") {
    MultiplicativeModel gamma = MultiplicativeModel::power(MultDomain::NonNegReals, 1);
    CHECK_THROWS_AS(jtp::fe_check(gamma, 0.0, 1e-10), jtp::DomainError);
    CHECK_THROWS_AS(jtp::fe_check(gamma, -2.0, 1e-10), jtp::DomainError);
}

TEST_CASE("power fit recovers exponents and flags bad data") {
    jtp::PowerFit f1 = jtp::fit_power_exponent({{2.0, 0.5}, {4.0, 0.25}}, 1e-9);
    CHECK_FALSE(f1.constant_one);
    CHECK(f1.p == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(f1.residual <= 1e-12);

    jtp::PowerFit f2 = jtp::fit_power_exponent({{2.0, 1.0}, {5.0, 1.0}}, 1e-9);
    CHECK(f2.constant_one);

    jtp::PowerFit f3 =
        jtp::fit_power_exponent({{2.0, 4.0}, {3.0, 9.0}, {0.5, 0.25}}, 1e-9);
    CHECK(f3.p == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(jtp::fit_power_exponent({{2.0, 1.0}}, 1e-9), jtp::DomainError);
    CHECK_THROWS_AS(jtp::fit_power_exponent({{2.0, 1.0}, {2.0, 1.0}}, 1e-9), jtp::DomainError);
    CHECK_THROWS_AS(jtp::fit_power_exponent({{2.0, -1.0}, {3.0, 2.0}}, 1e-9),
                    jtp::NonPositiveValue);
    CHECK_THROWS_AS(jtp::fit_power_exponent({{-2.0, 1.0}, {3.0, 2.0}}, 1e-9), jtp::DomainError);
}
