#include <cmath>
#include <set>

#include "doctest.h"

#include "jtp/errors.hpp"
#include "jtp/families.hpp"
#include "jtp/sampling.hpp"
#include "jtp/scalar_maps.hpp"

using jtp::EtaTable;
using jtp::FamilySpec;
using jtp::Herm2;
using jtp::MultDomain;
using jtp::MultiplicativeModel;
using jtp::TildeVariant;

TEST_CASE("canonical suite spans all forms and tilde variants") {
    const auto& suite = jtp::canonical_suite();
    CHECK(suite.size() >= 12);
    std::set<std::string> forms;
    std::set<TildeVariant> tildes;
    for (const auto& s : suite) {
        forms.insert(jtp::family_name(s));
        if (const auto* f4 = std::get_if<jtp::FormIV>(&s)) tildes.insert(f4->tilde);
    }
    CHECK(forms == std::set<std::string>{"i", "ii", "iii", "iv"});
    CHECK(tildes.size() == 8);
}

TEST_CASE("every suite member satisfies the law on sampled regular pairs") {
    const auto& suite = jtp::canonical_suite();
    for (const auto& s : suite) {
        for (int i = 0; i < 100; ++i) {
            auto [a, b] = jtp::sample_regular_pair(1234, i);
            Herm2 lhs = jtp::eval_family(s, jtp::jordan_triple(a, b));
            Herm2 rhs = jtp::jordan_triple(jtp::eval_family(s, a), jtp::eval_family(s, b));
            CHECK(jtp::frobenius(lhs - rhs) <= 1e-9 * std::max(1.0, jtp::frobenius(lhs)));
        }
    }
}

TEST_CASE("similarity forms preserve or negate the spectrum") {
    jtp::Unitary2 u = jtp::sample_unitary(jtp::derive_seed(5, 0));
    FamilySpec plus = jtp::make_form_ii(+1, u);
    FamilySpec minus = jtp::make_form_iii(-1, u);
    for (int i = 0; i < 100; ++i) {
        Herm2 a = jtp::sample_hermitian(jtp::derive_seed(5, i, 1));
        auto [l1, l2] = jtp::eigenvalues(a);
        auto [p1, p2] = jtp::eigenvalues(jtp::eval_family(plus, a));
        CHECK(p1 == doctest::Approx(l1).epsilon(1e-10));
        CHECK(p2 == doctest::Approx(l2).epsilon(1e-10));
        auto [m1, m2] = jtp::eigenvalues(jtp::eval_family(minus, a));
        CHECK(m1 == doctest::Approx(-l2).epsilon(1e-10));
        CHECK(m2 == doctest::Approx(-l1).epsilon(1e-10));
    }
}

TEST_CASE("entrywise-conjugation form transposes the off-diagonal entry") {
    FamilySpec f3 = jtp::make_form_iii(+1, jtp::Unitary2::identity());
    Herm2 a(1, {2, 3}, -4);
    Herm2 img = jtp::eval_family(f3, a);
    CHECK(img.b == jtp::Complex{2, -3});
    CHECK(img.a == 1.0);
    CHECK(img.c == -4.0);
}

TEST_CASE("determinant-scaled form at frozen inputs") {
    FamilySpec direct = jtp::make_form_iv(+1, jtp::Unitary2::identity(),
                                          MultiplicativeModel::one(MultDomain::NonZeroReals),
                                          TildeVariant::A);
    CHECK(jtp::frobenius(jtp::eval_family(direct, Herm2::diag(2, 3)) - Herm2::diag(2, 3)) ==
          0.0);
    CHECK(jtp::frobenius(jtp::eval_family(direct, Herm2::diag(1, 0))) == 0.0);
    CHECK(jtp::frobenius(jtp::eval_family(direct, Herm2::zero())) == 0.0);

    FamilySpec inv = jtp::make_form_iv(+1, jtp::Unitary2::identity(),
                                       MultiplicativeModel::one(MultDomain::NonZeroReals),
                                       TildeVariant::InvA);
    CHECK(jtp::frobenius(jtp::eval_family(inv, Herm2::diag(2, 4)) - Herm2::diag(0.5, 0.25)) <=
          1e-15);

    // Power{1} beta with the direct variant rescales by the determinant.
    FamilySpec det_scaled = jtp::make_form_iv(
        +1, jtp::Unitary2::identity(),
        MultiplicativeModel::power(MultDomain::NonZeroReals, 1, +1), TildeVariant::A);
    CHECK(jtp::frobenius(jtp::eval_family(det_scaled, Herm2::diag(2, 3)) - Herm2::diag(12, 18)) <=
          1e-12);
    // det = -2 here; neg_sign +1 makes beta(-2) = 2.
    CHECK(jtp::frobenius(jtp::eval_family(det_scaled, Herm2::diag(-1, 2)) -
                         Herm2::diag(-2, 4)) <= 1e-12);

    // The eta variant flips the sign exactly on negative definite inputs.
    FamilySpec eta_v = jtp::make_form_iv(+1, jtp::Unitary2::identity(),
                                         MultiplicativeModel::one(MultDomain::NonZeroReals),
                                         TildeVariant::EtaA);
    CHECK(jtp::frobenius(jtp::eval_family(eta_v, Herm2::diag(-1, -2)) - Herm2::diag(1, 2)) ==
          0.0);
    CHECK(jtp::frobenius(jtp::eval_family(eta_v, Herm2::diag(1, 2)) - Herm2::diag(1, 2)) == 0.0);
    CHECK(jtp::frobenius(jtp::eval_family(eta_v, Herm2::diag(-1, 2)) - Herm2::diag(-1, 2)) ==
          0.0);
}

TEST_CASE("diagonal-pair form evaluates the two scalar components") {
    jtp::ScalarJtpHom h1(MultiplicativeModel::power(MultDomain::NonNegReals, 1),
                         EtaTable(+1, +1, +1));
    jtp::ScalarJtpHom h2(MultiplicativeModel::power(MultDomain::NonNegReals, 2),
                         EtaTable(-1, -1, -1));
    FamilySpec f1 = jtp::make_form_i(jtp::Unitary2::identity(), h1, h2);
    Herm2 img = jtp::eval_family(f1, Herm2::diag(2, 3));
    CHECK(img.a == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(img.c == doctest::Approx(-36.0).epsilon(1e-14));
    CHECK(std::abs(img.b) == 0.0);

    Herm2 at_zero = jtp::eval_family(f1, Herm2::zero());
    CHECK(jtp::frobenius(at_zero) == 0.0);
}

TEST_CASE("form iv rejects a beta that is not unital on nonzero reals") {
    CHECK_THROWS_AS(jtp::make_form_iv(+1, jtp::Unitary2::identity(),
                                      MultiplicativeModel::one(MultDomain::NonNegReals),
                                      TildeVariant::A),
                    jtp::DomainError);
    CHECK_THROWS_AS(jtp::make_form_iv(+1, jtp::Unitary2::identity(),
                                      MultiplicativeModel::zero(MultDomain::NonZeroReals),
                                      TildeVariant::A),
                    jtp::NonUnitalBeta);
}

TEST_CASE("tilde variant helpers roundtrip") {
    int count = 0;
    for (bool inv : {false, true}) {
        for (bool conj : {false, true}) {
            for (bool has_eta : {false, true}) {
                TildeVariant t = jtp::make_tilde(inv, conj, has_eta);
                CHECK(jtp::tilde_has_inv(t) == inv);
                CHECK(jtp::tilde_has_conj(t) == conj);
                CHECK(jtp::tilde_has_eta(t) == has_eta);
                ++count;
            }
        }
    }
    CHECK(count == 8);
}

TEST_CASE("suite members map involutions to cube roots of themselves") {
    const auto& suite = jtp::canonical_suite();
    for (const auto& s : suite) {
        for (int i = 0; i < 20; ++i) {
            Herm2 x = jtp::sample_involution(jtp::derive_seed(6, i));
            Herm2 fx = jtp::eval_family(s, x);
            Herm2 cube = jtp::jordan_triple(fx, fx);
            CHECK(jtp::frobenius(cube - fx) <= 1e-10 * std::max(1.0, jtp::frobenius(fx)));
        }
    }
}
