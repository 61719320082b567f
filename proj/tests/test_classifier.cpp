#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"

#include "jtp/classifier.hpp"
#include "jtp/errors.hpp"
#include "jtp/evaluatable.hpp"
#include "jtp/families.hpp"
#include "jtp/io.hpp"
#include "jtp/sampling.hpp"

using jtp::EtaTable;
using jtp::FamilySpec;
using jtp::Herm2;
using jtp::MultDomain;
using jtp::MultiplicativeModel;

namespace {

// All inputs classify() may evaluate: the probe set plus the spot-check
// triples.
std::vector<jtp::TranscriptEntry> record_transcript(const FamilySpec& s) {
    std::vector<jtp::TranscriptEntry> entries;
    auto add = [&](const Herm2& in) {
        entries.push_back({in, jtp::eval_family(s, in)});
    };
    for (const Herm2& p : jtp::probe_set()) add(p);
    for (const auto& [a, b] : jtp::spot_check_pairs()) {
        add(a);
        add(b);
        add(jtp::jordan_triple(a, b));
    }
    return entries;
}

bool path_contains(const jtp::ClassificationReport& rep, const std::string& step) {
    for (const auto& s : rep.branch_path)
        if (s == step) return true;
    return false;
}

} // namespace

TEST_CASE("probe set and spot pairs are stable") {
    const auto& probes = jtp::probe_set();
    REQUIRE(probes.size() == 40);
    CHECK(jtp::frobenius(probes[0]) == 0.0);
    CHECK(jtp::frobenius(probes[1] - Herm2::identity()) == 0.0);
    CHECK(jtp::frobenius(probes[12] - Herm2::diag(2, 1)) == 0.0);
    CHECK(jtp::frobenius(probes[19] - Herm2::diag(2, 0.5)) == 0.0);
    CHECK(jtp::spot_check_pairs().size() == 20);

    // Distinct probes: transcript lookup relies on it.
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = i + 1; j < probes.size(); ++j)
            CHECK(jtp::frobenius(probes[i] - probes[j]) > 1e-9);
}

TEST_CASE("classification roundtrips every canonical suite member") {
    const auto& suite = jtp::canonical_suite();
    for (std::size_t k = 0; k < suite.size(); ++k) {
        CAPTURE(k);
        jtp::ClassificationReport rep = jtp::classify(jtp::map_from_spec(suite[k]), 1e-8);
        CHECK(rep.fit_residual <= 1e-8);
        CHECK(jtp::gauge_equivalent(suite[k], rep.fitted, 1e-8));
    }
}

TEST_CASE("classification touches only the probe set and spot pairs") {
    const auto& suite = jtp::canonical_suite();
    for (std::size_t k = 0; k < suite.size(); ++k) {
        CAPTURE(k);
        auto transcript = record_transcript(suite[k]);
        jtp::ClassificationReport rep =
            jtp::classify(jtp::map_from_transcript(transcript), 1e-8);
        CHECK(jtp::gauge_equivalent(suite[k], rep.fitted, 1e-8));
    }
}

TEST_CASE("classification is deterministic") {
    const FamilySpec& s = jtp::canonical_suite()[2];
    jtp::ClassificationReport r1 = jtp::classify(jtp::map_from_spec(s), 1e-8);
    jtp::ClassificationReport r2 = jtp::classify(jtp::map_from_spec(s), 1e-8);
    CHECK(jtp::io::dump_pinned(jtp::io::classification_to_json(r1)) ==
          jtp::io::dump_pinned(jtp::io::classification_to_json(r2)));
}

TEST_CASE("branch paths hit the expected cases") {
    const auto& suite = jtp::canonical_suite();
    auto path_of = [&](std::size_t k) {
        return jtp::classify(jtp::map_from_spec(suite[k]), 1e-8);
    };
    CHECK(path_contains(path_of(0), "nondegenerate"));   // unitary similarity
    CHECK(path_contains(path_of(3), "nondegenerate"));   // conjugated similarity
    CHECK(path_contains(path_of(6), "noncommuting-det-scaled"));
    CHECK(path_contains(path_of(15), "Phi0-rank2-constant"));
    CHECK(path_contains(path_of(16), "Phi0-rank1-pinned"));
    CHECK(path_contains(path_of(17), "PhiI-nonscalar-involution"));
    CHECK(path_contains(path_of(18), "PhiJ-scalar"));
    CHECK(path_contains(path_of(19), "scalar-input-nonscalar-image"));
    CHECK(path_contains(path_of(20), "commuting-diagonal-pair"));
    CHECK(path_contains(path_of(21), "PhiI-zero-map"));
    CHECK(path_contains(path_of(14), "PhiI-negative-identity"));
}

TEST_CASE("global sign recovery on a negated diagonal pair") {
    jtp::ScalarJtpHom neg(MultiplicativeModel::power(MultDomain::NonNegReals, 1),
                          EtaTable(-1, -1, -1));
    FamilySpec s = jtp::make_form_i(jtp::sample_unitary(jtp::derive_seed(21, 0)), neg, neg);
    jtp::ClassificationReport rep = jtp::classify(jtp::map_from_spec(s), 1e-8);
    CHECK(path_contains(rep, "PhiI-negative-identity"));
    CHECK(jtp::gauge_equivalent(s, rep.fitted, 1e-8));
}

TEST_CASE("gauge freedom: swapped diagonal-pair columns describe the same map") {
    jtp::ScalarJtpHom h1(MultiplicativeModel::power(MultDomain::NonNegReals, 1),
                         EtaTable(+1, +1, +1));
    jtp::ScalarJtpHom h2(MultiplicativeModel::power(MultDomain::NonNegReals, 2),
                         EtaTable(-1, -1, -1));
    jtp::Unitary2 u = jtp::sample_unitary(jtp::derive_seed(22, 0));
    jtp::Mat2 p;
    p.at(0, 1) = {1, 0};
    p.at(1, 0) = {1, 0};
    jtp::Unitary2 swapped{u.u * p};
    FamilySpec a = jtp::make_form_i(u, h1, h2);
    FamilySpec b = jtp::make_form_i(swapped, h2, h1);
    CHECK(jtp::gauge_equivalent(a, b, 1e-8));
    FamilySpec c = jtp::make_form_i(u, h2, h1);
    CHECK_FALSE(jtp::gauge_equivalent(a, c, 1e-8));
}

TEST_CASE("determinant-scaled representations can alias across variants") {
    // beta(x) = 1/x with the inverse variant equals beta(x) = x^-2 with the
    // entrywise-conjugation variant; the classifier must land on an
    // extensionally equivalent spec.
    FamilySpec s = jtp::make_form_iv(
        +1, jtp::sample_unitary(jtp::derive_seed(23, 0)),
        MultiplicativeModel::power(MultDomain::NonZeroReals, -1, -1), jtp::TildeVariant::InvA);
    jtp::ClassificationReport rep = jtp::classify(jtp::map_from_spec(s), 1e-8);
    CHECK(rep.fit_residual <= 1e-8);
    CHECK(jtp::gauge_equivalent(s, rep.fitted, 1e-8));
}

TEST_CASE("a perturbed map is rejected as not a homomorphism") {
    const FamilySpec& s = jtp::canonical_suite()[0];
    Herm2 bump(1e-3, {3e-4, 4e-4}, -5e-4);
    jtp::EvaluatableMap m = [&](const Herm2& a) { return jtp::eval_family(s, a) + bump; };
    CHECK_THROWS_AS(jtp::classify(m, 1e-8), jtp::NotAHomomorphism);
}

TEST_CASE("a transcript missing required probes is rejected") {
    std::vector<jtp::TranscriptEntry> tiny = {{Herm2::identity(), Herm2::identity()}};
    CHECK_THROWS_AS(jtp::classify(jtp::map_from_transcript(tiny), 1e-8),
                    jtp::InconsistentProbes);
}

TEST_CASE("a corrupted diagonal component is flagged as unrecognized") {
    // Corrupt the image of one positive diagonal probe, inside the member's
    // own eigenframe so the image stays diagonal there, by enough that no
    // power law fits. The spot-check pairs stay intact.
    const FamilySpec& member = jtp::canonical_suite()[17];
    auto transcript = record_transcript(member);
    const jtp::Unitary2& frame = std::get<jtp::FormI>(member).u;
    Herm2 bump = jtp::conjugate(frame, Herm2::diag(0.9, 0));
    for (auto& e : transcript) {
        if (jtp::frobenius(e.in - Herm2::diag(2, 1)) == 0.0) {
            e.out = e.out + bump;
        }
    }
    CHECK_THROWS_AS(jtp::classify(jtp::map_from_transcript(transcript), 1e-8),
                    jtp::UnrecognizedMultiplicative);
}

TEST_CASE("an inadmissible image of the identity is flagged as inconsistent") {
    auto transcript = record_transcript(jtp::canonical_suite()[0]);
    for (auto& e : transcript) {
        if (jtp::frobenius(e.in - Herm2::identity()) == 0.0) {
            e.out = Herm2::diag(0.5, 1.0);
        }
    }
    CHECK_THROWS_AS(jtp::classify(jtp::map_from_transcript(transcript), 1e-8),
                    jtp::InconsistentProbes);
}
