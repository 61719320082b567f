#include "jtp/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jtp/sampling.hpp"

namespace jtp {

namespace {

double relative_gap(const Herm2& lhs, const Herm2& rhs) {
    return frobenius(lhs - rhs) / std::max(1.0, frobenius(lhs));
}

std::string describe(const Herm2& x) {
    std::ostringstream os;
    os << "[a=" << x.a << " b=(" << x.b.real() << "," << x.b.imag() << ") c=" << x.c << "]";
    return os.str();
}

struct WorstTracker {
    double worst = 0;
    std::string detail;
    void feed(double r, const std::string& d) {
        if (r > worst) {
            worst = r;
            detail = d;
        }
    }
};

PropertyResult finish(const std::string& name, const WorstTracker& t, double tol) {
    return PropertyResult{name, t.worst <= tol, t.worst, t.detail};
}

Herm2 rank_one(std::uint64_t seed, double scale) {
    Unitary2 u = sample_unitary(derive_seed(seed, 0, 91));
    // Magnitude kept away from 0 so the sample has unambiguous rank 1.
    double lam = scale * (0.5 + 1.5 * ((derive_seed(seed, 1, 92) >> 11) * 0x1.0p-53));
    if (derive_seed(seed, 2, 93) & 1) lam = -lam;
    return conjugate(u, Herm2::diag(lam, 0));
}

} // namespace

VerificationReport verify_jtp(const EvaluatableMap& m, int n, std::uint64_t seed, double tol) {
    VerificationReport rep;
    rep.n_samples = n;
    for (int i = 0; i < n; ++i) {
        auto [a, b] = sample_regular_pair(seed, static_cast<std::uint64_t>(i));
        Herm2 lhs = m(jordan_triple(a, b));
        Herm2 rhs = jordan_triple(m(a), m(b));
        double r = frobenius(lhs - rhs) / std::max(1.0, frobenius(lhs));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.witness_a = a;
            rep.witness_b = b;
        }
    }
    rep.passed = rep.max_residual <= tol;
    return rep;
}

VerificationReport verify_jtp_on_pairs(const EvaluatableMap& m,
                                       const std::vector<std::pair<Herm2, Herm2>>& pairs,
                                       double tol) {
    VerificationReport rep;
    rep.n_samples = static_cast<int>(pairs.size());
    for (const auto& [a, b] : pairs) {
        Herm2 lhs = m(jordan_triple(a, b));
        Herm2 rhs = jordan_triple(m(a), m(b));
        double r = frobenius(lhs - rhs) / std::max(1.0, frobenius(lhs));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.witness_a = a;
            rep.witness_b = b;
        }
    }
    rep.passed = rep.max_residual <= tol;
    return rep;
}

std::vector<PropertyResult> verify_corollaries(const EvaluatableMap& m, std::uint64_t seed,
                                               double tol, const FamilySpec* known) {
    std::vector<PropertyResult> out;
    constexpr int kLawSamples = 200;
    constexpr int kSmallSamples = 100;

    {
        WorstTracker t;
        for (int i = 0; i < kLawSamples; ++i) {
            auto [a, b] = sample_regular_pair(seed, static_cast<std::uint64_t>(i));
            double r = relative_gap(m(jordan_triple(a, b)), jordan_triple(m(a), m(b)));
            t.feed(r, "A=" + describe(a) + " B=" + describe(b));
        }
        out.push_back(finish("triple-law", t, tol));
    }
    {
        WorstTracker t;
        for (int i = 0; i < kLawSamples; ++i) {
            Herm2 a = sample_regular_pair(seed, static_cast<std::uint64_t>(i), 1.0).first;
            Herm2 cube = jordan_triple(a, a);
            double r = relative_gap(m(cube), jordan_triple(m(a), m(a)));
            t.feed(r, "A=" + describe(a));
        }
        out.push_back(finish("power-compatibility", t, tol));
    }
    {
        WorstTracker t;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 x = sample_involution(derive_seed(seed, static_cast<std::uint64_t>(i), 7));
            Herm2 fx = m(x);
            double r = relative_gap(fx, jordan_triple(fx, fx));
            t.feed(r, "X=" + describe(x));
        }
        out.push_back(finish("involution-cube", t, tol));
    }
    {
        WorstTracker t;
        Herm2 z = m(Herm2::zero());
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 b = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 8));
            double r = relative_gap(z, jordan_triple(z, m(b)));
            t.feed(r, "B=" + describe(b));
        }
        out.push_back(finish("zero-absorption", t, tol));
    }
    {
        WorstTracker t;
        for (const Herm2& x : {m(Herm2::zero()), m(Herm2::identity())}) {
            auto [l1, l2] = eigenvalues(x);
            for (double l : {l1, l2}) {
                double d = std::min({std::abs(l + 1.0), std::abs(l), std::abs(l - 1.0)});
                t.feed(d, "eigenvalue " + std::to_string(l));
            }
        }
        out.push_back(finish("spectrum-soundness", t, tol));
    }

    if (known == nullptr) return out;

    if (std::holds_alternative<FormI>(*known)) {
        WorstTracker t;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 a = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 9));
            Unitary2 v = sample_unitary(derive_seed(seed, static_cast<std::uint64_t>(i), 10));
            double r = relative_gap(m(a), m(conjugate(v, a)));
            t.feed(r, "A=" + describe(a));
        }
        out.push_back(finish("unitary-invariance", t, tol));

        WorstTracker tc;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 a = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 11));
            Herm2 b = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 12));
            Mat2 fa = to_mat(m(a));
            Mat2 fb = to_mat(m(b));
            double r = frobenius(fa * fb - fb * fa) /
                       std::max(1.0, frobenius(m(a)) * frobenius(m(b)));
            tc.feed(r, "A=" + describe(a) + " B=" + describe(b));
        }
        out.push_back(finish("commuting-images", tc, tol));
    }

    if (std::holds_alternative<FormII>(*known) || std::holds_alternative<FormIII>(*known)) {
        WorstTracker td;
        WorstTracker ts;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 a = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 13));
            Herm2 fa = m(a);
            double dd = std::abs(determinant(fa) - determinant(a)) /
                        std::max(1.0, std::abs(determinant(a)));
            td.feed(dd, "A=" + describe(a));
            auto [l1, l2] = eigenvalues(a);
            auto [f1, f2] = eigenvalues(fa);
            // The similarity forms preserve the spectrum up to an overall
            // sign; compare as sets.
            double direct = std::max(std::abs(f1 - l1), std::abs(f2 - l2));
            double negated = std::max(std::abs(f1 + l2), std::abs(f2 + l1));
            ts.feed(std::min(direct, negated) / std::max(1.0, std::abs(l1) + std::abs(l2)),
                    "A=" + describe(a));
        }
        out.push_back(finish("determinant-preservation", td, tol));
        out.push_back(finish("spectrum-preservation", ts, tol));
    }

    if (std::holds_alternative<FormIV>(*known)) {
        const auto& f4 = std::get<FormIV>(*known);
        WorstTracker tr;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 p = rank_one(derive_seed(seed, static_cast<std::uint64_t>(i), 14), 1.0);
            tr.feed(frobenius(m(p)), "P=" + describe(p));
        }
        out.push_back(finish("rank1-annihilation", tr, tol));

        WorstTracker tp;
        double parity = tilde_has_eta(f4.tilde) ? +1.0 : -1.0;
        for (int i = 0; i < kSmallSamples; ++i) {
            Herm2 a = sample_hermitian(derive_seed(seed, static_cast<std::uint64_t>(i), 15));
            Herm2 pos = jordan_triple(a, Herm2::identity()) + Herm2::diag(0.1, 0.1);
            if (rank_of(pos) < 2) continue; // keep clear of the rank boundary
            double r = relative_gap(m(-1.0 * pos), parity * m(pos));
            tp.feed(r, "A=" + describe(pos));
        }
        out.push_back(finish("negation-parity", tp, tol));
    }

    return out;
}

double s_chain_residual(double coeff) {
    const double rt7 = std::sqrt(7.0);
    const double rt2 = std::sqrt(2.0);
    Herm2 s(1.0 / rt2, {1.0 / rt2, 0.0}, -1.0 / rt2);
    Herm2 d1 = Herm2::diag(1.0, -1.0 / 3.0);
    Herm2 d2 = Herm2::diag(1.0, 1.0 / rt7);
    Herm2 d3 = Herm2::diag((-7.0 + coeff * rt7) / rt2, (-7.0 - coeff * rt7) / rt2);
    Herm2 inner = jordan_triple(s, d3);
    Herm2 mid = jordan_triple(d2, inner);
    Herm2 outer = jordan_triple(s, mid);
    Herm2 chain = jordan_triple(d1, outer);
    return frobenius(chain - s);
}

bool s_chain_identity_check(double tol) { return s_chain_residual(5.0) <= tol; }

} // namespace jtp
