#include "jtp/families.hpp"

#include <cmath>

#include "jtp/errors.hpp"
#include "jtp/sampling.hpp"

namespace jtp {

namespace {

// Inverse without the public precondition: FormIV is defined for every
// rank-2 input, including badly conditioned ones, and is evaluated as
// written there.
Herm2 inverse_unchecked(const Herm2& x) {
    double d = determinant(x);
    return Herm2(x.c / d, -x.b / d, x.a / d);
}

} // namespace

bool tilde_has_conj(TildeVariant t) {
    return t == TildeVariant::ConjA || t == TildeVariant::ConjInvA ||
           t == TildeVariant::EtaConjA || t == TildeVariant::EtaConjInvA;
}

bool tilde_has_inv(TildeVariant t) {
    return t == TildeVariant::InvA || t == TildeVariant::ConjInvA ||
           t == TildeVariant::EtaInvA || t == TildeVariant::EtaConjInvA;
}

bool tilde_has_eta(TildeVariant t) {
    return t == TildeVariant::EtaA || t == TildeVariant::EtaConjA ||
           t == TildeVariant::EtaInvA || t == TildeVariant::EtaConjInvA;
}

TildeVariant make_tilde(bool inv, bool conj, bool has_eta) {
    if (has_eta) {
        if (inv) return conj ? TildeVariant::EtaConjInvA : TildeVariant::EtaInvA;
        return conj ? TildeVariant::EtaConjA : TildeVariant::EtaA;
    }
    if (inv) return conj ? TildeVariant::ConjInvA : TildeVariant::InvA;
    return conj ? TildeVariant::ConjA : TildeVariant::A;
}

FamilySpec make_form_i(const Unitary2& u, const ScalarJtpHom& hom1, const ScalarJtpHom& hom2) {
    return FormI{u, hom1, hom2};
}

FamilySpec make_form_ii(int sign, const Unitary2& u) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +-1");
    return FormII{sign, u};
}

FamilySpec make_form_iii(int sign, const Unitary2& u) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +-1");
    return FormIII{sign, u};
}

FamilySpec make_form_iv(int sign, const Unitary2& u, const MultiplicativeModel& beta,
                        TildeVariant tilde) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +-1");
    if (beta.domain != MultDomain::NonZeroReals)
        throw DomainError("FormIV beta must live on NonZeroReals");
    if (!beta.unital() || eval_mult(beta, 1.0) != 1.0)
        throw NonUnitalBeta("FormIV beta must satisfy beta(1) = 1");
    return FormIV{sign, u, beta, tilde};
}

Herm2 eval_family(const FamilySpec& spec, const Herm2& a) {
    if (const auto* f1 = std::get_if<FormI>(&spec)) {
        return conjugate(f1->u,
                         Herm2::diag(eval_scalar_hom(f1->hom1, a), eval_scalar_hom(f1->hom2, a)));
    }
    if (const auto* f2 = std::get_if<FormII>(&spec)) {
        return static_cast<double>(f2->sign) * conjugate(f2->u, a);
    }
    if (const auto* f3 = std::get_if<FormIII>(&spec)) {
        return static_cast<double>(f3->sign) * conjugate(f3->u, entrywise_conj(a));
    }
    const auto& f4 = std::get<FormIV>(spec);
    if (rank_of(a) <= 1) return Herm2::zero();
    Herm2 t = tilde_has_inv(f4.tilde) ? inverse_unchecked(a) : a;
    if (tilde_has_conj(f4.tilde)) t = entrywise_conj(t);
    double factor = static_cast<double>(f4.sign) * eval_mult(f4.beta, determinant(a));
    if (tilde_has_eta(f4.tilde)) factor *= eta(a);
    return factor * conjugate(f4.u, t);
}

const std::vector<FamilySpec>& canonical_suite() {
    static const std::vector<FamilySpec> suite = [] {
        constexpr std::uint64_t kSuiteSeed = 20260819;
        auto ur = [&](std::uint64_t k) { return sample_unitary(derive_seed(kSuiteSeed, k)); };
        const Unitary2 id = Unitary2::identity();
        const Unitary2 s = Unitary2::s_matrix();
        const auto nonneg = MultDomain::NonNegReals;
        const auto nonzero = MultDomain::NonZeroReals;
        const MultiplicativeModel one_nz = MultiplicativeModel::one(nonzero);
        const MultiplicativeModel pow1 = MultiplicativeModel::power(nonzero, 1.0);
        const MultiplicativeModel pow_m1_signed = MultiplicativeModel::power(nonzero, -1.0, -1);
        auto hom = [&](MultiplicativeModel psi, int e0, int e1, int e2) {
            return ScalarJtpHom(psi, EtaTable(e0, e1, e2));
        };
        const MultiplicativeModel zero_nn = MultiplicativeModel::zero(nonneg);
        const MultiplicativeModel one_nn = MultiplicativeModel::one(nonneg);
        const MultiplicativeModel p1 = MultiplicativeModel::power(nonneg, 1.0);
        const MultiplicativeModel p2 = MultiplicativeModel::power(nonneg, 2.0);

        std::vector<FamilySpec> v;
        // Unitary similarities and their negatives.
        v.push_back(make_form_ii(+1, id));
        v.push_back(make_form_ii(-1, s));
        v.push_back(make_form_ii(+1, ur(0)));
        v.push_back(make_form_iii(+1, id));
        v.push_back(make_form_iii(-1, s));
        v.push_back(make_form_iii(-1, ur(1)));
        // All eight tilde variants across the three beta shapes.
        v.push_back(make_form_iv(+1, id, one_nz, TildeVariant::A));
        v.push_back(make_form_iv(+1, s, pow1, TildeVariant::ConjA));
        v.push_back(make_form_iv(+1, ur(2), pow_m1_signed, TildeVariant::InvA));
        v.push_back(make_form_iv(+1, id, pow1, TildeVariant::ConjInvA));
        v.push_back(make_form_iv(+1, s, one_nz, TildeVariant::EtaA));
        v.push_back(make_form_iv(+1, ur(2), pow1, TildeVariant::EtaConjA));
        v.push_back(make_form_iv(+1, id, pow_m1_signed, TildeVariant::EtaInvA));
        v.push_back(make_form_iv(+1, s, one_nz, TildeVariant::EtaConjInvA));
        v.push_back(make_form_iv(-1, id, pow1, TildeVariant::A));
        // Diagonal-pair family: constant involution image.
        v.push_back(make_form_i(ur(3), hom(one_nn, +1, +1, +1), hom(one_nn, -1, -1, -1)));
        // Pinned column: image of 0 has rank 1.
        v.push_back(make_form_i(ur(4), hom(one_nn, -1, -1, -1), hom(p1, +1, +1, +1)));
        // Nonscalar involution image of I.
        v.push_back(make_form_i(ur(5), hom(p1, +1, +1, +1), hom(p2, -1, -1, -1)));
        // Scalar image on the indefinite involutions.
        v.push_back(make_form_i(ur(6), hom(p1, +1, -1, +1), hom(p2, -1, -1, +1)));
        // Degenerate, nonscalar image of a scalar input.
        v.push_back(make_form_i(ur(7), hom(p1, +1, -1, +1), hom(p2, +1, +1, +1)));
        // Degenerate, commuting images: diag(alpha(det), alpha(|det|)).
        v.push_back(make_form_i(ur(8), hom(p1, +1, -1, +1), hom(p1, +1, +1, +1)));
        // Zero map.
        v.push_back(make_form_i(id, hom(zero_nn, +1, +1, +1), hom(zero_nn, +1, +1, +1)));
        return v;
    }();
    return suite;
}

const char* family_name(const FamilySpec& spec) {
    switch (spec.index()) {
        case 0: return "i";
        case 1: return "ii";
        case 2: return "iii";
        default: return "iv";
    }
}

} // namespace jtp
