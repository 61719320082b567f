#pragma once

#include <variant>
#include <vector>

#include "jtp/herm2.hpp"
#include "jtp/scalar_maps.hpp"

namespace jtp {

/// The eight rank-preserving transforms used by FormIV:
/// base A or A^-1, optionally entrywise conjugated, optionally multiplied by
/// eta(A) (+1 unless negative definite).
enum class TildeVariant { A, ConjA, InvA, ConjInvA, EtaA, EtaConjA, EtaInvA, EtaConjInvA };

bool tilde_has_conj(TildeVariant t);
bool tilde_has_inv(TildeVariant t);
bool tilde_has_eta(TildeVariant t);
TildeVariant make_tilde(bool inv, bool conj, bool has_eta);

/// A |-> U diag(hom1(A), hom2(A)) U*.
struct FormI {
    Unitary2 u;
    ScalarJtpHom hom1, hom2;
};

/// A |-> sign U A U*.
struct FormII {
    int sign{+1};
    Unitary2 u;
};

/// A |-> sign U conj(A) U*.
struct FormIII {
    int sign{+1};
    Unitary2 u;
};

/// A |-> sign beta(det A) U tilde(A) U* for rank-2 A, 0 otherwise.
/// beta lives on NonZeroReals and must be unital.
struct FormIV {
    int sign{+1};
    Unitary2 u;
    MultiplicativeModel beta = MultiplicativeModel::one(MultDomain::NonZeroReals);
    TildeVariant tilde{TildeVariant::A};
};

using FamilySpec = std::variant<FormI, FormII, FormIII, FormIV>;

FamilySpec make_form_i(const Unitary2& u, const ScalarJtpHom& hom1, const ScalarJtpHom& hom2);
FamilySpec make_form_ii(int sign, const Unitary2& u);
FamilySpec make_form_iii(int sign, const Unitary2& u);
/// Throws NonUnitalBeta when beta(1) != 1 and DomainError when beta does not
/// live on NonZeroReals.
FamilySpec make_form_iv(int sign, const Unitary2& u, const MultiplicativeModel& beta,
                        TildeVariant tilde);

Herm2 eval_family(const FamilySpec& spec, const Herm2& a);

/// Fixed, deterministic list of family members spanning every branch the
/// classifier can reach: both signs of FormII/FormIII over identity, S and
/// sampled frames; all eight FormIV tilde variants over the three beta
/// shapes; and FormI instances for the constant, pinned-column, mixed
/// involution image, scalar image and both degenerate sub-branches.
const std::vector<FamilySpec>& canonical_suite();

/// Lowercase family tag "i" / "ii" / "iii" / "iv".
const char* family_name(const FamilySpec& spec);

} // namespace jtp
