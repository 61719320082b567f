#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jtp/evaluatable.hpp"
#include "jtp/families.hpp"
#include "jtp/herm2.hpp"

namespace jtp {

// One derived property checked against a map. `worst` is the largest
// relative residual seen; `detail` describes the worst witness.
struct PropertyResult {
    std::string name;
    bool passed = false;
    double worst = 0;
    std::string detail;
};

struct VerificationReport {
    int n_samples = 0;
    double max_residual = 0;
    bool passed = false;
    Herm2 witness_a = Herm2::zero();
    Herm2 witness_b = Herm2::zero();
    std::vector<PropertyResult> properties;
};

// Checks the triple-product law Phi(ABA) = Phi(A) Phi(B) Phi(A) on n
// deterministically sampled well-conditioned pairs. Residuals are relative:
// ||lhs - rhs||_F / max(1, ||lhs||_F).
VerificationReport verify_jtp(const EvaluatableMap& m, int n, std::uint64_t seed, double tol);

// Same law on caller-provided pairs (transcript verification).
VerificationReport verify_jtp_on_pairs(const EvaluatableMap& m,
                                       const std::vector<std::pair<Herm2, Herm2>>& pairs,
                                       double tol);

// Derived consequences of the law: compatibility with powers, involution
// images, absorption at 0, spectra of the images of 0 and I. When `known`
// is non-null, form-specific invariants are checked as well (invariance
// under unitary similarity and commuting images for diagonal pairs,
// determinant and spectrum preservation for the similarity forms, rank-1
// annihilation and negation parity for the determinant-scaled form).
std::vector<PropertyResult> verify_corollaries(const EvaluatableMap& m, std::uint64_t seed,
                                               double tol, const FamilySpec* known = nullptr);

// Residual of the five-factor chain identity at the standard symmetry S:
// S = D1 S D2 S D3 S D2 S D1 with diagonal D1, D2, D3. `coeff` scales the
// sqrt(7) term of D3; the identity holds only at coeff = 5.
double s_chain_residual(double coeff = 5.0);
bool s_chain_identity_check(double tol);

} // namespace jtp
