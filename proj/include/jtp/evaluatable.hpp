#pragma once

#include <functional>
#include <vector>

#include "jtp/families.hpp"
#include "jtp/herm2.hpp"

namespace jtp {

/// Black-box evaluation capability A |-> Phi(A).
using EvaluatableMap = std::function<Herm2(const Herm2&)>;

EvaluatableMap map_from_spec(const FamilySpec& spec);

struct TranscriptEntry {
    Herm2 in;
    Herm2 out;
};

/// Finite-table map. Inputs are matched within match_tol in Frobenius norm;
/// a lookup miss throws InconsistentProbes (the classifier only ever
/// evaluates inside its published probe set, so a covering transcript never
/// misses).
EvaluatableMap map_from_transcript(std::vector<TranscriptEntry> entries,
                                   double match_tol = 1e-12);

} // namespace jtp
