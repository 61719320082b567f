#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jtp/evaluatable.hpp"
#include "jtp/families.hpp"

namespace jtp {

struct ClassificationReport {
    std::vector<std::string> branch_path;
    FamilySpec fitted = FormII{+1, Unitary2::identity()};
    double fit_residual{0};
    std::string gauge_note;
};

/// The fixed 40-matrix probe set classification evaluates on (22 structured
/// probes plus 18 seeded random Hermitians). Order is stable; gauge
/// comparisons and transcripts use the same list.
const std::vector<Herm2>& probe_set();

/// The 20 seeded (A, B) pairs used for the law spot check. classify also
/// evaluates the map at A, B and A B A for each pair, and nowhere else
/// outside probe_set().
const std::vector<std::pair<Herm2, Herm2>>& spot_check_pairs();

/// Decision-tree classification of a black-box map into a canonical family
/// member. Throws NotAHomomorphism when the law spot check fails,
/// UnrecognizedMultiplicative when scalar samples fit no multiplicative
/// model, and InconsistentProbes when probe images contradict every branch.
ClassificationReport classify(const EvaluatableMap& m, double tol = 1e-8);

/// Extensional equality on the probe set: max scale-normalized Frobenius
/// deviation <= tol.
bool gauge_equivalent(const FamilySpec& s1, const FamilySpec& s2, double tol = 1e-8);

} // namespace jtp
