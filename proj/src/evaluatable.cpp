#include "jtp/evaluatable.hpp"

#include <utility>

#include "jtp/errors.hpp"

namespace jtp {

EvaluatableMap map_from_spec(const FamilySpec& spec) {
    return [spec](const Herm2& a) { return eval_family(spec, a); };
}

EvaluatableMap map_from_transcript(std::vector<TranscriptEntry> entries, double match_tol) {
    return [entries = std::move(entries), match_tol](const Herm2& a) {
        for (const TranscriptEntry& e : entries) {
            if (frobenius(e.in - a) <= match_tol * std::max(1.0, frobenius(a))) return e.out;
        }
        throw InconsistentProbes("transcript has no entry for a required probe");
    };
}

} // namespace jtp
