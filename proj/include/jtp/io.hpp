#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "jtp/classifier.hpp"
#include "jtp/evaluatable.hpp"
#include "jtp/families.hpp"
#include "jtp/herm2.hpp"
#include "jtp/scalar_maps.hpp"
#include "jtp/verifier.hpp"

namespace jtp::io {

// Insertion-ordered JSON so emitted field order is the declaration order.
using Json = nlohmann::ordered_json;

// Serialization with a pinned number format: every floating-point value is
// rendered with %.17g so repeated runs are byte-identical and round-trips
// are lossless. Two-space indent, no trailing newline.
std::string dump_pinned(const Json& j, int indent = 2);

// Wraps the underlying parser; malformed text throws ParseError.
Json parse_text(const std::string& text);

Json matrix_to_json(const Herm2& x);
Herm2 matrix_from_json(const Json& j);

Json unitary_to_json(const Unitary2& u);
Unitary2 unitary_from_json(const Json& j);

Json mult_model_to_json(const MultiplicativeModel& m);
MultiplicativeModel mult_model_from_json(const Json& j);

Json eta_to_json(const EtaTable& t);
EtaTable eta_from_json(const Json& j);

Json scalar_hom_to_json(const ScalarJtpHom& h);
ScalarJtpHom scalar_hom_from_json(const Json& j);

Json family_to_json(const FamilySpec& s);
FamilySpec family_from_json(const Json& j);

Json transcript_to_json(const std::vector<TranscriptEntry>& entries);
std::vector<TranscriptEntry> transcript_from_json(const Json& j);

Json involution_param_to_json(const InvolutionParam& p);
InvolutionParam involution_param_from_json(const Json& j);

Json verification_to_json(const VerificationReport& rep);
Json properties_to_json(const std::vector<PropertyResult>& props);
Json classification_to_json(const ClassificationReport& rep);

} // namespace jtp::io
