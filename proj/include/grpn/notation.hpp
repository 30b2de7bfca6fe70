#pragma once

// Text and JSON forms: one-line notation "[z1*5,1,z2*3]", values "+z^k",
// multitableaux as nested arrays, and verification reports.

#include <string>
#include <string_view>

#include <json.hpp>

#include "grpn/group.hpp"
#include "grpn/rs.hpp"
#include "grpn/sign.hpp"
#include "grpn/tableau.hpp"

namespace grpn {

/// Parses element := "[" item ("," item)* "]", item := ("z" INT "*")? INT.
/// n is the item count; exponents are reduced mod r. Whitespace is ignored.
/// Throws ParseError on malformed text, plus make_element's errors.
GroupElement parse_element(std::string_view text, int r, int p = 1);
std::string format_element(const GroupElement& w);

/// "+z^k" or "-z^k".
std::string format_value(const OneDimValue& v);

nlohmann::json to_json(const StandardTableau& t);
nlohmann::json to_json(const Multitableau& t);
nlohmann::json to_json(const RSPair& pair);
nlohmann::json to_json(const VerificationReport& report);

/// Throws ParseError on structural problems, InvalidTableau on bad contents.
Multitableau multitableau_from_json(const nlohmann::json& j);
/// Accepts {"P": ..., "Q": ...} or [P, Q].
RSPair rs_pair_from_json(const nlohmann::json& j);

}  // namespace grpn
